#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace elim::cli {

enum class Status { ok, domain_error, usage_error };

struct CommandResult {
  Status status = Status::ok;
  nlohmann::ordered_json payload;  // null for --help
  std::string diagnostics;         // stderr text, or the help text on --help

  int exit_code() const {
    switch (status) {
      case Status::ok: return 0;
      case Status::domain_error: return 1;
      case Status::usage_error: return 2;
    }
    return 2;
  }
};

/// argv[0] is the program name. Never throws.
CommandResult run(std::span<const std::string> argv);

std::span<const std::string_view> subcommands();

/// Which subcommand exposes each library operation.
struct OperationRoute {
  std::string_view operation;
  std::string_view subcommand;
};
std::span<const OperationRoute> operation_routes();

}  // namespace elim::cli
