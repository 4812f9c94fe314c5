#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const auto result = elim::cli::run(args);
  if (!result.payload.is_null()) std::cout << result.payload.dump() << '\n';
  if (!result.diagnostics.empty()) {
    // --help text goes to stdout; everything else is a diagnostic.
    const bool help = result.status == elim::cli::Status::ok && result.payload.is_null();
    auto& stream = help ? std::cout : std::cerr;
    stream << result.diagnostics;
    if (result.diagnostics.back() != '\n') stream << '\n';
  }
  return result.exit_code();
}
