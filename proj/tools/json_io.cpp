#include "json_io.hpp"

#include <vector>

namespace elim::io {

nlohmann::ordered_json to_json(const Matrix& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& q : m.entries()) entries.push_back(to_string(q));
  j["entries"] = std::move(entries);
  return j;
}

nlohmann::ordered_json to_json(const BasedComplex& c) {
  nlohmann::ordered_json j;
  j["dims"] = c.dims();
  auto boundaries = nlohmann::ordered_json::array();
  for (const auto& b : c.boundaries()) boundaries.push_back(to_json(b));
  j["boundaries"] = std::move(boundaries);
  return j;
}

namespace {

std::size_t count_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw FormatError(std::string("matrix: '") + key + "' must be a nonnegative integer");
  }
  return j[key].get<std::size_t>();
}

Rational entry_value(const nlohmann::json& e) {
  if (e.is_string()) {
    try {
      return parse_rational(e.get<std::string>());
    } catch (const ParseError& err) {
      throw FormatError(std::string("matrix entry: ") + err.what());
    }
  }
  if (e.is_number_integer()) return Rational(e.get<long>());
  throw FormatError("matrix entries must be \"p/q\" strings or integers");
}

}  // namespace

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("matrix must be a JSON object");
  const std::size_t rows = count_field(j, "rows");
  const std::size_t cols = count_field(j, "cols");
  if (!j.contains("entries") || !j["entries"].is_array()) throw FormatError("matrix: 'entries' must be an array");
  const auto& arr = j["entries"];
  if (arr.size() != rows * cols) {
    throw FormatError("matrix: expected " + std::to_string(rows * cols) + " entries, got " +
                      std::to_string(arr.size()));
  }
  std::vector<Rational> entries;
  entries.reserve(arr.size());
  for (const auto& e : arr) entries.push_back(entry_value(e));
  return Matrix(rows, cols, std::move(entries));
}

BasedComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("complex must be a JSON object");
  if (!j.contains("dims") || !j["dims"].is_array()) throw FormatError("complex: 'dims' must be an array");
  if (!j.contains("boundaries") || !j["boundaries"].is_array()) {
    throw FormatError("complex: 'boundaries' must be an array");
  }
  std::vector<std::size_t> dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_unsigned()) throw FormatError("complex: dims must be nonnegative integers");
    dims.push_back(d.get<std::size_t>());
  }
  std::vector<Matrix> boundaries;
  for (const auto& b : j["boundaries"]) boundaries.push_back(matrix_from_json(b));
  try {
    return BasedComplex(std::move(dims), std::move(boundaries));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

}  // namespace elim::io
