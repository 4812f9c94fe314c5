#pragma once

// JSON forms of matrices and based complexes.
//
//   Matrix:  {"rows": r, "cols": c, "entries": ["p/q", ...]}   (row-major)
//   Complex: {"dims": [...], "boundaries": [Matrix, ...]}

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "elim/complexes.hpp"

namespace elim::io {

/// Malformed JSON document or schema violation.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::ordered_json to_json(const Matrix& m);
nlohmann::ordered_json to_json(const BasedComplex& c);

Matrix matrix_from_json(const nlohmann::json& j);
BasedComplex complex_from_json(const nlohmann::json& j);

}  // namespace elim::io
