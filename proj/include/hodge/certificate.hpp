#pragma once

#include <string>

#include "json.hpp"

#include "hodge/exact_matrix.hpp"

namespace hodge {

/// Machine-checkable verdict. `passed` must be recomputable from `witness`
/// alone; the witness carries the ranks, values and matrices that decided it.
struct Certificate {
  std::string name;
  bool passed = false;
  std::string summary;
  nlohmann::json witness = nlohmann::json::object();
};

nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace hodge
