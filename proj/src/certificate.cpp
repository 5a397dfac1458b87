#include "hodge/certificate.hpp"

#include "hodge/errors.hpp"

namespace hodge {

nlohmann::json to_json(const Certificate& c) {
  return {{"name", c.name}, {"passed", c.passed}, {"summary", c.summary}, {"witness", c.witness}};
}

// Matrices are stored as row arrays of exact rational strings ("a" or "a/b").
nlohmann::json to_json(const ExactMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

ExactMatrix matrix_from_json(const nlohmann::json& j) {
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  ExactMatrix m(rows, cols);
  const auto& entries = j.at("entries");
  if (entries.size() != rows) throw PreconditionError("matrix_from_json: row count mismatch");
  for (std::size_t r = 0; r < rows; ++r) {
    if (entries[r].size() != cols) throw PreconditionError("matrix_from_json: column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_rational(entries[r][c].get<std::string>());
  }
  return m;
}

}  // namespace hodge
