#include "relbraid/homology_gf2.hpp"

#include "relbraid/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace relbraid {

std::size_t ChainComplexGF2::cells(int k) const {
  if (k < 0 || k > top_dimension()) return 0;
  return basis[static_cast<std::size_t>(k)].size();
}

ChainComplexGF2 build_chain_complex(const ComplexPair& pair) {
  if (!pair.exit_marked) throw InvalidInput("chain complex needs an exit-marked pair");
  ChainComplexGF2 complex;
  const int top = pair.top_dimension();
  complex.basis.resize(static_cast<std::size_t>(std::max(top, 0) + 1));
  std::vector<std::uint32_t> row_of(pair.size(), UINT32_MAX);
  for (std::size_t j = 0; j < pair.size(); ++j) {
    if (pair.in_exit[j]) continue;
    auto& level = complex.basis[static_cast<std::size_t>(pair.dims[j])];
    row_of[j] = static_cast<std::uint32_t>(level.size());
    level.push_back(j);
  }
  complex.boundary.resize(complex.basis.size());
  for (std::size_t k = 1; k < complex.basis.size(); ++k) {
    for (auto j : complex.basis[k]) {
      std::vector<std::uint32_t> column;
      for (auto face : pair.faces_of(j)) {
        if (face >= pair.size()) throw InconsistencyError("face missing from the closure");
        if (pair.dims[face] + 1 != pair.dims[j]) throw InconsistencyError("face of the wrong dimension");
        if (pair.in_exit[face]) continue;
        column.push_back(row_of[face]);
      }
      std::sort(column.begin(), column.end());
      complex.boundary[k].push_back(std::move(column));
    }
  }
  return complex;
}

namespace {

// Symmetric difference of two sorted lists.
std::vector<std::uint32_t> add_columns(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::size_t gf2_rank(std::vector<std::vector<std::uint32_t>> columns) {
  // Standard column reduction keyed on the lowest (largest) row index.
  std::unordered_map<std::uint32_t, std::size_t> pivot_of;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    auto& col = columns[c];
    while (!col.empty()) {
      auto it = pivot_of.find(col.back());
      if (it == pivot_of.end()) break;
      col = add_columns(col, columns[it->second]);
    }
    if (!col.empty()) {
      pivot_of.emplace(col.back(), c);
      ++rank;
    }
  }
  return rank;
}

void check_boundary_squared(const ChainComplexGF2& complex) {
  for (std::size_t k = 2; k < complex.boundary.size(); ++k) {
    for (const auto& column : complex.boundary[k]) {
      std::vector<std::uint32_t> acc;
      for (auto row : column) acc = add_columns(acc, complex.boundary[k - 1][row]);
      if (!acc.empty()) {
        throw InconsistencyError("boundary of a boundary is nonzero in degree " + std::to_string(k));
      }
    }
  }
}

std::vector<int> betti_numbers(const ChainComplexGF2& complex) {
  const std::size_t levels = complex.basis.size();
  std::vector<std::size_t> rank(levels + 1, 0);
  for (std::size_t k = 1; k < levels; ++k) rank[k] = gf2_rank(complex.boundary[k]);
  std::vector<int> betti(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    betti[k] = static_cast<int>(complex.basis[k].size() - rank[k] - rank[k + 1]);
  }
  return betti;
}

namespace {

int alternating(const std::vector<int>& values) {
  int sum = 0;
  for (std::size_t k = 0; k < values.size(); ++k) sum += (k % 2 == 0 ? 1 : -1) * values[k];
  return sum;
}

}  // namespace

ComponentHomology pair_homology(const ComplexPair& pair) {
  auto complex = build_chain_complex(pair);
  check_boundary_squared(complex);
  ComponentHomology out;
  out.id = pair.component;
  out.betti = betti_numbers(complex);
  out.euler = alternating(out.betti);
  for (std::size_t j = 0; j < pair.size(); ++j) {
    const int sign = pair.dims[j] % 2 == 0 ? 1 : -1;
    out.cell_euler += sign;
    if (pair.in_exit[j]) out.cell_euler -= sign;
  }
  if (out.euler != out.cell_euler) {
    throw InconsistencyError("Betti alternating sum " + std::to_string(out.euler) +
                             " differs from relative cell count " + std::to_string(out.cell_euler));
  }
  return out;
}

HomologyResult euler_characteristic(std::vector<ComponentHomology> parts) {
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  HomologyResult result;
  for (const auto& part : parts) {
    if (result.betti.size() < part.betti.size()) result.betti.resize(part.betti.size(), 0);
    for (std::size_t k = 0; k < part.betti.size(); ++k) result.betti[k] += part.betti[k];
    result.cell_euler += part.cell_euler;
  }
  result.euler = alternating(result.betti);
  if (result.euler != result.cell_euler) throw InconsistencyError("euler and cell_euler disagree");
  result.components = std::move(parts);
  return result;
}

nlohmann::json to_json(const HomologyResult& result) {
  nlohmann::json doc;
  doc["betti_gf2"] = result.betti;
  doc["euler"] = result.euler;
  doc["cell_euler"] = result.cell_euler;
  auto parts = nlohmann::json::array();
  for (const auto& part : result.components) {
    parts.push_back({{"id", part.id}, {"betti_gf2", part.betti}});
  }
  doc["per_component"] = std::move(parts);
  return doc;
}

}  // namespace relbraid
