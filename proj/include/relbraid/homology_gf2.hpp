#pragma once

#include "relbraid/braid_complex.hpp"

#include <json.hpp>

#include <cstdint>
#include <vector>

namespace relbraid {

/// Relative chain complex of (N, N^-) over GF(2). Columns are sorted row
/// index lists; a row appears at most once per column.
struct ChainComplexGF2 {
  std::vector<std::vector<std::size_t>> basis;  // [dim] -> cell indices into the pair
  // boundary[k][col] = rows in basis[k-1]; boundary[0] is empty.
  std::vector<std::vector<std::vector<std::uint32_t>>> boundary;

  int top_dimension() const { return static_cast<int>(basis.size()) - 1; }
  std::size_t cells(int k) const;
};

ChainComplexGF2 build_chain_complex(const ComplexPair& pair);

// Rank of a GF(2) matrix given by sparse columns.
std::size_t gf2_rank(std::vector<std::vector<std::uint32_t>> columns);

// Throws InconsistencyError if some composite boundary is nonzero.
void check_boundary_squared(const ChainComplexGF2& complex);

std::vector<int> betti_numbers(const ChainComplexGF2& complex);

struct ComponentHomology {
  int id = 0;
  std::vector<int> betti;
  int euler = 0;
  int cell_euler = 0;
};

struct HomologyResult {
  std::vector<int> betti;  // summed over components
  int euler = 0;
  int cell_euler = 0;
  std::vector<ComponentHomology> components;
};

// Homology of one pair with every structural certificate checked.
ComponentHomology pair_homology(const ComplexPair& pair);

// Sums per-component results; throws InconsistencyError if euler != cell_euler.
HomologyResult euler_characteristic(std::vector<ComponentHomology> parts);

nlohmann::json to_json(const HomologyResult& result);

}  // namespace relbraid
