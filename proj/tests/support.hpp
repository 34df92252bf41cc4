#pragma once

#include "oracle/oracle.hpp"
#include "relbraid/braid_diagram.hpp"
#include "relbraid/homology_gf2.hpp"

#include <random>
#include <string>
#include <vector>

namespace support {

relbraid::DiscreteRelativeBraid load_fixture(const std::string& name);

// Example-2 skeleton concatenated l times; the free strand sits at 5/2 on even
// anchors and at the bottom (0), middle (1) or top (2) gap on odd anchors.
relbraid::DiscreteRelativeBraid example2_member(const std::vector<int>& odd_anchors);

// Random augmented fixture: `skeleton` strands besides the constants, d
// slices, distinct values at every slice (also after refine(., 2)), and n
// non-singular gap-separated free strands closing up on themselves.
relbraid::DiscreteRelativeBraid random_fixture(std::mt19937& rng, int skeleton, int d, int n = 1);

relbraid::ComponentHomology component_homology(const relbraid::DiscreteRelativeBraid& braid);

oracle::Fiber fiber_of(const relbraid::DiscreteRelativeBraid& braid);

// Every component of the braid's fiber in oracle terms, sorted.
std::vector<oracle::Component> library_components(const relbraid::DiscreteRelativeBraid& braid);

// Oracle components with chi cleared where it carries no meaning (improper or truncated), sorted.
std::vector<oracle::Component> comparable(std::vector<oracle::Component> components);

std::vector<int> random_word(std::mt19937& rng, int strands, int length);

}  // namespace support
