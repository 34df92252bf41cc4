#include "relbraid/braid_complex.hpp"
#include "relbraid/errors.hpp"
#include "relbraid/homology_gf2.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace relbraid;

namespace {

Strand strand(std::initializer_list<int> values) {
  Strand s;
  for (int v : values) s.emplace_back(v);
  return s;
}

Strand halves(std::initializer_list<int> twice) {
  Strand s;
  for (int v : twice) s.push_back(Rational(v, 2));
  return s;
}

std::vector<std::vector<int>> codes_of(const CodeCell& c) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(c.n));
  for (int a = 0; a < c.n; ++a) {
    for (int i = 0; i < c.d; ++i) out[static_cast<std::size_t>(a)].push_back(c.at(a, i));
  }
  return out;
}

}  // namespace

TEST_CASE("normalize codes free anchors by skeleton rank") {
  // free strand strictly between the constants of a lone swap
  auto single = augment(word_to_diagram(parse_word("1 1", 2, {0})));
  auto [grid, cell] = normalize(single);
  CHECK(grid.skeleton().m == 3);
  for (int code : cell.codes) CHECK(code % 2 == 1);

  // free anchor on a skeleton value with transverse neighbours
  DiscreteRelativeBraid through(3, {strand({0, 0, 0, 0}), strand({-5, -5, -5, -5}), strand({5, 5, 5, 5})},
                                {strand({-1, 0, 1, -1})});
  auto [g2, c2] = normalize(through);
  CHECK(codes_of(c2) == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(g2.classify(c2) == CellClass::interior);

  // two free strands in one gap
  DiscreteRelativeBraid crowded(2, {strand({0, 0, 0}), strand({9, 9, 9})},
                                {strand({2, 2, 2}), strand({3, 3, 3})});
  CHECK_THROWS_AS(normalize(crowded), GapSeparationError);

  CHECK_THROWS_AS(normalize(word_to_diagram(parse_word("1 1", 2, {0}))), InvalidInput);
}

TEST_CASE("classify uses the weak tangency inequality") {
  auto e1 = augment(support::load_fixture("example1"));
  auto [grid, cell] = normalize(e1);
  CHECK(grid.classify(cell) == CellClass::interior);  // all odd

  // slice 1 on Q1 (rank 2): flanks at slice 0 (= slice 2) are both below Q1 -> tangent
  CodeCell on_q1 = cell;
  on_q1.codes[1] = 4;
  CHECK(grid.classify(on_q1) == CellClass::tangent);
  CHECK(grid.tangencies(on_q1) == std::vector<std::pair<int, int>>{{0, 1}});

  // transverse: free goes from below to above the skeleton strand
  DiscreteRelativeBraid through(3, {strand({0, 0, 0, 0}), strand({-5, -5, -5, -5}), strand({5, 5, 5, 5})},
                                {strand({-1, 0, 1, -1})});
  auto [g2, c2] = normalize(through);
  CHECK(g2.sign(c2, 0, 0, 0) == -1);
  CHECK(g2.sign(c2, 0, 2, 0) == 1);
  CHECK(g2.classify(c2) == CellClass::interior);
  CodeCell out = c2;
  out.codes[0] = -1;
  CHECK(g2.classify(out) == CellClass::out);
}

TEST_CASE("packing round trip") {
  auto e3 = augment(support::load_fixture("example3"));
  auto [grid, cell] = normalize(e3);
  auto key = grid.pack(cell);
  CHECK(grid.unpack(key) == cell);
  for (int e = 0; e < grid.entries(); ++e) CHECK(grid.digit(key, e) == cell.codes[static_cast<std::size_t>(e)]);
}

TEST_CASE("Example 1: rectangle with exits at the q1-extremal faces") {
  auto [grid, cell] = normalize(augment(support::load_fixture("example1")));
  auto component = enumerate_component(cell, grid);
  CHECK(component.size() == 1);
  auto pair = close(component, grid);
  REQUIRE(pair.size() == 9);
  std::vector<int> by_dim(3, 0);
  for (int dim : pair.dims) ++by_dim[static_cast<std::size_t>(dim)];
  CHECK(by_dim == std::vector<int>{4, 4, 1});

  CHECK(properness_check(pair, grid).proper);
  exit_set(pair, grid);
  // exit: slice-1 anchor on Q1 (code 4) or on Q4 (code 6), with corners
  for (std::size_t j = 0; j < pair.size(); ++j) {
    auto c = grid.unpack(pair.cells[j]);
    CHECK(pair.in_exit[j] == (c.at(0, 1) % 2 == 0));
  }
  CHECK(std::count(pair.in_exit.begin(), pair.in_exit.end(), true) == 6);
}

TEST_CASE("close of a single 1-cell adds its two endpoints") {
  auto [grid, cell] = normalize(augment(support::load_fixture("example1")));
  CodeCell edge = cell;
  edge.codes[1] = 4;
  auto pair = close({edge}, grid);
  CHECK(pair.size() == 3);
  CHECK(pair.top_dimension() == 1);
  auto faces = pair.faces_of(pair.index_of(grid.pack(edge)));
  CHECK(faces.size() == 2);
}

TEST_CASE("Example 2, l = 2: the family member is a 4-cube") {
  for (const auto& pattern : std::vector<std::vector<int>>{{1, 1}, {0, 1}, {2, 0}, {1, 2}}) {
    auto [grid, cell] = normalize(support::example2_member(pattern));
    auto component = enumerate_component(cell, grid);
    auto pair = close(component, grid);
    CHECK(pair.size() == 81);
    CHECK(pair.top_dimension() == 4);
    CHECK(properness_check(pair, grid).proper);
    exit_set(pair, grid);
    // exits are exactly the faces where a middle odd anchor sits on a skeleton value
    for (std::size_t j = 0; j < pair.size(); ++j) {
      auto c = grid.unpack(pair.cells[j]);
      bool expected = false;
      for (int t = 0; t < 2; ++t) expected = expected || (pattern[static_cast<std::size_t>(t)] == 1 && c.at(0, 2 * t + 1) % 2 == 0);
      CHECK(pair.in_exit[j] == expected);
    }
  }
}

TEST_CASE("Example 2 corner cases are improper") {
  for (const auto& pattern : std::vector<std::vector<int>>{{0}, {2}, {0, 0}, {2, 2}}) {
    auto [grid, cell] = normalize(support::example2_member(pattern));
    auto pair = close(enumerate_component(cell, grid), grid);
    auto verdict = properness_check(pair, grid);
    CHECK_FALSE(verdict.proper);
    CHECK(verdict.witness.has_value());
  }
}

TEST_CASE("Example 3: one 6-cube") {
  auto [grid, cell] = normalize(augment(support::load_fixture("example3")));
  CHECK(grid.n() == 3);
  auto component = enumerate_component(cell, grid);
  CHECK(component.size() == 1);
  auto pair = close(component, grid);
  CHECK(pair.size() == 729);
  CHECK(pair.top_dimension() == 6);
  CHECK(properness_check(pair, grid).proper);
}

TEST_CASE("tangency with an extremal constant is never an exit") {
  std::mt19937 rng(29);
  int seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto f = support::random_fixture(rng, 1 + static_cast<int>(rng() % 3), 2 + static_cast<int>(rng() % 2));
    auto [grid, cell] = normalize(f);
    auto pair = close(enumerate_component(cell, grid), grid);
    if (!properness_check(pair, grid).proper) continue;
    exit_set(pair, grid);
    for (std::size_t j = 0; j < pair.size(); ++j) {
      auto c = grid.unpack(pair.cells[j]);
      auto tangent = grid.tangencies(c);
      if (pair.dims[j] != grid.entries() - 1 || tangent.size() != 1) continue;
      auto [a, i] = tangent[0];
      int code = c.at(a, i);
      if (code != 0 && code != grid.max_code()) continue;
      ++seen;
      CHECK_FALSE(pair.in_exit[j]);
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("crossing number is constant and components restart anywhere") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = support::random_fixture(rng, 1 + static_cast<int>(rng() % 4), 2 + static_cast<int>(rng() % 3));
    auto [grid, cell] = normalize(f);
    auto component = enumerate_component(cell, grid);
    auto pair = close(component, grid);
    for (const auto& c : component) CHECK(grid.crossing_number(c) == pair.crossing_number);
    const auto& other = component[rng() % component.size()];
    CHECK(enumerate_component(other, grid) == component);
  }
}

TEST_CASE("crossing number of a cell matches the diagram's crossing report") {
  auto e1 = augment(support::load_fixture("example1"));
  auto [grid, cell] = normalize(e1);
  CHECK(grid.crossing_number(cell) == crossing_report(e1).total);
  auto word = grid.cell_word(cell);
  CHECK(static_cast<int>(word.letters().size()) == crossing_report(e1).total);
  CHECK(word.all_positive());
  CHECK(word.strands() == 7);
}

TEST_CASE("cell words agree with diagrams for random fixtures") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = support::random_fixture(rng, 1 + static_cast<int>(rng() % 4), 2 + static_cast<int>(rng() % 3),
                                     1 + static_cast<int>(rng() % 2));
    auto [grid, cell] = normalize(f);
    auto word = grid.cell_word(cell);
    CHECK(static_cast<int>(word.letters().size()) == crossing_report(f).total);
    CHECK(grid.crossing_number(cell) == crossing_report(f).total);
    // the induced closure keeps free strands free
    auto perm = permutation_of(word);
    for (int label : word.free_labels()) CHECK(word.free_labels().count(perm[label]) == 1);
  }
}

TEST_CASE("enumerate_all") {
  SUBCASE("two constants and one free strand") {
    DiscreteRelativeBraid b(2, {strand({0, 0, 0}), strand({1, 1, 1})}, {halves({1, 1, 1})});
    auto [grid, cell] = normalize(b);
    auto infos = enumerate_all(grid);
    REQUIRE(infos.size() == 1);
    CHECK_FALSE(infos[0].verdict.proper);
  }
  SUBCASE("Example-1 skeleton") {
    auto [grid, cell] = normalize(augment(support::load_fixture("example1")));
    std::vector<ComponentHomology> homology;
    auto infos = enumerate_all(grid, [&](const ComplexPair& pair, const ComponentInfo&) {
      homology.push_back(pair_homology(pair));
    });
    // whole-fiber values, cross-checked against the oracle in test_oracle
    CHECK(infos.size() == 25);
    CHECK(std::count_if(infos.begin(), infos.end(), [](const auto& i) { return i.verdict.proper; }) == 5);
    CHECK(std::count_if(homology.begin(), homology.end(), [](const auto& h) { return h.euler != 0; }) == 1);
    for (const auto& info : infos) {
      if (info.verdict.proper) CHECK_FALSE(info.certificate.empty());
    }
  }
  SUBCASE("too many free strands") {
    DiscreteRelativeBraid b(2, {strand({0, 0, 0}), strand({9, 9, 9})}, {strand({2, 2, 2}), strand({4, 4, 4})});
    auto grid = CodeGrid(RankedSkeleton::from(2, b.skeleton()), 2, b.free_closure());
    CHECK_THROWS_AS(enumerate_all(grid), GapSeparationError);
  }
}

TEST_CASE("cell dump") {
  auto [grid, cell] = normalize(augment(support::load_fixture("example1")));
  auto pair = close(enumerate_component(cell, grid), grid);
  exit_set(pair, grid);
  auto doc = cell_dump(pair, grid);
  CHECK(doc["component"] == 0);
  CHECK(doc["crossing_number"] == 10);
  REQUIRE(doc["cells"].size() == 9);
  CHECK(doc["cells"][4]["codes"] == nlohmann::json::parse("[[5, 5]]"));
  CHECK(doc["cells"][4]["dim"] == 2);
  CHECK(doc["cells"][4]["in_exit"] == false);
}
