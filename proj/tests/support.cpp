#include "support.hpp"

#include "relbraid/braid_complex.hpp"
#include "relbraid/errors.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#ifndef FIXTURE_DIR
#error "FIXTURE_DIR must point at the fixtures directory"
#endif

using namespace relbraid;

namespace support {

DiscreteRelativeBraid load_fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name + ".json");
  if (!in) throw std::runtime_error("missing fixture " + name);
  return diagram_from_json(nlohmann::json::parse(in));
}

DiscreteRelativeBraid example2_member(const std::vector<int>& odd_anchors) {
  const std::vector<std::vector<int>> piece{{4, 2}, {3, 4}, {2, 1}, {1, 3}};
  const int d = 2 * static_cast<int>(odd_anchors.size());
  std::vector<Strand> skeleton;
  for (const auto& q : piece) {
    Strand s;
    for (int i = 0; i <= d; ++i) s.push_back(q[static_cast<std::size_t>(i % 2)]);
    skeleton.push_back(std::move(s));
  }
  Strand free;
  for (int i = 0; i <= d; ++i) {
    int twice = i % 2 == 0 ? 5 : 3 + 2 * odd_anchors[static_cast<std::size_t>(i / 2)];
    free.push_back(Rational(twice, 2));
  }
  return augment(DiscreteRelativeBraid(d, std::move(skeleton), {std::move(free)}));
}

namespace {

bool generic_after_refine(const DiscreteRelativeBraid& braid) {
  try {
    auto fine = refine(braid, 2);
    for (int i = 0; i < fine.d(); ++i) {
      std::vector<Rational> vals;
      for (const auto& s : fine.skeleton()) vals.push_back(s[static_cast<std::size_t>(i)]);
      std::sort(vals.begin(), vals.end());
      if (std::adjacent_find(vals.begin(), vals.end()) != vals.end()) return false;
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

DiscreteRelativeBraid random_fixture(std::mt19937& rng, int skeleton, int d, int n) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    // skeleton: a random closure and random distinct values per slice in 1..3m
    std::vector<int> closure(static_cast<std::size_t>(skeleton));
    std::iota(closure.begin(), closure.end(), 0);
    std::shuffle(closure.begin(), closure.end(), rng);
    std::vector<int> pool(static_cast<std::size_t>(3 * skeleton));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<Strand> strands(static_cast<std::size_t>(skeleton));
    for (int i = 0; i < d; ++i) {
      std::shuffle(pool.begin(), pool.end(), rng);
      for (int s = 0; s < skeleton; ++s) strands[s].push_back(pool[static_cast<std::size_t>(s)]);
    }
    for (int s = 0; s < skeleton; ++s) strands[s].push_back(strands[closure[s]][0]);
    const Rational lo = 0;
    const Rational hi = 3 * skeleton + 1;

    // free strands: a gap midpoint or, sometimes, a skeleton value, per slice
    std::vector<Strand> free(static_cast<std::size_t>(n));
    bool separated = true;
    for (int i = 0; i < d && separated; ++i) {
      std::vector<Rational> ladder{lo};
      std::vector<Rational> vals;
      for (const auto& s : strands) vals.push_back(s[static_cast<std::size_t>(i)]);
      vals.push_back(hi);
      std::sort(vals.begin(), vals.end());
      std::vector<Rational> rungs;
      Rational below = lo;
      for (const auto& v : vals) {
        rungs.push_back((below + v) / 2);
        if (v != hi) rungs.push_back(v);
        below = v;
      }
      std::vector<int> gaps;
      for (int a = 0; a < n; ++a) {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(rungs.size()) - 1);
        int r = pick(rng);
        if (r % 2 == 1 && rng() % 3 != 0) r -= 1;  // mostly gaps
        gaps.push_back(r / 2);
        free[a].push_back(rungs[static_cast<std::size_t>(r)]);
      }
      std::sort(gaps.begin(), gaps.end());
      separated = std::adjacent_find(gaps.begin(), gaps.end()) == gaps.end();
    }
    if (!separated) continue;
    for (int a = 0; a < n; ++a) free[a].push_back(free[a][0]);
    if (n == 2 && rng() % 2 == 0) std::swap(free[0].back(), free[1].back());
    try {
      strands.push_back(Strand(static_cast<std::size_t>(d + 1), lo));
      strands.push_back(Strand(static_cast<std::size_t>(d + 1), hi));
      DiscreteRelativeBraid braid(d, strands, free);
      if (!generic_after_refine(braid)) continue;
      auto [grid, cell] = normalize(braid);
      (void)cell;
      return braid;
    } catch (const std::exception&) {
      continue;
    }
  }
  throw std::runtime_error("could not draw a random fixture");
}

ComponentHomology component_homology(const DiscreteRelativeBraid& braid) {
  auto [grid, cell] = normalize(braid);
  auto pair = close(enumerate_component(cell, grid), grid);
  auto verdict = properness_check(pair, grid);
  if (!verdict.proper) throw ImproperClass(verdict.reason);
  exit_set(pair, grid);
  return pair_homology(pair);
}

oracle::Fiber fiber_of(const DiscreteRelativeBraid& braid) {
  oracle::Fiber fiber;
  fiber.d = braid.d();
  for (const auto& s : braid.skeleton()) fiber.skeleton.emplace_back(s.begin(), s.end());
  fiber.free_count = braid.free_count();
  fiber.free_closure = braid.free_closure();
  return fiber;
}

std::vector<oracle::Component> library_components(const DiscreteRelativeBraid& braid) {
  auto [grid, cell] = normalize(braid);
  std::vector<oracle::Component> out;
  std::vector<long> chi;
  auto infos = enumerate_all(grid, [&](const ComplexPair& pair, const ComponentInfo& info) {
    if (chi.size() <= static_cast<std::size_t>(info.id)) chi.resize(static_cast<std::size_t>(info.id) + 1, 0);
    chi[static_cast<std::size_t>(info.id)] = pair_homology(pair).euler;
  });
  for (const auto& info : infos) {
    oracle::Component c;
    c.interior = info.interior_cells;
    c.proper = info.verdict.proper;
    c.truncated = info.truncated;
    if (c.proper && !c.truncated && static_cast<std::size_t>(info.id) < chi.size()) c.chi = chi[static_cast<std::size_t>(info.id)];
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<oracle::Component> comparable(std::vector<oracle::Component> components) {
  for (auto& c : components) {
    if (!c.proper || c.truncated) c.chi = 0;
  }
  std::sort(components.begin(), components.end());
  return components;
}

std::vector<int> random_word(std::mt19937& rng, int strands, int length) {
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::vector<int> letters;
  for (int j = 0; j < length; ++j) letters.push_back(rng() % 2 == 0 ? gen(rng) : -gen(rng));
  return letters;
}

}  // namespace support
