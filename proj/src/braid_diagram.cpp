#include "relbraid/braid_diagram.hpp"

#include "relbraid/errors.hpp"

#include <algorithm>
#include <map>

namespace relbraid {

Permutation closure_matching(const std::vector<Strand>& strands, int d) {
  std::map<Rational, int> start;
  for (std::size_t s = 0; s < strands.size(); ++s) {
    if (!start.emplace(strands[s][0], static_cast<int>(s)).second) {
      throw InvalidInput("two strands of one group start at the same value " +
                         format_rational(strands[s][0]));
    }
  }
  Permutation closure(strands.size());
  std::vector<bool> hit(strands.size(), false);
  for (std::size_t s = 0; s < strands.size(); ++s) {
    auto it = start.find(strands[s][static_cast<std::size_t>(d)]);
    if (it == start.end()) {
      throw InvalidInput("strand " + std::to_string(s) + " does not close up within its group");
    }
    closure[s] = it->second;
    hit[static_cast<std::size_t>(it->second)] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
    throw InvalidInput("closure matching is not a bijection");
  }
  return closure;
}

namespace {

struct StrandRef {
  const std::vector<Strand>* group;
  const Permutation* closure;
  int index;
};

// Value of a strand at an extended index in [-1, d+1], following the closure.
Rational value_at(const StrandRef& ref, int d, int i) {
  int strand = ref.index;
  if (i > d) {
    strand = (*ref.closure)[static_cast<std::size_t>(strand)];
    i -= d;
  } else if (i < 0) {
    strand = static_cast<int>(std::find(ref.closure->begin(), ref.closure->end(), strand) -
                              ref.closure->begin());
    i += d;
  }
  return (*ref.group)[static_cast<std::size_t>(strand)][static_cast<std::size_t>(i)];
}

// Sign of (a - b) at an extended index; both strands advance through their closures.
int pair_sign(const StrandRef& a, const StrandRef& b, int d, int i) {
  return sign_of(value_at(a, d, i) - value_at(b, d, i));
}

void check_lengths(int d, const std::vector<Strand>& strands, const char* group) {
  for (const auto& s : strands) {
    if (static_cast<int>(s.size()) != d + 1) {
      throw InvalidInput(std::string(group) + " strand has " + std::to_string(s.size()) +
                         " anchors, expected d+1 = " + std::to_string(d + 1));
    }
  }
}

}  // namespace

std::optional<Tangency> find_tangency(int d, const std::vector<Strand>& skeleton,
                                      const std::vector<Strand>& free,
                                      const Permutation& skeleton_closure,
                                      const Permutation& free_closure) {
  const int m = static_cast<int>(skeleton.size());
  const int n = static_cast<int>(free.size());
  for (int a = 0; a < n; ++a) {
    StrandRef fa{&free, &free_closure, a};
    for (int other = 0; other < m + n; ++other) {
      if (other == m + a) continue;
      StrandRef ob = other < m ? StrandRef{&skeleton, &skeleton_closure, other}
                               : StrandRef{&free, &free_closure, other - m};
      for (int i = 0; i < d; ++i) {
        if (pair_sign(fa, ob, d, i) != 0) continue;
        if (pair_sign(fa, ob, d, i - 1) * pair_sign(fa, ob, d, i + 1) >= 0) {
          return Tangency{a, other, i};
        }
      }
    }
  }
  return std::nullopt;
}

DiscreteRelativeBraid::DiscreteRelativeBraid(int d, std::vector<Strand> skeleton,
                                             std::vector<Strand> free)
    : d_(d), skeleton_(std::move(skeleton)), free_(std::move(free)) {
  if (d_ < 2) throw InvalidInput("period d must be at least 2");
  if (free_.empty()) throw InvalidInput("a relative braid needs at least one free strand");
  check_lengths(d_, skeleton_, "skeleton");
  check_lengths(d_, free_, "free");
  skeleton_closure_ = closure_matching(skeleton_, d_);
  free_closure_ = closure_matching(free_, d_);
  if (auto t = find_tangency(d_, skeleton_, free_, skeleton_closure_, free_closure_)) {
    std::string other = t->other < skeleton_count()
                            ? "skeleton strand " + std::to_string(t->other)
                            : "free strand " + std::to_string(t->other - skeleton_count());
    throw SingularityError("free strand " + std::to_string(t->strand) + " is tangent to " + other +
                               " at slice " + std::to_string(t->slice),
                           t->strand, t->slice);
  }
}

Rational DiscreteRelativeBraid::min_anchor() const {
  Rational lo = free_[0][0];
  for (const auto* group : {&skeleton_, &free_}) {
    for (const auto& s : *group) lo = std::min(lo, *std::min_element(s.begin(), s.end()));
  }
  return lo;
}

Rational DiscreteRelativeBraid::max_anchor() const {
  Rational hi = free_[0][0];
  for (const auto* group : {&skeleton_, &free_}) {
    for (const auto& s : *group) hi = std::max(hi, *std::max_element(s.begin(), s.end()));
  }
  return hi;
}

bool DiscreteRelativeBraid::is_augmented() const {
  auto constant = [](const Strand& s) {
    return std::all_of(s.begin(), s.end(), [&](const Rational& v) { return v == s[0]; });
  };
  // A constant strand that is the unique minimum (maximum) anchor at every slice.
  auto bounds = [&](std::size_t idx, bool below) {
    const auto& c = skeleton_[idx];
    for (const auto* group : {&skeleton_, &free_}) {
      for (std::size_t j = 0; j < group->size(); ++j) {
        if (group == &skeleton_ && j == idx) continue;
        for (const auto& v : (*group)[j]) {
          if (below ? !(c[0] < v) : !(v < c[0])) return false;
        }
      }
    }
    return true;
  };
  bool lo = false;
  bool hi = false;
  for (std::size_t s = 0; s < skeleton_.size(); ++s) {
    if (!constant(skeleton_[s])) continue;
    lo = lo || bounds(s, true);
    hi = hi || bounds(s, false);
  }
  return lo && hi;
}

DiscreteRelativeBraid word_to_diagram(const BraidWord& word) {
  if (!word.all_positive()) throw InvalidInput("word_to_diagram needs a positive word");
  const int k = word.strands();
  const auto& free_labels = word.free_labels();
  if (free_labels.empty()) throw InvalidInput("at least one strand must be free");
  if (static_cast<int>(free_labels.size()) == k) {
    throw InvalidInput("at least one strand must belong to the skeleton");
  }
  const int letters = static_cast<int>(word.letters().size());
  // Each letter contributes exactly one crossing, so d = letters + 1 clears the bound.
  const int d = std::max(letters + 1, 2);

  // level[a][i]: level of the strand starting at position a, at time i
  std::vector<std::vector<int>> level(static_cast<std::size_t>(k),
                                      std::vector<int>(static_cast<std::size_t>(d) + 1));
  Permutation occupant = identity_permutation(k);
  for (int i = 0; i <= d; ++i) {
    if (i > 0 && i - 1 < letters) {
      int lo = word.letters()[static_cast<std::size_t>(i - 1)] - 1;
      std::swap(occupant[lo], occupant[lo + 1]);
    }
    for (int p = 0; p < k; ++p) level[occupant[p]][i] = p;
  }

  std::vector<Strand> skeleton;
  std::vector<Strand> free;
  for (int a = 0; a < k; ++a) {
    Strand s;
    for (int v : level[a]) s.emplace_back(v);
    (free_labels.count(a) ? free : skeleton).push_back(std::move(s));
  }
  return DiscreteRelativeBraid(d, std::move(skeleton), std::move(free));
}

DiscreteRelativeBraid augment(const DiscreteRelativeBraid& braid) {
  if (braid.is_augmented()) return braid;
  const auto count = static_cast<std::size_t>(braid.d()) + 1;
  auto skeleton = braid.skeleton();
  skeleton.emplace_back(count, braid.min_anchor() - 1);
  skeleton.emplace_back(count, braid.max_anchor() + 1);
  return DiscreteRelativeBraid(braid.d(), std::move(skeleton), braid.free());
}

CrossingReport crossing_report(const DiscreteRelativeBraid& braid) {
  const int m = braid.skeleton_count();
  const int total_strands = m + braid.free_count();
  const int d = braid.d();
  auto ref = [&](int s) {
    return s < m ? StrandRef{&braid.skeleton(), &braid.skeleton_closure(), s}
                 : StrandRef{&braid.free(), &braid.free_closure(), s - m};
  };

  CrossingReport report;
  report.pairwise.assign(static_cast<std::size_t>(total_strands),
                         std::vector<int>(static_cast<std::size_t>(total_strands), 0));
  for (int a = 0; a < total_strands; ++a) {
    for (int b = a + 1; b < total_strands; ++b) {
      int count = 0;
      for (int i = 0; i < d; ++i) {
        int here = pair_sign(ref(a), ref(b), d, i);
        int next = pair_sign(ref(a), ref(b), d, i + 1);
        if (here == 0) {
          if (pair_sign(ref(a), ref(b), d, i - 1) * next >= 0) {
            throw SingularityError("tangency between strands " + std::to_string(a) + " and " +
                                       std::to_string(b) + " at slice " + std::to_string(i),
                                   a, i);
          }
          ++count;
        } else if (next != 0 && next != here) {
          ++count;
        }
      }
      report.pairwise[a][b] = report.pairwise[b][a] = count;
      report.total += count;
    }
  }
  return report;
}

bool connectivity_bound_ok(const DiscreteRelativeBraid& braid) {
  return braid.d() > crossing_report(braid).total;
}

DiscreteRelativeBraid refine(const DiscreteRelativeBraid& braid, int factor) {
  if (factor < 2) throw InvalidInput("refinement factor must be at least 2");
  auto stretch = [&](const std::vector<Strand>& group) {
    std::vector<Strand> out;
    for (const auto& s : group) {
      Strand t;
      for (int i = 0; i < braid.d(); ++i) {
        const auto& a = s[static_cast<std::size_t>(i)];
        const auto& b = s[static_cast<std::size_t>(i) + 1];
        for (int j = 0; j < factor; ++j) t.push_back(a + (b - a) * Rational(j, factor));
      }
      t.push_back(s.back());
      out.push_back(std::move(t));
    }
    return out;
  };
  return DiscreteRelativeBraid(braid.d() * factor, stretch(braid.skeleton()), stretch(braid.free()));
}

namespace {

nlohmann::json strands_to_json(const std::vector<Strand>& group) {
  auto out = nlohmann::json::array();
  for (const auto& s : group) {
    auto row = nlohmann::json::array();
    for (const auto& v : s) {
      if (boost::multiprecision::denominator(v) == 1) {
        row.push_back(boost::multiprecision::numerator(v).convert_to<long long>());
      } else {
        row.push_back(format_rational(v));
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Strand> strands_from_json(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw SyntaxError(std::string("diagram JSON needs an array field '") + key + "'");
  }
  std::vector<Strand> out;
  for (const auto& row : doc[key]) {
    if (!row.is_array()) throw SyntaxError(std::string("'") + key + "' entries must be arrays");
    Strand s;
    for (const auto& v : row) {
      if (v.is_number_integer()) {
        s.emplace_back(v.get<long long>());
      } else if (v.is_string()) {
        s.push_back(parse_rational(v.get<std::string>()));
      } else {
        throw SyntaxError("anchor values must be integers or \"p/q\" strings");
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const DiscreteRelativeBraid& braid) {
  nlohmann::json doc;
  doc["d"] = braid.d();
  doc["skeleton"] = strands_to_json(braid.skeleton());
  doc["free"] = strands_to_json(braid.free());
  doc["augmented"] = braid.is_augmented();
  return doc;
}

DiscreteRelativeBraid diagram_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw SyntaxError("diagram JSON must be an object");
  if (!doc.contains("d") || !doc["d"].is_number_integer()) {
    throw SyntaxError("diagram JSON needs an integer field 'd'");
  }
  if (doc.contains("augmented") && !doc["augmented"].is_boolean()) {
    throw SyntaxError("'augmented' must be a boolean");
  }
  const int d = doc["d"].get<int>();
  auto skeleton = strands_from_json(doc, "skeleton");
  auto free = strands_from_json(doc, "free");
  check_lengths(d, skeleton, "skeleton");
  for (int i = 0; i <= d; ++i) {
    std::vector<Rational> slice;
    for (const auto& s : skeleton) slice.push_back(s[static_cast<std::size_t>(i)]);
    std::sort(slice.begin(), slice.end());
    if (std::adjacent_find(slice.begin(), slice.end()) != slice.end()) {
      throw InvalidInput("skeleton values coincide at slice " + std::to_string(i));
    }
  }
  return DiscreteRelativeBraid(d, std::move(skeleton), std::move(free));
}

}  // namespace relbraid
