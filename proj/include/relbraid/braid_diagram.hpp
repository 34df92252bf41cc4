#pragma once

#include "relbraid/braid_word.hpp"
#include "relbraid/rational.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace relbraid {

using Strand = std::vector<Rational>;

/// Anchor values of a discrete relative braid over d time steps.
///
/// Every strand carries d+1 anchors. The value at index d equals the index-0
/// value of exactly one strand of the same group; that matching is the closure
/// permutation. Construction validates lengths, closure and non-singularity
/// and throws on the first violation. Generic skeleton slices are checked
/// where they matter: on JSON input and when the complex is built.
class DiscreteRelativeBraid {
 public:
  DiscreteRelativeBraid(int d, std::vector<Strand> skeleton, std::vector<Strand> free);

  int d() const { return d_; }
  int skeleton_count() const { return static_cast<int>(skeleton_.size()); }
  int free_count() const { return static_cast<int>(free_.size()); }
  const std::vector<Strand>& skeleton() const { return skeleton_; }
  const std::vector<Strand>& free() const { return free_; }
  const Permutation& skeleton_closure() const { return skeleton_closure_; }
  const Permutation& free_closure() const { return free_closure_; }

  // Two constant skeleton strands below and above every other anchor.
  bool is_augmented() const;

  Rational min_anchor() const;
  Rational max_anchor() const;

  friend bool operator==(const DiscreteRelativeBraid&, const DiscreteRelativeBraid&) = default;

 private:
  int d_;
  std::vector<Strand> skeleton_;
  std::vector<Strand> free_;
  Permutation skeleton_closure_;
  Permutation free_closure_;
};

struct CrossingReport {
  int total = 0;
  // pairwise[a][b] for a < b, strands numbered skeleton first, then free.
  std::vector<std::vector<int>> pairwise;
};

struct Tangency {
  int strand;  // free strand index
  int other;   // skeleton index, or skeleton_count + free index
  int slice;
};

// First tangency between a free strand and any other strand, if any.
std::optional<Tangency> find_tangency(int d, const std::vector<Strand>& skeleton,
                                      const std::vector<Strand>& free,
                                      const Permutation& skeleton_closure,
                                      const Permutation& free_closure);

DiscreteRelativeBraid word_to_diagram(const BraidWord& word);
DiscreteRelativeBraid augment(const DiscreteRelativeBraid& braid);
CrossingReport crossing_report(const DiscreteRelativeBraid& braid);
bool connectivity_bound_ok(const DiscreteRelativeBraid& braid);
DiscreteRelativeBraid refine(const DiscreteRelativeBraid& braid, int factor);

// Closure permutation of a strand group by exact matching of end and start values.
Permutation closure_matching(const std::vector<Strand>& strands, int d);

nlohmann::json to_json(const DiscreteRelativeBraid& braid);
DiscreteRelativeBraid diagram_from_json(const nlohmann::json& doc);

}  // namespace relbraid
