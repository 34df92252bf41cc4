#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace relbraid {

// perm[p] is the final position of the strand that starts at position p.
using Permutation = std::vector<int>;

Permutation identity_permutation(int size);
Permutation compose(const Permutation& first, const Permutation& then);
Permutation inverse(const Permutation& perm);
// Sorted cycle lengths of perm restricted to labels (which must be perm-invariant).
std::vector<int> cycle_type(const Permutation& perm, const std::set<int>& labels);

/// A word in the Artin generators of the braid group on `strands` strands.
///
/// Letter g > 0 is the positive crossing of the strands at positions g-1 and g
/// (zero-based); letter -g is its inverse. Letters act left to right.
/// `free_labels` marks the starting positions of free strands; the remaining
/// positions are skeleton strands. The set must be closed under the word's
/// permutation so that free strands close up on free strands.
class BraidWord {
 public:
  BraidWord(int strands, std::vector<int> letters, std::set<int> free_labels = {});

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  const std::set<int>& free_labels() const { return free_labels_; }
  bool empty() const { return letters_.empty(); }
  bool all_positive() const;

  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
  std::set<int> free_labels_;
};

// Whitespace-separated signed nonzero decimal integers.
BraidWord parse_word(std::string_view text, int strands, std::set<int> free_labels = {});

Permutation permutation_of(const BraidWord& word);
int exponent_sum(const BraidWord& word);

/// Left normal form Delta^inf * A_1 * ... * A_r with every A_j a proper,
/// nontrivial permutation braid and each pair (A_j, A_{j+1}) left-weighted.
struct NormalForm {
  int strands = 1;
  int inf = 0;
  std::vector<Permutation> factors;

  int sup() const { return inf + static_cast<int>(factors.size()); }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm left_normal_form(const BraidWord& word);

// Positive word of the permutation braid, leftmost crossings first.
std::vector<int> permutation_braid_letters(const Permutation& perm);
std::vector<int> delta_letters(int strands);

// Expands Delta^inf * factors; requires inf >= 0.
BraidWord positive_word_of(const NormalForm& nf, std::set<int> free_labels = {});

struct PositiveTwist {
  int full_twists = 0;
  BraidWord positive_word;
};

// Least l with inf + 2l >= 0, and a positive word equal to word * Delta^(2l).
PositiveTwist minimal_positive_twists(const BraidWord& word);

// Word with every pair x x^-1 removed, including pairs across the end of the word.
std::vector<int> cyclically_reduce(const std::vector<int>& letters);

/// Canonical token for the conjugacy class of the closed braid.
///
/// Equal for cyclic rotations and free cancellations of the same word. Distinct
/// tokens prove non-conjugacy; equal tokens prove nothing.
std::string conjugacy_certificate(const BraidWord& word);

}  // namespace relbraid
