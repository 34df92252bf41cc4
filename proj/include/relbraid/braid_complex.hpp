#pragma once

#include "relbraid/braid_diagram.hpp"
#include "relbraid/braid_word.hpp"
#include "relbraid/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace relbraid {

/// Skeleton reduced to per-slice order data. Only the order of anchor values
/// matters to the cube complex, so slices are stored as sorted lists and ranks.
struct RankedSkeleton {
  int d = 0;
  int m = 0;
  std::vector<std::vector<Rational>> sorted;  // [slice][rank], slices 0..d-1
  std::vector<std::vector<int>> rank;         // [slice][strand]
  std::vector<std::vector<int>> by_rank;      // [slice][rank] -> strand
  Permutation closure;
  Permutation closure_inverse;
  int self_crossings = 0;  // skeleton-skeleton crossings over one period

  static RankedSkeleton from(int d, const std::vector<Strand>& skeleton);
  int max_code() const { return 2 * m - 2; }
};

/// Position codes of n free strands over d slices, entry (a, i) at a*d + i.
/// Code 2k: the anchor sits on the rank-k skeleton value. Code 2k+1: it lies
/// in the open gap between ranks k and k+1.
struct CodeCell {
  int n = 0;
  int d = 0;
  std::vector<int> codes;

  int at(int strand, int slice) const { return codes[static_cast<std::size_t>(strand * d + slice)]; }
  int dimension() const;
  friend bool operator==(const CodeCell&, const CodeCell&) = default;
  friend auto operator<=>(const CodeCell&, const CodeCell&) = default;
};

enum class CellClass { interior, tangent, out };

std::string to_string(CellClass c);

/// The code grid of a fiber: a ranked skeleton, n free strands and their
/// closure permutation. Cells are packed into 64-bit keys in mixed radix with
/// the first entry most significant, so key order is lexicographic code order.
class CodeGrid {
 public:
  CodeGrid(RankedSkeleton skeleton, int n, Permutation free_closure);

  const RankedSkeleton& skeleton() const { return skeleton_; }
  int n() const { return n_; }
  int d() const { return skeleton_.d; }
  int entries() const { return n_ * skeleton_.d; }
  int max_code() const { return skeleton_.max_code(); }
  const Permutation& free_closure() const { return free_closure_; }

  std::uint64_t pack(const CodeCell& cell) const;
  CodeCell unpack(std::uint64_t key) const;
  std::uint64_t place(int entry) const { return place_[static_cast<std::size_t>(entry)]; }
  int digit(std::uint64_t key, int entry) const {
    return static_cast<int>((key / place_[static_cast<std::size_t>(entry)]) % base_);
  }

  // Sign of (free a - skeleton s) at an extended slice in [-1, d], both strands
  // advancing through their closures at the ends of the period.
  int sign(const CodeCell& cell, int a, int slice, int s) const;

  CellClass classify(const CodeCell& cell) const;
  // (strand, slice) of every even entry whose flanking signs do not strictly oppose.
  std::vector<std::pair<int, int>> tangencies(const CodeCell& cell) const;
  bool tangent_at(const CodeCell& cell, int a, int slice) const;
  bool gap_separated(const CodeCell& cell) const;
  bool in_range(const CodeCell& cell) const;
  // All crossings of the diagram: skeleton pairs, free-skeleton and free-free.
  int crossing_number(const CodeCell& cell) const;

  // Positive braid word of a representative diagram of the cell, all strands.
  BraidWord cell_word(const CodeCell& cell) const;

 private:
  RankedSkeleton skeleton_;
  int n_;
  Permutation free_closure_;
  Permutation free_closure_inverse_;
  std::uint64_t base_;
  std::vector<std::uint64_t> place_;
};

struct Normalized {
  CodeGrid grid;
  CodeCell cell;
};

// Requires an augmented, non-singular diagram.
Normalized normalize(const DiscreteRelativeBraid& braid);

CellClass is_singular(const CodeCell& cell, const CodeGrid& grid);

// Interior cells reachable from start through face/coface steps, sorted.
std::vector<CodeCell> enumerate_component(const CodeCell& start, const CodeGrid& grid);

/// Closure N of one component together with its exit set N^-.
struct ComplexPair {
  int component = 0;
  std::vector<std::uint64_t> cells;  // packed, sorted
  std::vector<int> dims;
  std::vector<bool> interior;  // cell belongs to the component itself
  std::vector<bool> in_exit;
  // Codimension-one faces of cell j, as indices into cells, are
  // face_list[face_offsets[j] .. face_offsets[j+1]).
  std::vector<std::uint32_t> face_offsets;
  std::vector<std::uint32_t> face_list;
  int crossing_number = 0;
  bool exit_marked = false;

  std::size_t size() const { return cells.size(); }
  std::size_t index_of(std::uint64_t key) const;  // size() if absent
  std::span<const std::uint32_t> faces_of(std::size_t j) const {
    return {face_list.data() + face_offsets[j], face_list.data() + face_offsets[j + 1]};
  }
  int top_dimension() const;
};

ComplexPair close(const std::vector<CodeCell>& component, const CodeGrid& grid, int id = 0);
void exit_set(ComplexPair& pair, const CodeGrid& grid);

struct ProperVerdict {
  bool proper = true;
  std::optional<CodeCell> witness;
  std::string reason;
};

ProperVerdict properness_check(const ComplexPair& pair, const CodeGrid& grid);

struct ComponentInfo {
  int id = 0;
  CodeCell representative;
  std::size_t interior_cells = 0;
  std::size_t closure_cells = 0;
  std::size_t exit_cells = 0;
  int crossing_number = 0;
  ProperVerdict verdict;
  bool truncated = false;  // reached a configuration outside the gap-separated model
  std::string truncation;
  std::string certificate;
  int group = -1;          // index of the certificate group
  bool undecided = false;  // group shared with another component
};

/// Every component of the fiber, seeded from every top-dimensional cell.
/// `visit` sees each proper component's closed, exit-marked pair before it is
/// released; improper and truncated components are reported but not exit-marked.
std::vector<ComponentInfo> enumerate_all(const CodeGrid& grid,
                                         const std::function<void(const ComplexPair&, const ComponentInfo&)>& visit = {});

nlohmann::json cell_dump(const ComplexPair& pair, const CodeGrid& grid);

}  // namespace relbraid
