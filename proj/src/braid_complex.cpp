#include "relbraid/braid_complex.hpp"

#include "relbraid/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace relbraid {

RankedSkeleton RankedSkeleton::from(int d, const std::vector<Strand>& skeleton) {
  RankedSkeleton sk;
  sk.d = d;
  sk.m = static_cast<int>(skeleton.size());
  sk.closure = closure_matching(skeleton, d);
  sk.closure_inverse = inverse(sk.closure);
  for (int i = 0; i < d; ++i) {
    std::vector<int> order(static_cast<std::size_t>(sk.m));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return skeleton[a][static_cast<std::size_t>(i)] < skeleton[b][static_cast<std::size_t>(i)];
    });
    std::vector<Rational> sorted;
    std::vector<int> rank(static_cast<std::size_t>(sk.m));
    for (int r = 0; r < sk.m; ++r) {
      sorted.push_back(skeleton[order[r]][static_cast<std::size_t>(i)]);
      rank[order[r]] = r;
      if (r > 0 && sorted[r] == sorted[r - 1]) {
        throw InvalidInput("coincident skeleton values at slice " + std::to_string(i));
      }
    }
    sk.sorted.push_back(std::move(sorted));
    sk.rank.push_back(std::move(rank));
    sk.by_rank.push_back(std::move(order));
  }
  for (int s = 0; s < sk.m; ++s) {
    for (int t = s + 1; t < sk.m; ++t) {
      for (int i = 0; i < d; ++i) {
        bool below = sk.rank[i][s] < sk.rank[i][t];
        bool next_below = i + 1 < d ? sk.rank[i + 1][s] < sk.rank[i + 1][t]
                                    : sk.rank[0][sk.closure[s]] < sk.rank[0][sk.closure[t]];
        if (below != next_below) ++sk.self_crossings;
      }
    }
  }
  return sk;
}

int CodeCell::dimension() const {
  return static_cast<int>(std::count_if(codes.begin(), codes.end(), [](int c) { return c % 2 != 0; }));
}

std::string to_string(CellClass c) {
  switch (c) {
    case CellClass::interior: return "interior";
    case CellClass::tangent: return "tangent";
    case CellClass::out: return "out";
  }
  return "?";
}

CodeGrid::CodeGrid(RankedSkeleton skeleton, int n, Permutation free_closure)
    : skeleton_(std::move(skeleton)),
      n_(n),
      free_closure_(std::move(free_closure)),
      free_closure_inverse_(inverse(free_closure_)),
      base_(static_cast<std::uint64_t>(std::max(skeleton_.max_code() + 1, 1))) {
  if (skeleton_.m < 2) throw InvalidInput("the code grid needs an augmented skeleton");
  if (static_cast<int>(free_closure_.size()) != n_) throw InvalidInput("free closure size mismatch");
  const int len = entries();
  place_.assign(static_cast<std::size_t>(len), 1);
  unsigned __int128 acc = 1;
  for (int e = len - 1; e >= 0; --e) {
    place_[static_cast<std::size_t>(e)] = static_cast<std::uint64_t>(acc);
    acc *= base_;
    if (acc > (static_cast<unsigned __int128>(1) << 63)) {
      throw CapExceeded("code grid of " + std::to_string(len) + " entries in base " +
                        std::to_string(base_) + " does not fit a 64-bit key");
    }
  }
}

std::uint64_t CodeGrid::pack(const CodeCell& cell) const {
  std::uint64_t key = 0;
  for (int e = 0; e < entries(); ++e) {
    key += static_cast<std::uint64_t>(cell.codes[static_cast<std::size_t>(e)]) * place_[static_cast<std::size_t>(e)];
  }
  return key;
}

CodeCell CodeGrid::unpack(std::uint64_t key) const {
  CodeCell cell{n_, d(), std::vector<int>(static_cast<std::size_t>(entries()))};
  for (int e = entries() - 1; e >= 0; --e) {
    cell.codes[static_cast<std::size_t>(e)] = static_cast<int>(key % base_);
    key /= base_;
  }
  return cell;
}

int CodeGrid::sign(const CodeCell& cell, int a, int slice, int s) const {
  if (slice == d()) {
    a = free_closure_[static_cast<std::size_t>(a)];
    s = skeleton_.closure[static_cast<std::size_t>(s)];
    slice = 0;
  } else if (slice == -1) {
    a = free_closure_inverse_[static_cast<std::size_t>(a)];
    s = skeleton_.closure_inverse[static_cast<std::size_t>(s)];
    slice = d() - 1;
  }
  int code = cell.at(a, slice);
  int level = 2 * skeleton_.rank[static_cast<std::size_t>(slice)][static_cast<std::size_t>(s)];
  return code == level ? 0 : (code < level ? -1 : 1);
}

bool CodeGrid::tangent_at(const CodeCell& cell, int a, int slice) const {
  int code = cell.at(a, slice);
  if (code % 2 != 0) return false;
  int s = skeleton_.by_rank[static_cast<std::size_t>(slice)][static_cast<std::size_t>(code / 2)];
  return sign(cell, a, slice - 1, s) * sign(cell, a, slice + 1, s) >= 0;
}

std::vector<std::pair<int, int>> CodeGrid::tangencies(const CodeCell& cell) const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a) {
    for (int i = 0; i < d(); ++i) {
      if (tangent_at(cell, a, i)) out.emplace_back(a, i);
    }
  }
  return out;
}

bool CodeGrid::in_range(const CodeCell& cell) const {
  return std::all_of(cell.codes.begin(), cell.codes.end(),
                     [&](int c) { return c >= 0 && c <= max_code(); });
}

CellClass CodeGrid::classify(const CodeCell& cell) const {
  if (!in_range(cell)) return CellClass::out;
  for (int a = 0; a < n_; ++a) {
    for (int i = 0; i < d(); ++i) {
      if (tangent_at(cell, a, i)) return CellClass::tangent;
    }
  }
  return CellClass::interior;
}

bool CodeGrid::gap_separated(const CodeCell& cell) const {
  for (int i = 0; i < d(); ++i) {
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) {
        if (cell.at(a, i) == cell.at(b, i)) return false;
      }
    }
  }
  return true;
}

int CodeGrid::crossing_number(const CodeCell& cell) const {
  int total = skeleton_.self_crossings;
  for (int a = 0; a < n_; ++a) {
    for (int s = 0; s < skeleton_.m; ++s) {
      for (int i = 0; i < d(); ++i) {
        int here = sign(cell, a, i, s);
        int next = sign(cell, a, i + 1, s);
        if (here == 0 || (next != 0 && next != here)) ++total;
      }
    }
  }
  auto code_at = [&](int a, int i) {
    return i < d() ? cell.at(a, i) : cell.at(free_closure_[static_cast<std::size_t>(a)], 0);
  };
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      for (int i = 0; i < d(); ++i) {
        bool below = code_at(a, i) < code_at(b, i);
        bool next_below = code_at(a, i + 1) < code_at(b, i + 1);
        if (below != next_below) ++total;
      }
    }
  }
  return total;
}

BraidWord CodeGrid::cell_word(const CodeCell& cell) const {
  const int m = skeleton_.m;
  const int k = m + n_;
  const int dd = d();
  // values[strand][slice] for slices 0..d, skeleton strands first
  std::vector<std::vector<Rational>> values(static_cast<std::size_t>(k));
  for (int s = 0; s < m; ++s) {
    for (int i = 0; i < dd; ++i) {
      values[s].push_back(skeleton_.sorted[i][static_cast<std::size_t>(skeleton_.rank[i][s])]);
    }
    int next = skeleton_.closure[static_cast<std::size_t>(s)];
    values[s].push_back(skeleton_.sorted[0][static_cast<std::size_t>(skeleton_.rank[0][next])]);
  }
  auto free_value = [&](int a, int i) -> Rational {
    int code = cell.at(a, i);
    const auto& row = skeleton_.sorted[static_cast<std::size_t>(i)];
    if (code % 2 == 0) return row[static_cast<std::size_t>(code / 2)];
    return (row[static_cast<std::size_t>(code / 2)] + row[static_cast<std::size_t>(code / 2) + 1]) / 2;
  };
  for (int a = 0; a < n_; ++a) {
    for (int i = 0; i < dd; ++i) values[m + a].push_back(free_value(a, i));
    values[m + a].push_back(free_value(free_closure_[static_cast<std::size_t>(a)], 0));
  }
  std::vector<int> pred(static_cast<std::size_t>(k));
  for (int s = 0; s < m; ++s) pred[s] = skeleton_.closure_inverse[static_cast<std::size_t>(s)];
  for (int a = 0; a < n_; ++a) pred[m + a] = m + free_closure_inverse_[static_cast<std::size_t>(a)];

  // Ties at an anchor are broken by the previous slice, so the crossing lands
  // in the following segment.
  auto positions = [&](int i) {
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    auto before = [&](int x) {
      return i > 0 ? values[x][static_cast<std::size_t>(i - 1)]
                   : values[pred[x]][static_cast<std::size_t>(dd - 1)];
    };
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      const auto& vx = values[x][static_cast<std::size_t>(i)];
      const auto& vy = values[y][static_cast<std::size_t>(i)];
      if (vx != vy) return vx < vy;
      return before(x) < before(y);
    });
    std::vector<int> pos(static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p) pos[order[p]] = p;
    return std::make_pair(order, pos);
  };

  std::vector<int> letters;
  auto [order, pos] = positions(0);
  std::set<int> free_labels;
  for (int a = 0; a < n_; ++a) free_labels.insert(pos[m + a]);
  for (int i = 0; i < dd; ++i) {
    auto [next_order, next_pos] = positions(i + 1);
    Permutation perm(static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p) perm[p] = next_pos[order[p]];
    auto part = permutation_braid_letters(perm);
    letters.insert(letters.end(), part.begin(), part.end());
    if (i + 1 < dd) {
      order = std::move(next_order);
    } else {
      break;
    }
  }
  return BraidWord(k, std::move(letters), std::move(free_labels));
}

Normalized normalize(const DiscreteRelativeBraid& braid) {
  if (!braid.is_augmented()) throw InvalidInput("normalize needs an augmented diagram");
  auto sk = RankedSkeleton::from(braid.d(), braid.skeleton());
  const int n = braid.free_count();
  const int d = braid.d();
  CodeCell cell{n, d, std::vector<int>(static_cast<std::size_t>(n * d))};
  for (int a = 0; a < n; ++a) {
    for (int i = 0; i < d; ++i) {
      const auto& v = braid.free()[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
      const auto& row = sk.sorted[static_cast<std::size_t>(i)];
      auto it = std::lower_bound(row.begin(), row.end(), v);
      auto j = static_cast<int>(it - row.begin());
      int code = 0;
      if (it != row.end() && *it == v) {
        code = 2 * j;
      } else {
        code = 2 * j - 1;
      }
      if (code <= 0 || code >= sk.max_code()) {
        throw InvalidInput("free anchor " + format_rational(v) + " of strand " + std::to_string(a) +
                           " at slice " + std::to_string(i) + " lies outside the extremal constant strands");
      }
      cell.codes[static_cast<std::size_t>(a * d + i)] = code;
    }
  }
  CodeGrid grid(std::move(sk), n, braid.free_closure());
  if (!grid.gap_separated(cell)) {
    throw GapSeparationError("two free strands share a gap or a skeleton value at some slice");
  }
  if (grid.classify(cell) != CellClass::interior) {
    throw SingularityError("diagram is singular after normalization", 0, 0);
  }
  return {std::move(grid), std::move(cell)};
}

CellClass is_singular(const CodeCell& cell, const CodeGrid& grid) { return grid.classify(cell); }

namespace {

struct Walk {
  std::vector<std::uint64_t> cells;  // sorted
  std::string truncation;            // empty unless the walk left the model
};

Walk walk_component(const CodeCell& start, const CodeGrid& grid) {
  Walk walk;
  std::unordered_set<std::uint64_t> seen;
  std::deque<CodeCell> queue;
  seen.insert(grid.pack(start));
  queue.push_back(start);
  while (!queue.empty()) {
    CodeCell cell = std::move(queue.front());
    queue.pop_front();
    for (std::size_t e = 0; e < cell.codes.size(); ++e) {
      for (int delta : {-1, 1}) {
        CodeCell next = cell;
        next.codes[e] += delta;
        if (next.codes[e] < 0 || next.codes[e] > grid.max_code()) continue;
        if (grid.classify(next) != CellClass::interior) continue;
        if (!grid.gap_separated(next)) {
          if (walk.truncation.empty()) {
            walk.truncation = "free strands meet in one gap next to a cell of dimension " +
                              std::to_string(cell.dimension());
          }
          continue;
        }
        if (seen.insert(grid.pack(next)).second) queue.push_back(std::move(next));
      }
    }
  }
  walk.cells.assign(seen.begin(), seen.end());
  std::sort(walk.cells.begin(), walk.cells.end());
  return walk;
}

}  // namespace

std::vector<CodeCell> enumerate_component(const CodeCell& start, const CodeGrid& grid) {
  if (grid.classify(start) != CellClass::interior || !grid.gap_separated(start)) {
    throw InvalidInput("enumeration must start from an interior, gap-separated cell");
  }
  auto walk = walk_component(start, grid);
  if (!walk.truncation.empty()) throw GapSeparationError(walk.truncation);
  std::vector<CodeCell> out;
  out.reserve(walk.cells.size());
  for (auto key : walk.cells) out.push_back(grid.unpack(key));
  return out;
}

std::size_t ComplexPair::index_of(std::uint64_t key) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), key);
  if (it == cells.end() || *it != key) return cells.size();
  return static_cast<std::size_t>(it - cells.begin());
}

int ComplexPair::top_dimension() const {
  return dims.empty() ? -1 : *std::max_element(dims.begin(), dims.end());
}

namespace {

// Every face of the cube `key` (including itself), appended to out.
void append_faces(std::uint64_t key, const CodeGrid& grid, std::vector<std::uint64_t>& out) {
  std::vector<std::uint64_t> odd_places;
  for (int e = 0; e < grid.entries(); ++e) {
    if (grid.digit(key, e) % 2 != 0) odd_places.push_back(grid.place(e));
  }
  const std::size_t k = odd_places.size();
  std::vector<int> state(k, 0);  // 0 keep, 1 lower, 2 upper
  while (true) {
    std::uint64_t face = key;
    for (std::size_t j = 0; j < k; ++j) {
      if (state[j] == 1) face -= odd_places[j];
      if (state[j] == 2) face += odd_places[j];
    }
    out.push_back(face);
    std::size_t j = 0;
    while (j < k && ++state[j] == 3) state[j++] = 0;
    if (j == k) break;
  }
}

}  // namespace

ComplexPair close(const std::vector<CodeCell>& component, const CodeGrid& grid, int id) {
  ComplexPair pair;
  pair.component = id;
  std::vector<std::uint64_t> members;
  members.reserve(component.size());
  for (const auto& c : component) members.push_back(grid.pack(c));
  std::sort(members.begin(), members.end());

  // Faces of maximal members cover everything.
  std::vector<std::uint64_t> all;
  for (auto key : members) {
    bool maximal = true;
    for (int e = 0; e < grid.entries() && maximal; ++e) {
      const int code = grid.digit(key, e);
      if (code % 2 != 0) continue;
      if (code > 0 && std::binary_search(members.begin(), members.end(), key - grid.place(e))) maximal = false;
      if (code < grid.max_code() && std::binary_search(members.begin(), members.end(), key + grid.place(e))) {
        maximal = false;
      }
    }
    if (maximal) append_faces(key, grid, all);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  pair.cells = std::move(all);

  const std::size_t size = pair.cells.size();
  pair.dims.resize(size);
  pair.interior.assign(size, false);
  pair.in_exit.assign(size, false);
  pair.face_offsets.reserve(size + 1);
  pair.face_offsets.push_back(0);
  std::size_t next_member = 0;
  for (std::size_t j = 0; j < size; ++j) {
    const auto key = pair.cells[j];
    const CodeCell cell = grid.unpack(key);
    pair.dims[j] = cell.dimension();
    while (next_member < members.size() && members[next_member] < key) ++next_member;
    pair.interior[j] = next_member < members.size() && members[next_member] == key;
    for (int e = 0; e < grid.entries(); ++e) {
      if (cell.codes[static_cast<std::size_t>(e)] % 2 == 0) continue;
      // the lower face sorts before j, the upper one after it
      const auto lower = key - grid.place(e);
      const auto upper = key + grid.place(e);
      auto lo = std::lower_bound(pair.cells.begin(), pair.cells.begin() + static_cast<std::ptrdiff_t>(j), lower);
      auto hi = std::lower_bound(pair.cells.begin() + static_cast<std::ptrdiff_t>(j) + 1, pair.cells.end(), upper);
      pair.face_list.push_back(static_cast<std::uint32_t>(lo - pair.cells.begin()));
      pair.face_list.push_back(static_cast<std::uint32_t>(hi - pair.cells.begin()));
    }
    pair.face_offsets.push_back(static_cast<std::uint32_t>(pair.face_list.size()));
  }

  bool first = true;
  for (const auto& c : component) {
    int crossings = grid.crossing_number(c);
    if (first) {
      pair.crossing_number = crossings;
      first = false;
    } else if (crossings != pair.crossing_number) {
      throw InconsistencyError("crossing number varies across component " + std::to_string(id));
    }
  }
  return pair;
}

void exit_set(ComplexPair& pair, const CodeGrid& grid) {
  std::unordered_map<std::uint64_t, bool> verdicts;
  for (std::size_t j = 0; j < pair.size(); ++j) {
    if (!pair.interior[j]) continue;
    const CodeCell cell = grid.unpack(pair.cells[j]);
    for (int a = 0; a < grid.n(); ++a) {
      for (int i = 0; i < grid.d(); ++i) {
        const auto e = static_cast<std::size_t>(a * grid.d() + i);
        const int code = cell.codes[e];
        if (code % 2 == 0) continue;
        for (int delta : {-1, 1}) {
          CodeCell face = cell;
          face.codes[e] = code + delta;
          auto tangent = grid.tangencies(face);
          if (tangent.size() != 1) continue;
          if (tangent[0] != std::make_pair(a, i)) continue;
          const int s = grid.skeleton().by_rank[static_cast<std::size_t>(i)][static_cast<std::size_t>((code + delta) / 2)];
          const int inside = grid.sign(cell, a, i, s);
          const int flank = grid.sign(face, a, i - 1, s);
          const bool exit = inside != flank;

          const auto key = grid.pack(face);
          auto [it, fresh] = verdicts.emplace(key, exit);
          if (!fresh && it->second != exit) {
            throw InconsistencyError("face is an exit from one side and an entrance from the other");
          }

          CodeCell outward = cell;
          outward.codes[e] = code + 2 * delta;
          if (grid.in_range(outward) && grid.gap_separated(outward) &&
              grid.classify(outward) == CellClass::interior) {
            const int expected = pair.crossing_number + (exit ? -2 : 2);
            if (grid.crossing_number(outward) != expected) {
              throw InconsistencyError("exit verdict disagrees with the crossing count across a face");
            }
          }
        }
      }
    }
  }

  std::vector<std::uint64_t> exit_closure;
  for (const auto& [key, exit] : verdicts) {
    if (exit) append_faces(key, grid, exit_closure);
  }
  std::sort(exit_closure.begin(), exit_closure.end());
  exit_closure.erase(std::unique(exit_closure.begin(), exit_closure.end()), exit_closure.end());
  for (auto key : exit_closure) {
    auto idx = pair.index_of(key);
    if (idx == pair.size()) throw InconsistencyError("exit face outside the closure");
    pair.in_exit[idx] = true;
  }
  pair.exit_marked = true;
}

ProperVerdict properness_check(const ComplexPair& pair, const CodeGrid& grid) {
  const auto& sk = grid.skeleton();
  const int d = grid.d();
  for (auto key : pair.cells) {
    const CodeCell cell = grid.unpack(key);
    for (int a = 0; a < grid.n(); ++a) {
      // all anchors of the free component through a must be even
      bool all_even = true;
      bool on_boundary = true;
      int b = a;
      do {
        for (int i = 0; i < d; ++i) {
          int c = cell.at(b, i);
          all_even = all_even && c % 2 == 0;
          on_boundary = on_boundary && (c == 0 || c == grid.max_code());
        }
        b = grid.free_closure()[static_cast<std::size_t>(b)];
      } while (b != a);
      if (!all_even) continue;
      if (on_boundary) {
        return {false, cell,
                "free strand " + std::to_string(a) + " lies on the extremal constant strands at every slice"};
      }
      for (int s = 0; s < sk.m; ++s) {
        int fa = a;
        int ts = s;
        bool collapsed = true;
        do {
          for (int i = 0; i < d && collapsed; ++i) {
            collapsed = cell.at(fa, i) == 2 * sk.rank[static_cast<std::size_t>(i)][static_cast<std::size_t>(ts)];
          }
          fa = grid.free_closure()[static_cast<std::size_t>(fa)];
          ts = sk.closure[static_cast<std::size_t>(ts)];
        } while (collapsed && !(fa == a && ts == s));
        if (collapsed) {
          return {false, cell,
                  "free strand " + std::to_string(a) + " collapses onto skeleton strand " + std::to_string(s)};
        }
      }
    }
  }
  return {};
}

std::vector<ComponentInfo> enumerate_all(
    const CodeGrid& grid, const std::function<void(const ComplexPair&, const ComponentInfo&)>& visit) {
  const int gaps = grid.skeleton().m - 1;
  if (grid.n() > gaps) {
    throw GapSeparationError(std::to_string(grid.n()) + " free strands cannot occupy " +
                             std::to_string(gaps) + " gaps separately");
  }
  const int len = grid.entries();
  // Dense index of top cells: digit (code-1)/2 in base `gaps`.
  std::size_t top_count = 1;
  for (int e = 0; e < len; ++e) {
    top_count *= static_cast<std::size_t>(gaps);
    if (top_count > (std::size_t{1} << 34)) throw CapExceeded("too many top cells for exhaustive mode");
  }
  std::vector<bool> visited(top_count, false);
  auto top_index = [&](const CodeCell& c) {
    std::size_t idx = 0;
    for (int code : c.codes) idx = idx * static_cast<std::size_t>(gaps) + static_cast<std::size_t>((code - 1) / 2);
    return idx;
  };

  std::vector<ComponentInfo> infos;
  // With three or more free strands an interior cell can have every coface
  // crowded, so components without top cells are found by a second scan.
  const bool full_scan = grid.n() >= 3;
  std::unordered_set<std::uint64_t> seen_cells;

  auto process = [&](const CodeCell& start) {
    auto walk = walk_component(start, grid);
    std::vector<CodeCell> members;
    members.reserve(walk.cells.size());
    for (auto key : walk.cells) {
      members.push_back(grid.unpack(key));
      if (members.back().dimension() == len) visited[top_index(members.back())] = true;
      if (full_scan) seen_cells.insert(key);
    }

    ComponentInfo info;
    info.id = static_cast<int>(infos.size());
    info.representative = start;
    info.interior_cells = members.size();
    info.truncated = !walk.truncation.empty();
    info.truncation = walk.truncation;

    ComplexPair pair = close(members, grid, info.id);
    info.closure_cells = pair.size();
    info.crossing_number = pair.crossing_number;
    info.verdict = properness_check(pair, grid);
    if (info.verdict.proper && !info.truncated) {
      exit_set(pair, grid);
      info.exit_cells = static_cast<std::size_t>(std::count(pair.in_exit.begin(), pair.in_exit.end(), true));
      info.certificate = conjugacy_certificate(grid.cell_word(start));
      if (visit) visit(pair, info);
    }
    infos.push_back(std::move(info));
  };

  CodeCell cell{grid.n(), grid.d(), std::vector<int>(static_cast<std::size_t>(len), 1)};
  for (std::size_t idx = 0; idx < top_count; ++idx) {
    if (idx > 0) {
      // odometer over odd codes, last entry fastest
      for (int e = len - 1; e >= 0; --e) {
        auto& c = cell.codes[static_cast<std::size_t>(e)];
        c += 2;
        if (c < grid.max_code()) break;
        c = 1;
      }
    }
    if (visited[idx] || !grid.gap_separated(cell)) continue;
    process(cell);
  }

  if (full_scan) {
    // codes 0 and max_code sit on the constant strands and are never interior
    std::fill(cell.codes.begin(), cell.codes.end(), 1);
    while (true) {
      if (grid.gap_separated(cell) && grid.classify(cell) == CellClass::interior &&
          !seen_cells.count(grid.pack(cell))) {
        process(cell);
      }
      int e = len - 1;
      for (; e >= 0; --e) {
        auto& c = cell.codes[static_cast<std::size_t>(e)];
        if (++c < grid.max_code()) break;
        c = 1;
      }
      if (e < 0) break;
    }
  }

  std::map<std::string, std::vector<int>> groups;
  for (const auto& info : infos) {
    if (!info.certificate.empty()) groups[info.certificate].push_back(info.id);
  }
  int g = 0;
  for (const auto& [token, ids] : groups) {
    for (int id : ids) {
      infos[static_cast<std::size_t>(id)].group = g;
      infos[static_cast<std::size_t>(id)].undecided = ids.size() > 1;
    }
    ++g;
  }
  return infos;
}

nlohmann::json cell_dump(const ComplexPair& pair, const CodeGrid& grid) {
  nlohmann::json doc;
  doc["component"] = pair.component;
  doc["crossing_number"] = pair.crossing_number;
  auto cells = nlohmann::json::array();
  for (std::size_t j = 0; j < pair.size(); ++j) {
    const CodeCell cell = grid.unpack(pair.cells[j]);
    auto codes = nlohmann::json::array();
    for (int a = 0; a < cell.n; ++a) {
      auto row = nlohmann::json::array();
      for (int i = 0; i < cell.d; ++i) row.push_back(cell.at(a, i));
      codes.push_back(std::move(row));
    }
    nlohmann::json entry;
    entry["codes"] = std::move(codes);
    entry["dim"] = pair.dims[j];
    entry["in_exit"] = static_cast<bool>(pair.in_exit[j]);
    cells.push_back(std::move(entry));
  }
  doc["cells"] = std::move(cells);
  return doc;
}

}  // namespace relbraid
