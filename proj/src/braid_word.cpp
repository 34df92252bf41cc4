#include "relbraid/braid_word.hpp"

#include "relbraid/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace relbraid {

Permutation identity_permutation(int size) {
  Permutation perm(static_cast<std::size_t>(size));
  for (int p = 0; p < size; ++p) perm[p] = p;
  return perm;
}

Permutation compose(const Permutation& first, const Permutation& then) {
  Permutation out(first.size());
  for (std::size_t p = 0; p < first.size(); ++p) out[p] = then[first[p]];
  return out;
}

Permutation inverse(const Permutation& perm) {
  Permutation out(perm.size());
  for (std::size_t p = 0; p < perm.size(); ++p) out[perm[p]] = static_cast<int>(p);
  return out;
}

std::vector<int> cycle_type(const Permutation& perm, const std::set<int>& labels) {
  std::vector<int> lengths;
  std::set<int> seen;
  for (int start : labels) {
    if (seen.count(start)) continue;
    int len = 0;
    int p = start;
    do {
      seen.insert(p);
      p = perm[p];
      ++len;
    } while (p != start);
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

BraidWord::BraidWord(int strands, std::vector<int> letters, std::set<int> free_labels)
    : strands_(strands), letters_(std::move(letters)), free_labels_(std::move(free_labels)) {
  if (strands_ < 1) throw RangeError("a braid needs at least one strand");
  for (int g : letters_) {
    if (g == 0 || std::abs(g) > strands_ - 1) {
      throw RangeError("generator " + std::to_string(g) + " out of range for " +
                       std::to_string(strands_) + " strands");
    }
  }
  for (int label : free_labels_) {
    if (label < 0 || label >= strands_) {
      throw RangeError("free label " + std::to_string(label) + " out of range");
    }
  }
  auto perm = permutation_of(*this);
  for (int label : free_labels_) {
    if (!free_labels_.count(perm[label])) {
      throw InvalidInput("free strand at position " + std::to_string(label) +
                         " closes up on a skeleton strand");
    }
  }
}

bool BraidWord::all_positive() const {
  return std::all_of(letters_.begin(), letters_.end(), [](int g) { return g > 0; });
}

std::string BraidWord::to_string() const {
  std::ostringstream out;
  for (std::size_t j = 0; j < letters_.size(); ++j) {
    if (j) out << ' ';
    out << letters_[j];
  }
  return out.str();
}

BraidWord parse_word(std::string_view text, int strands, std::set<int> free_labels) {
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view token = text.substr(pos, end - pos);
    std::string_view digits = token;
    if (!digits.empty() && digits[0] == '+') digits.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || value == 0) {
      throw SyntaxError("malformed generator token '" + std::string(token) + "'");
    }
    letters.push_back(value);
    pos = end;
  }
  return BraidWord(strands, std::move(letters), std::move(free_labels));
}

Permutation permutation_of(const BraidWord& word) {
  // position[s] = current position of the strand that started at s
  Permutation position = identity_permutation(word.strands());
  Permutation occupant = identity_permutation(word.strands());
  for (int g : word.letters()) {
    int lo = std::abs(g) - 1;
    std::swap(occupant[lo], occupant[lo + 1]);
    position[occupant[lo]] = lo;
    position[occupant[lo + 1]] = lo + 1;
  }
  return position;
}

int exponent_sum(const BraidWord& word) {
  int sum = 0;
  for (int g : word.letters()) sum += g > 0 ? 1 : -1;
  return sum;
}

namespace {

Permutation delta_perm(int k) {
  Permutation perm(static_cast<std::size_t>(k));
  for (int p = 0; p < k; ++p) perm[p] = k - 1 - p;
  return perm;
}

// Apply the adjacent swap of positions g-1, g to a position.
int swap_position(int g, int p) {
  if (p == g - 1) return g;
  if (p == g) return g - 1;
  return p;
}

Permutation generator_perm(int k, int g) {
  Permutation perm(static_cast<std::size_t>(k));
  for (int p = 0; p < k; ++p) perm[p] = swap_position(g, p);
  return perm;
}

// Delta X Delta^-1, i.e. sigma_i -> sigma_{k-i}.
Permutation flip(const Permutation& perm) {
  const int k = static_cast<int>(perm.size());
  Permutation out(perm.size());
  for (int p = 0; p < k; ++p) out[p] = k - 1 - perm[k - 1 - p];
  return out;
}

// Strands starting at g-1 and g cross.
bool starts_with(const Permutation& perm, int g) { return perm[g - 1] > perm[g]; }

// Moves generators from the front of `right` onto the end of `left` until
// the pair is left-weighted. Returns true if anything moved.
bool left_weight(Permutation& left, Permutation& right) {
  const int k = static_cast<int>(left.size());
  Permutation left_inverse = inverse(left);
  bool changed = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int g = 1; g < k; ++g) {
      // right starts with sigma_g and left does not already end with it
      if (right[g - 1] > right[g] && left_inverse[g - 1] < left_inverse[g]) {
        // left * sigma_g, sigma_g^-1 * right
        std::swap(left_inverse[g - 1], left_inverse[g]);
        left[left_inverse[g - 1]] = g - 1;
        left[left_inverse[g]] = g;
        std::swap(right[g - 1], right[g]);
        moved = changed = true;
      }
    }
  }
  return changed;
}

}  // namespace

NormalForm left_normal_form(const BraidWord& word) {
  const int k = word.strands();
  NormalForm nf;
  nf.strands = k;
  const Permutation delta = delta_perm(k);
  const Permutation identity = identity_permutation(k);

  // Delta^inf * factors with every factor a permutation braid.
  std::vector<Permutation> factors;
  int inf = 0;
  for (int g : word.letters()) {
    if (g > 0) {
      factors.push_back(generator_perm(k, g));
    } else {
      // sigma_g^-1 = Delta^-1 (Delta sigma_g^-1); Delta^-1 moves left flipping factors.
      --inf;
      for (auto& f : factors) f = flip(f);
      factors.push_back(compose(delta, generator_perm(k, -g)));
    }
    // Appending one simple factor to a normal form needs one backward pass.
    for (std::size_t j = factors.size() - 1; j > 0; --j) {
      if (!left_weight(factors[j - 1], factors[j])) break;
    }
  }

  // Final sweep; a no-op when the incremental passes already left-weighted everything.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < factors.size(); ++j) {
      if (left_weight(factors[j], factors[j + 1])) changed = true;
    }
  }

  std::size_t head = 0;
  while (head < factors.size() && factors[head] == delta) ++head;
  inf += static_cast<int>(head);
  std::size_t tail = factors.size();
  while (tail > head && factors[tail - 1] == identity) --tail;
  nf.inf = inf;
  nf.factors.assign(factors.begin() + static_cast<std::ptrdiff_t>(head),
                    factors.begin() + static_cast<std::ptrdiff_t>(tail));
  return nf;
}

std::vector<int> permutation_braid_letters(const Permutation& perm) {
  const int k = static_cast<int>(perm.size());
  std::vector<int> letters;
  Permutation rest = perm;
  bool found = true;
  while (found) {
    found = false;
    for (int g = 1; g < k; ++g) {
      if (starts_with(rest, g)) {
        letters.push_back(g);
        Permutation shifted(rest.size());
        for (int p = 0; p < k; ++p) shifted[p] = rest[swap_position(g, p)];
        rest = std::move(shifted);
        found = true;
        break;
      }
    }
  }
  return letters;
}

std::vector<int> delta_letters(int strands) {
  std::vector<int> letters;
  for (int top = strands - 1; top >= 1; --top) {
    for (int g = 1; g <= top; ++g) letters.push_back(g);
  }
  return letters;
}

BraidWord positive_word_of(const NormalForm& nf, std::set<int> free_labels) {
  if (nf.inf < 0) throw InvalidInput("normal form with negative infimum is not positive");
  std::vector<int> letters;
  const auto delta = delta_letters(nf.strands);
  for (int t = 0; t < nf.inf; ++t) letters.insert(letters.end(), delta.begin(), delta.end());
  for (const auto& f : nf.factors) {
    auto part = permutation_braid_letters(f);
    letters.insert(letters.end(), part.begin(), part.end());
  }
  return BraidWord(nf.strands, std::move(letters), std::move(free_labels));
}

PositiveTwist minimal_positive_twists(const BraidWord& word) {
  NormalForm nf = left_normal_form(word);
  int twists = nf.inf >= 0 ? 0 : (-nf.inf + 1) / 2;
  if (twists == 0 && word.all_positive()) return {0, word};
  nf.inf += 2 * twists;
  // Delta^2 is pure, so the free labels stay closed.
  return {twists, positive_word_of(nf, word.free_labels())};
}

std::vector<int> cyclically_reduce(const std::vector<int>& letters) {
  std::vector<int> stack;
  for (int g : letters) {
    if (!stack.empty() && stack.back() == -g) {
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  std::size_t lo = 0;
  std::size_t hi = stack.size();
  while (hi - lo >= 2 && stack[lo] == -stack[hi - 1]) {
    ++lo;
    --hi;
  }
  return {stack.begin() + static_cast<std::ptrdiff_t>(lo),
          stack.begin() + static_cast<std::ptrdiff_t>(hi)};
}

namespace {

std::string encode(const NormalForm& nf) {
  std::ostringstream out;
  out << nf.inf;
  for (const auto& f : nf.factors) {
    out << ':';
    for (int p : f) out << static_cast<char>('a' + p);
  }
  return out.str();
}

std::string encode_cycles(const std::vector<int>& lengths) {
  std::ostringstream out;
  out << '(';
  for (std::size_t j = 0; j < lengths.size(); ++j) {
    if (j) out << ',';
    out << lengths[j];
  }
  out << ')';
  return out.str();
}

}  // namespace

std::string conjugacy_certificate(const BraidWord& word) {
  const int k = word.strands();
  auto perm = permutation_of(word);
  std::set<int> skeleton;
  for (int p = 0; p < k; ++p) {
    if (!word.free_labels().count(p)) skeleton.insert(p);
  }
  auto reduced = cyclically_reduce(word.letters());

  std::string best;
  if (reduced.empty()) {
    best = encode(NormalForm{k, 0, {}});
  }
  for (std::size_t shift = 0; shift < reduced.size(); ++shift) {
    std::vector<int> rotated(reduced.begin() + static_cast<std::ptrdiff_t>(shift), reduced.end());
    rotated.insert(rotated.end(), reduced.begin(), reduced.begin() + static_cast<std::ptrdiff_t>(shift));
    auto code = encode(left_normal_form(BraidWord(k, std::move(rotated))));
    if (best.empty() || code < best) best = std::move(code);
  }

  std::ostringstream token;
  token << "B" << k << "|e=" << exponent_sum(word)
        << "|free=" << encode_cycles(cycle_type(perm, word.free_labels()))
        << "|skel=" << encode_cycles(cycle_type(perm, skeleton)) << "|nf=" << best;
  return token.str();
}

}  // namespace relbraid
