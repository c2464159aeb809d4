#include "imbalance/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>

#include "detail.hpp"
#include "imbalance/transforms.hpp"

namespace imbalance {

namespace {

void require_same_length(const PathLengthSequence& s, const PathLengthSequence& t) {
  if (s.size() != t.size()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(s.size()) + " components vs " +
                                               std::to_string(t.size()));
  }
}

// Row-major square bit matrix.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t size)
      : size_(size), words_((size + 63) / 64), bits_(size * words_, 0) {}

  void set(std::size_t row, std::size_t col) {
    bits_[row * words_ + col / 64] |= std::uint64_t{1} << (col % 64);
  }
  bool test(std::size_t row, std::size_t col) const {
    return (bits_[row * words_ + col / 64] >> (col % 64)) & 1U;
  }
  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }
  std::size_t words() const { return words_; }
  std::size_t size() const { return size_; }

 private:
  std::size_t size_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace

std::optional<std::size_t> LatticeUniverse::index_of(const PathLengthSequence& l) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), l);
  if (it == elements_.end() || *it != l) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

void LatticeUniverse::require_covers() const {
  if (!has_covers_) {
    throw Error(ErrorCode::ResourceLimit, "cover edges were not computed for this universe");
  }
}

std::vector<std::size_t> LatticeUniverse::lower_covers(std::size_t index) const {
  require_covers();
  std::vector<std::size_t> out;
  for (const auto& [lower, upper] : covers_) {
    if (upper == index) out.push_back(lower);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> LatticeUniverse::upper_covers(std::size_t index) const {
  require_covers();
  std::vector<std::size_t> out;
  for (const auto& [lower, upper] : covers_) {
    if (lower == index) out.push_back(upper);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LatticeUniverse LatticeUniverse::with_covers() const {
  const std::size_t count = elements_.size();
  // below(b) holds every a with a ⊲ b.
  BitMatrix below(count);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      switch (compare(elements_[a], elements_[b])) {
        case OrderVerdict::MoreBalanced: below.set(b, a); break;
        case OrderVerdict::LessBalanced: below.set(a, b); break;
        default: break;
      }
    }
  }

  // a ⋖ b iff a ⊲ b and a is not below any c ⊲ b.
  std::vector<CoverEdge> covers;
  std::vector<std::uint64_t> shadowed(below.words());
  for (std::size_t b = 0; b < count; ++b) {
    std::fill(shadowed.begin(), shadowed.end(), 0);
    const std::uint64_t* down = below.row(b);
    for (std::size_t c = 0; c < count; ++c) {
      if (!below.test(b, c)) continue;
      const std::uint64_t* down_c = below.row(c);
      for (std::size_t w = 0; w < below.words(); ++w) shadowed[w] |= down_c[w];
    }
    for (std::size_t a = 0; a < count; ++a) {
      const bool is_below = (down[a / 64] >> (a % 64)) & 1U;
      const bool is_shadowed = (shadowed[a / 64] >> (a % 64)) & 1U;
      if (is_below && !is_shadowed) covers.emplace_back(a, b);
    }
  }
  std::sort(covers.begin(), covers.end());

  LatticeUniverse result = *this;
  result.covers_ = std::move(covers);
  result.has_covers_ = true;
  return result;
}

LatticeUniverse enumerate(std::size_t n, std::size_t max_n) {
  if (n == 0) {
    throw Error(ErrorCode::PositionOutOfRange, "a universe needs n >= 1");
  }
  if (n > max_n) {
    throw Error(ErrorCode::ResourceLimit,
                "n = " + std::to_string(n) + " exceeds the ceiling " + std::to_string(max_n));
  }
  std::set<PathLengthSequence> level{PathLengthSequence::validate({0})};
  for (std::size_t size = 1; size < n; ++size) {
    std::set<PathLengthSequence> next;
    for (const PathLengthSequence& l : level) {
      for (std::size_t position = 1; position <= size; ++position) {
        // Splitting any leaf of a run gives the same canonical result.
        if (position < size && l.at(position) == l.at(position + 1)) continue;
        next.insert(expansion_at(l, position));
      }
    }
    level = std::move(next);
  }
  return LatticeUniverse(n, std::vector<PathLengthSequence>(level.begin(), level.end()));
}

LatticeUniverse hasse(std::size_t n, std::size_t max_n) {
  return enumerate(n, max_n).with_covers();
}

std::vector<std::pair<PathLengthSequence, PathLengthSequence>> covering_pairs(std::size_t n,
                                                                              std::size_t max_n) {
  const LatticeUniverse universe = hasse(n, max_n);
  std::vector<std::pair<PathLengthSequence, PathLengthSequence>> pairs;
  pairs.reserve(universe.cover_edges().size());
  for (const auto& [lower, upper] : universe.cover_edges()) {
    pairs.emplace_back(universe.elements()[lower], universe.elements()[upper]);
  }
  return pairs;
}

PathLengthSequence meet(const PathLengthSequence& s, const PathLengthSequence& t) {
  require_same_length(s, t);
  // Contraction chains s = s_n, s_{n-1}, ..., s_1 = (0), and likewise for t.
  std::vector<PathLengthSequence> chain_s{s};
  std::vector<PathLengthSequence> chain_t{t};
  while (chain_s.back().size() > 1) {
    chain_s.push_back(contraction(chain_s.back()));
    chain_t.push_back(contraction(chain_t.back()));
  }

  PathLengthSequence m = chain_s.back();
  for (std::size_t k = chain_s.size() - 1; k-- > 0;) {
    PathLengthSequence upper = upper_expansion(m);
    if (more_balanced_or_equal(upper, chain_s[k]) && more_balanced_or_equal(upper, chain_t[k])) {
      m = std::move(upper);
    } else {
      m = lower_expansion(m);
    }
  }
  return m;
}

PathLengthSequence join(const PathLengthSequence& s, const PathLengthSequence& t,
                        const LatticeUniverse& universe) {
  require_same_length(s, t);
  if (s.size() != universe.n()) {
    throw Error(ErrorCode::LengthMismatch, "arguments have " + std::to_string(s.size()) +
                                               " components, universe has " +
                                               std::to_string(universe.n()));
  }
  std::optional<PathLengthSequence> result;
  for (const PathLengthSequence& u : universe.elements()) {
    if (!more_balanced_or_equal(s, u) || !more_balanced_or_equal(t, u)) continue;
    result = result ? meet(*result, u) : u;
  }
  // The top is an upper bound of everything, so the fold is never empty.
  return *result;
}

PathLengthSequence join(const PathLengthSequence& s, const PathLengthSequence& t,
                        std::size_t max_n) {
  require_same_length(s, t);
  return join(s, t, enumerate(s.size(), max_n));
}

PathLengthSequence bottom(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::PositionOutOfRange, "bottom needs n >= 1");
  const auto q = static_cast<std::int64_t>(std::bit_width(n) - 1);
  const std::size_t power = std::size_t{1} << q;
  const std::size_t r = n - power;
  std::vector<std::int64_t> depths(power - r, q);
  depths.insert(depths.end(), 2 * r, q + 1);
  return PathLengthSequence::validate(depths);
}

PathLengthSequence top(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::PositionOutOfRange, "top needs n >= 1");
  if (n == 1) return PathLengthSequence::validate({0});
  std::vector<std::int64_t> depths;
  depths.reserve(n);
  for (std::size_t d = 1; d < n; ++d) depths.push_back(static_cast<std::int64_t>(d));
  depths.push_back(static_cast<std::int64_t>(n - 1));
  return PathLengthSequence::validate(depths);
}

std::vector<std::size_t> excess_indices(const PathLengthSequence& l) {
  std::vector<std::size_t> out;
  const auto c = l.components();
  // The smallest component is the first, so "some l_i <= l_j - 2" is first <= l_j - 2.
  for (std::size_t j = 1; j + 1 < c.size(); ++j) {
    if (c[j - 1] < c[j] && c[j] == c[j + 1] && l.first() + 2 <= c[j]) out.push_back(j + 1);
  }
  return out;
}

PathLengthSequence bal(const PathLengthSequence& l, std::size_t excess_index) {
  const std::vector<std::size_t> excess = excess_indices(l);
  if (!std::binary_search(excess.begin(), excess.end(), excess_index)) {
    throw Error(ErrorCode::NotAnExcessIndex,
                std::to_string(excess_index) + " is not an excess index of " + l.to_string(),
                excess_index);
  }
  const auto c = l.components();
  const Depth deep = c[excess_index - 1];
  // Last position whose depth is at most deep - 2.
  std::size_t shallow = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] + 2 <= deep) shallow = i;
  }

  std::vector<Depth> depths(c.begin(), c.end());
  const Depth split = depths[shallow];
  // Drop the pair at excess_index, excess_index+1 first so `shallow` stays put.
  depths.erase(depths.begin() + static_cast<std::ptrdiff_t>(excess_index - 1),
               depths.begin() + static_cast<std::ptrdiff_t>(excess_index + 1));
  depths.erase(depths.begin() + static_cast<std::ptrdiff_t>(shallow));
  depths.push_back(deep - 1);
  depths.push_back(split + 1);
  depths.push_back(split + 1);
  return detail::canonical(std::move(depths));
}

std::vector<BalancingStep> minimal_balancing_relation(const LatticeUniverse& universe) {
  std::vector<BalancingStep> steps;
  for (const PathLengthSequence& l : universe.elements()) {
    for (const std::size_t j : excess_indices(l)) {
      steps.push_back(BalancingStep{l, j, bal(l, j)});
    }
  }
  return steps;
}

std::vector<BalancingStep> minimal_balancing_relation(std::size_t n, std::size_t max_n) {
  return minimal_balancing_relation(enumerate(n, max_n));
}

}  // namespace imbalance
