#include "imbalance/irreducibility.hpp"

#include <algorithm>

namespace imbalance {

NearConstancy is_near_constant(std::span<const Depth> segment) {
  NearConstancy result;
  for (const Depth d : segment) {
    if (std::find(result.values.begin(), result.values.end(), d) == result.values.end()) {
      result.values.push_back(d);
    }
  }
  std::sort(result.values.begin(), result.values.end());
  result.verdict = result.values.size() <= 1 ||
                   (result.values.size() == 2 && result.values[1] == result.values[0] + 1);
  return result;
}

namespace {

bool strictly_increasing(std::span<const Depth> segment) {
  return std::adjacent_find(segment.begin(), segment.end(),
                            [](Depth a, Depth b) { return a >= b; }) == segment.end();
}

// Length of the longest near-constant prefix of a sorted segment.
std::size_t near_constant_prefix(std::span<const Depth> segment) {
  if (segment.empty()) return 0;
  const Depth low = segment.front();
  std::size_t k = 0;
  while (k < segment.size() && segment[k] <= low + 1) ++k;
  return k;
}

// Length of the longest near-constant suffix of a sorted segment.
std::size_t near_constant_suffix(std::span<const Depth> segment) {
  if (segment.empty()) return 0;
  const Depth high = segment.back();
  std::size_t k = 0;
  while (k < segment.size() && segment[segment.size() - 1 - k] + 1 >= high) ++k;
  return k;
}

}  // namespace

UVWDecomposition decompose_uvw(const PathLengthSequence& l) {
  const auto c = l.components();
  const std::size_t u_len = near_constant_prefix(c);
  const auto rest = c.subspan(u_len);
  const std::size_t w_len = near_constant_suffix(rest);

  UVWDecomposition d;
  d.u.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(u_len));
  d.v.assign(rest.begin(), rest.end() - static_cast<std::ptrdiff_t>(w_len));
  d.w.assign(rest.end() - static_cast<std::ptrdiff_t>(w_len), rest.end());

  d.segments_shaped =
      is_near_constant(d.u).verdict && is_near_constant(d.w).verdict && strictly_increasing(d.v);
  d.prefix_nonempty = !d.u.empty() || !d.v.empty();

  const bool w_constant = d.w.empty() || d.w.front() == d.w.back();
  const bool w_opens_with_pair = d.w.size() >= 2 && d.w[0] == d.w[1];
  if (w_constant || !w_opens_with_pair) {
    d.deep_run_separated = true;
  } else if (!d.prefix_nonempty) {
    // last(uv) is undefined; only reachable when u is empty, which the
    // greedy construction never produces.
    d.deep_run_separated = false;
  } else {
    const Depth last_uv = d.v.empty() ? d.u.back() : d.v.back();
    d.deep_run_separated = d.w.front() >= last_uv + 2;
  }
  return d;
}

bool is_join_irreducible_bruteforce(const PathLengthSequence& l, const LatticeUniverse& universe) {
  const auto index = universe.index_of(l);
  if (!index) {
    throw Error(ErrorCode::ElementNotInUniverse,
                l.to_string() + " is not in the universe of n = " + std::to_string(universe.n()));
  }
  return universe.lower_covers(*index).size() == 1;
}

bool is_join_irreducible_by_balancing(const PathLengthSequence& l) {
  const std::vector<std::size_t> excess = excess_indices(l);
  if (excess.empty()) return false;
  const PathLengthSequence first = bal(l, excess.front());
  return std::all_of(excess.begin() + 1, excess.end(), [&](std::size_t k) {
    return more_balanced_or_equal(bal(l, k), first);
  });
}

bool is_join_irreducible_by_uvw(const PathLengthSequence& l) {
  if (is_near_constant(l.components()).verdict) return false;
  const UVWDecomposition d = decompose_uvw(l);
  return !d.w.empty() && d.all_conditions();
}

}  // namespace imbalance
