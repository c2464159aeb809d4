#include "imbalance/oracle/oracle.hpp"

#include <algorithm>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "imbalance/lattice.hpp"

namespace imbalance::oracle {

namespace {

using Rational = boost::multiprecision::cpp_rational;

Rational weight(Depth depth) { return Rational(1, BigInt(1) << depth); }

std::vector<Rational> partial_sums(const PathLengthSequence& l) {
  std::vector<Rational> out;
  Rational running = 0;
  for (const Depth d : l.components()) {
    running += weight(d);
    out.push_back(running);
  }
  return out;
}

std::string join_text(const std::vector<PathLengthSequence>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += "; ";
    out += items[i].to_string();
  }
  return out + "}";
}

void require_ceiling(std::size_t n, std::size_t max_n) {
  if (n == 0) throw Error(ErrorCode::PositionOutOfRange, "a universe needs n >= 1");
  if (n > max_n) {
    throw Error(ErrorCode::ResourceLimit,
                "n = " + std::to_string(n) + " exceeds the ceiling " + std::to_string(max_n));
  }
}

void search(std::size_t n, std::vector<std::int64_t>& prefix, const Rational& remaining,
            std::vector<PathLengthSequence>& out) {
  const std::size_t leaves_left = n - prefix.size();
  if (leaves_left == 0) {
    if (remaining == 0) out.push_back(PathLengthSequence::validate(prefix));
    return;
  }
  const std::int64_t start = prefix.empty() ? 0 : prefix.back();
  for (std::int64_t depth = start; depth < static_cast<std::int64_t>(n); ++depth) {
    const Rational w = weight(static_cast<Depth>(depth));
    if (w > remaining) continue;
    // Every later leaf is at least this deep, so weighs at most w.
    if (w * static_cast<long long>(leaves_left) < remaining) break;
    prefix.push_back(depth);
    search(n, prefix, remaining - w, out);
    prefix.pop_back();
  }
}

}  // namespace

bool leq(const PathLengthSequence& l, const PathLengthSequence& h) {
  if (l.size() != h.size()) {
    throw Error(ErrorCode::LengthMismatch, "oracle comparison of different lengths");
  }
  const std::vector<Rational> sl = partial_sums(l);
  const std::vector<Rational> sh = partial_sums(h);
  for (std::size_t i = 0; i < sl.size(); ++i) {
    if (sl[i] > sh[i]) return false;
  }
  return true;
}

std::vector<PathLengthSequence> enumerate_by_partition(std::size_t n, std::size_t max_n) {
  require_ceiling(n, max_n);
  std::vector<PathLengthSequence> out;
  std::vector<std::int64_t> prefix;
  search(n, prefix, Rational(1), out);
  std::sort(out.begin(), out.end());
  return out;
}

NotALattice::NotALattice(PathLengthSequence s, PathLengthSequence t,
                         std::vector<PathLengthSequence> bounds, bool lower)
    : std::runtime_error(std::string("NotALattice: no unique ") +
                         (lower ? "greatest lower" : "least upper") + " bound for " +
                         s.to_string() + " and " + t.to_string() + " among " +
                         join_text(bounds)),
      s_(std::move(s)),
      t_(std::move(t)),
      bounds_(std::move(bounds)) {}

namespace {

using Sums = std::vector<Rational>;

bool sums_leq(const Sums& a, const Sums& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

PathLengthSequence extremal_bound(const PathLengthSequence& s, const PathLengthSequence& t,
                                  std::span<const PathLengthSequence> universe, bool lower) {
  const Sums ss = partial_sums(s);
  const Sums st = partial_sums(t);
  std::vector<PathLengthSequence> bounds;
  std::vector<Sums> bound_sums;
  for (const PathLengthSequence& x : universe) {
    if (x.size() != s.size() || x.size() != t.size()) {
      throw Error(ErrorCode::LengthMismatch, "oracle comparison of different lengths");
    }
    Sums sx = partial_sums(x);
    const bool is_bound =
        lower ? (sums_leq(sx, ss) && sums_leq(sx, st)) : (sums_leq(ss, sx) && sums_leq(st, sx));
    if (is_bound) {
      bounds.push_back(x);
      bound_sums.push_back(std::move(sx));
    }
  }
  std::vector<PathLengthSequence> extremal;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    const bool dominates = std::all_of(bound_sums.begin(), bound_sums.end(), [&](const Sums& y) {
      return lower ? sums_leq(y, bound_sums[i]) : sums_leq(bound_sums[i], y);
    });
    if (dominates) extremal.push_back(bounds[i]);
  }
  if (extremal.size() != 1) throw NotALattice(s, t, std::move(bounds), lower);
  return extremal.front();
}

}  // namespace

PathLengthSequence meet_bruteforce(const PathLengthSequence& s, const PathLengthSequence& t,
                                   std::span<const PathLengthSequence> universe) {
  return extremal_bound(s, t, universe, true);
}

PathLengthSequence join_bruteforce(const PathLengthSequence& s, const PathLengthSequence& t,
                                   std::span<const PathLengthSequence> universe) {
  return extremal_bound(s, t, universe, false);
}

ClosureReport closure_equals_order(std::size_t n, std::size_t max_n) {
  const std::vector<PathLengthSequence> universe = enumerate_by_partition(n, max_n);
  const std::size_t size = universe.size();
  const auto index = [&](const PathLengthSequence& l) {
    const auto it = std::lower_bound(universe.begin(), universe.end(), l);
    if (it == universe.end() || *it != l) {
      throw std::logic_error("balancing step leaves the enumerated universe: " + l.to_string());
    }
    return static_cast<std::size_t>(it - universe.begin());
  };

  // reach[a][b]: a is reachable below b, i.e. (a, b) in the closure.
  std::vector<std::vector<bool>> reach(size, std::vector<bool>(size, false));
  ClosureReport report;
  report.n = n;
  report.universe_size = size;
  for (std::size_t b = 0; b < size; ++b) {
    reach[b][b] = true;
    for (const std::size_t j : excess_indices(universe[b])) {
      reach[index(bal(universe[b], j))][b] = true;
      ++report.relation_size;
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<bool>> squared = reach;
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t c = 0; c < size; ++c) {
        if (!reach[a][c]) continue;
        for (std::size_t b = 0; b < size; ++b) {
          if (reach[c][b] && !squared[a][b]) {
            squared[a][b] = true;
            changed = true;
          }
        }
      }
    }
    reach = std::move(squared);
  }

  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      const bool in_order = leq(universe[a], universe[b]);
      if (in_order != reach[a][b]) {
        report.discrepancies.push_back({universe[a], universe[b], reach[a][b], in_order});
      }
    }
  }
  return report;
}

}  // namespace imbalance::oracle
