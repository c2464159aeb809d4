#include "imbalance/oracle/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "imbalance/irreducibility.hpp"
#include "imbalance/lattice.hpp"
#include "imbalance/oracle/oracle.hpp"
#include "imbalance/transforms.hpp"
#include "imbalance/trees.hpp"

namespace imbalance::verify {

namespace {

using Universe = std::vector<PathLengthSequence>;

// Verify runs at whatever n the caller asks for; the ceiling belongs to the
// caller (the CLI enforces its own).
constexpr std::size_t kNoCeiling = static_cast<std::size_t>(-1);

class Check {
 public:
  explicit Check(std::string_view name, std::size_t n) {
    report_.property = std::string(name);
    report_.n = n;
  }

  // Records one examined case; returns false once a failure is recorded so
  // loops can stop early.
  bool expect(bool ok, const std::function<std::string()>& witness) {
    ++report_.checked;
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.witness = witness();
    }
    return report_.passed;
  }

  bool ok() const { return report_.passed; }
  PropertyReport done() { return std::move(report_); }

 private:
  PropertyReport report_;
};

std::string pair_text(const PathLengthSequence& a, const PathLengthSequence& b) {
  return a.to_string() + " / " + b.to_string();
}

bool leq(const PathLengthSequence& a, const PathLengthSequence& b) {
  return more_balanced_or_equal(a, b);
}

Universe universe(std::size_t n) { return enumerate(n, kNoCeiling).elements(); }

PropertyReport enumeration_oracle(std::size_t n) {
  Check check("enumeration-oracle", n);
  const Universe generated = universe(n);
  const Universe searched = oracle::enumerate_by_partition(n, kNoCeiling);
  check.expect(generated == searched, [&] {
    return "expansion closure has " + std::to_string(generated.size()) +
           " elements, partition search has " + std::to_string(searched.size());
  });
  return check.done();
}

PropertyReport lattice_existence(std::size_t n) {
  Check check("lattice-existence", n);
  const Universe u = oracle::enumerate_by_partition(n, kNoCeiling);
  for (const auto& s : u) {
    for (const auto& t : u) {
      std::string failure;
      try {
        oracle::meet_bruteforce(s, t, u);
        oracle::join_bruteforce(s, t, u);
      } catch (const oracle::NotALattice& e) {
        failure = e.what();
      }
      if (!check.expect(failure.empty(), [&] { return failure; })) return check.done();
    }
  }
  return check.done();
}

PropertyReport partial_order(std::size_t n) {
  Check check("partial-order", n);
  const Universe u = universe(n);
  for (const auto& a : u) {
    if (!check.expect(compare(a, a) == OrderVerdict::Equal, [&] { return a.to_string(); })) {
      return check.done();
    }
    for (const auto& b : u) {
      const bool antisymmetric = !(leq(a, b) && leq(b, a)) || a == b;
      if (!check.expect(antisymmetric, [&] { return "antisymmetry " + pair_text(a, b); })) {
        return check.done();
      }
      if (!leq(a, b)) continue;
      for (const auto& c : u) {
        const bool transitive = !leq(b, c) || leq(a, c);
        if (!check.expect(transitive, [&] {
              return "transitivity " + a.to_string() + " / " + b.to_string() + " / " +
                     c.to_string();
            })) {
          return check.done();
        }
      }
    }
  }
  return check.done();
}

PropertyReport last_monotone(std::size_t n) {
  Check check("last-monotone", n);
  const Universe u = universe(n);
  for (const auto& l : u) {
    for (const auto& h : u) {
      if (!leq(l, h)) continue;
      if (!check.expect(l.last() <= h.last(), [&] { return pair_text(l, h); })) {
        return check.done();
      }
    }
  }
  return check.done();
}

PropertyReport suffix_monotone(std::size_t n) {
  Check check("suffix-monotone", n);
  const Universe u = universe(n);
  for (const auto& l : u) {
    for (const auto& h : u) {
      if (!leq(l, h) || l.last() != h.last()) continue;
      if (!check.expect(l.suffix_length() <= h.suffix_length(),
                        [&] { return pair_text(l, h); })) {
        return check.done();
      }
    }
  }
  return check.done();
}

PropertyReport scale_independence(std::size_t n) {
  Check check("scale-independence", n);
  const Universe u = universe(n);
  for (const auto& l : u) {
    for (const auto& h : u) {
      const OrderVerdict base = compare(l, h);
      const unsigned low = std::max(l.last(), h.last());
      for (unsigned scale = low; scale <= low + 3; ++scale) {
        if (!check.expect(compare_at_scale(l, h, scale) == base, [&] {
              return pair_text(l, h) + " at scale " + std::to_string(scale);
            })) {
          return check.done();
        }
      }
    }
  }
  return check.done();
}

PropertyReport expansion_monotone(std::size_t n) {
  Check check("expansion-monotone", n);
  const Universe u = universe(n);
  for (const auto& l : u) {
    for (const auto& h : u) {
      if (!leq(l, h)) continue;
      const bool ok = leq(lower_expansion(l), lower_expansion(h)) &&
                      leq(upper_expansion(l), upper_expansion(h));
      if (!check.expect(ok, [&] { return pair_text(l, h); })) return check.done();
    }
  }
  return check.done();
}

PropertyReport constancy_law(std::size_t n) {
  Check check("constancy-law", n);
  for (const auto& l : universe(n)) {
    const bool ok = l.is_constant() == (lower_expansion(l) == upper_expansion(l));
    if (!check.expect(ok, [&] { return l.to_string(); })) break;
  }
  return check.done();
}

PropertyReport contraction_sandwich(std::size_t n) {
  Check check("contraction-sandwich", n);
  for (const auto& l : universe(n)) {
    const PathLengthSequence c = contraction(l);
    const bool ok = leq(lower_expansion(c), l) && leq(l, upper_expansion(c));
    if (!check.expect(ok, [&] { return l.to_string() + " contracts to " + c.to_string(); })) {
      break;
    }
  }
  return check.done();
}

PropertyReport contraction_round_trip(std::size_t n) {
  Check check("contraction-round-trip", n);
  for (const auto& l : universe(n)) {
    const PathLengthSequence back = expansion_at(contraction(l), contraction_position(l));
    if (!check.expect(back == l, [&] { return l.to_string() + " -> " + back.to_string(); })) {
      break;
    }
  }
  return check.done();
}

PropertyReport upper_lower_expansion(std::size_t n) {
  Check check("upper-lower-expansion", n);
  const Universe u = universe(n);
  for (const auto& l : u) {
    for (const auto& h : u) {
      if (!leq(l, h) || l.last() >= h.last()) continue;
      if (!check.expect(leq(upper_expansion(l), lower_expansion(h)),
                        [&] { return pair_text(l, h); })) {
        return check.done();
      }
    }
  }
  return check.done();
}

PropertyReport meet_oracle(std::size_t n) {
  Check check("meet-oracle", n);
  const Universe u = oracle::enumerate_by_partition(n, kNoCeiling);
  for (const auto& s : u) {
    for (const auto& t : u) {
      const PathLengthSequence fast = meet(s, t);
      const PathLengthSequence slow = oracle::meet_bruteforce(s, t, u);
      if (!check.expect(fast == slow, [&] {
            return pair_text(s, t) + ": recursive " + fast.to_string() + ", brute force " +
                   slow.to_string();
          })) {
        return check.done();
      }
    }
  }
  return check.done();
}

PropertyReport meet_last_law(std::size_t n) {
  Check check("meet-last-law", n);
  const Universe u = universe(n);
  for (const auto& s : u) {
    for (const auto& t : u) {
      if (!check.expect(meet(s, t).last() == std::min(s.last(), t.last()),
                        [&] { return pair_text(s, t); })) {
        return check.done();
      }
    }
  }
  return check.done();
}

PropertyReport meet_laws(std::size_t n) {
  Check check("meet-laws", n);
  const Universe u = universe(n);
  for (const auto& s : u) {
    if (!check.expect(meet(s, s) == s, [&] { return "idempotence " + s.to_string(); })) {
      return check.done();
    }
    for (const auto& t : u) {
      const PathLengthSequence m = meet(s, t);
      bool ok = m == meet(t, s) && leq(m, s) && leq(m, t);
      if (!check.expect(ok, [&] { return "commutative lower bound " + pair_text(s, t); })) {
        return check.done();
      }
      for (const auto& x : u) {
        ok = !(leq(x, s) && leq(x, t)) || leq(x, m);
        ok = ok && meet(meet(s, t), x) == meet(s, meet(t, x));
        if (!check.expect(ok, [&] { return pair_text(s, t) + " / " + x.to_string(); })) {
          return check.done();
        }
      }
    }
  }
  return check.done();
}

PropertyReport absorption(std::size_t n) {
  Check check("absorption", n);
  const LatticeUniverse lattice = enumerate(n, kNoCeiling);
  for (const auto& s : lattice.elements()) {
    for (const auto& t : lattice.elements()) {
      const bool ok = join(s, meet(s, t), lattice) == s && meet(s, join(s, t, lattice)) == s;
      if (!check.expect(ok, [&] { return pair_text(s, t); })) return check.done();
    }
  }
  return check.done();
}

PropertyReport join_oracle(std::size_t n) {
  Check check("join-oracle", n);
  const LatticeUniverse lattice = enumerate(n, kNoCeiling);
  const Universe u = oracle::enumerate_by_partition(n, kNoCeiling);
  for (const auto& s : u) {
    for (const auto& t : u) {
      const PathLengthSequence folded = join(s, t, lattice);
      const PathLengthSequence slow = oracle::join_bruteforce(s, t, u);
      if (!check.expect(folded == slow, [&] {
            return pair_text(s, t) + ": fold " + folded.to_string() + ", brute force " +
                   slow.to_string();
          })) {
        return check.done();
      }
    }
  }
  return check.done();
}

PropertyReport closure_equals_order(std::size_t n) {
  Check check("closure-equals-order", n);
  const oracle::ClosureReport report = oracle::closure_equals_order(n, kNoCeiling);
  check.expect(report.equal(), [&] {
    const auto& d = report.discrepancies.front();
    return pair_text(d.lower, d.upper) + (d.in_closure ? " in closure only" : " in order only");
  });
  return check.done();
}

PropertyReport covers_in_balancing(std::size_t n) {
  Check check("covers-in-balancing", n);
  const LatticeUniverse lattice = hasse(n, kNoCeiling);
  const std::vector<BalancingStep> steps = minimal_balancing_relation(lattice);
  for (const auto& [lower, upper] : lattice.cover_edges()) {
    const auto& a = lattice.elements()[lower];
    const auto& b = lattice.elements()[upper];
    const bool found = std::any_of(steps.begin(), steps.end(), [&](const BalancingStep& step) {
      return step.target == a && step.source == b;
    });
    if (!check.expect(found, [&] { return "cover " + pair_text(a, b) + " is no bal step"; })) {
      break;
    }
  }
  return check.done();
}

PropertyReport excess_empty_iff_bottom(std::size_t n) {
  Check check("excess-empty-iff-bottom", n);
  const PathLengthSequence low = bottom(n);
  for (const auto& l : universe(n)) {
    const bool empty = excess_indices(l).empty();
    const bool ok = empty == (l == low) && empty == is_near_constant(l.components()).verdict;
    if (!check.expect(ok, [&] { return l.to_string(); })) break;
  }
  return check.done();
}

PropertyReport bal_sum_decrease(std::size_t n) {
  Check check("bal-sum-decrease", n);
  for (const auto& l : universe(n)) {
    for (const std::size_t j : excess_indices(l)) {
      const PathLengthSequence b = bal(l, j);
      const auto c = l.components();
      Depth shallow = 0;
      for (const Depth d : c) {
        if (d + 2 <= c[j - 1]) shallow = d;
      }
      const std::uint64_t drop = c[j - 1] - shallow - 1;
      const bool ok = strictly_more_balanced(b, l) && drop >= 1 && b.sum() + drop == l.sum();
      if (!check.expect(ok, [&] { return l.to_string() + " at j=" + std::to_string(j); })) {
        return check.done();
      }
    }
  }
  return check.done();
}

PropertyReport bottom_top(std::size_t n) {
  Check check("bottom-top", n);
  const Universe u = oracle::enumerate_by_partition(n, kNoCeiling);
  const PathLengthSequence low = bottom(n);
  const PathLengthSequence high = top(n);
  for (const auto& x : u) {
    const bool ok = oracle::leq(low, x) && oracle::leq(x, high);
    if (!check.expect(ok, [&] { return x.to_string() + " escapes [bottom, top]"; })) break;
  }
  return check.done();
}

PropertyReport triple_agreement(std::size_t n) {
  Check check("irreducibility-triple-agreement", n);
  const LatticeUniverse lattice = hasse(n, kNoCeiling);
  for (const auto& l : lattice.elements()) {
    const bool covers = is_join_irreducible_bruteforce(l, lattice);
    const bool balancing = is_join_irreducible_by_balancing(l);
    const bool uvw = is_join_irreducible_by_uvw(l);
    const bool ok = covers == balancing && balancing == uvw;
    if (!check.expect(ok, [&] {
          return l.to_string() + ": covers=" + std::to_string(covers) +
                 " balancing=" + std::to_string(balancing) + " uvw=" + std::to_string(uvw);
        })) {
      break;
    }
  }
  return check.done();
}

PropertyReport balancing_lower_cover(std::size_t n) {
  Check check("balancing-lower-cover", n);
  const LatticeUniverse lattice = hasse(n, kNoCeiling);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& l = lattice.elements()[i];
    if (!is_join_irreducible_bruteforce(l, lattice)) continue;
    const auto lower = lattice.lower_covers(i);
    const PathLengthSequence b = bal(l, excess_indices(l).front());
    if (!check.expect(lattice.elements()[lower.front()] == b,
                      [&] { return l.to_string() + " -> " + b.to_string(); })) {
      break;
    }
  }
  return check.done();
}

PropertyReport uvw_concatenation(std::size_t n) {
  Check check("uvw-concatenation", n);
  for (const auto& l : universe(n)) {
    const UVWDecomposition d = decompose_uvw(l);
    std::vector<Depth> joined = d.u;
    joined.insert(joined.end(), d.v.begin(), d.v.end());
    joined.insert(joined.end(), d.w.begin(), d.w.end());
    const bool ok = std::equal(joined.begin(), joined.end(), l.components().begin(),
                               l.components().end());
    if (!check.expect(ok, [&] { return l.to_string(); })) break;
  }
  return check.done();
}

PropertyReport depth_count_monotone(std::size_t n) {
  Check check("depth-count-monotone", n);
  const Universe u = universe(n);
  for (const auto& l : u) {
    for (const auto& h : u) {
      if (!leq(l, h)) continue;
      for (std::size_t d = 0; d <= n; ++d) {
        if (!check.expect(nodes_within_depth(l, d) >= nodes_within_depth(h, d), [&] {
              return pair_text(l, h) + " at d=" + std::to_string(d);
            })) {
          return check.done();
        }
      }
    }
  }
  return check.done();
}

PropertyReport sum_monotone(std::size_t n) {
  Check check("sum-monotone", n);
  const Universe u = universe(n);
  for (const auto& l : u) {
    for (const auto& h : u) {
      if (!strictly_more_balanced(l, h)) continue;
      if (!check.expect(sum_components(l) < sum_components(h),
                        [&] { return pair_text(l, h); })) {
        return check.done();
      }
    }
  }
  return check.done();
}

PropertyReport kraft_realization(std::size_t n) {
  Check check("kraft-realization", n);
  for (const auto& l : universe(n)) {
    const std::vector<std::string> code = canonical_code(l);
    bool ok = code.size() == l.size();
    for (std::size_t i = 0; ok && i < code.size(); ++i) {
      ok = code[i].size() == l.components()[i];
      for (std::size_t k = 0; ok && k < code.size(); ++k) {
        if (k != i) ok = code[k].compare(0, code[i].size(), code[i]) != 0;
      }
    }
    if (!check.expect(ok, [&] { return l.to_string(); })) break;
  }
  return check.done();
}

PropertyReport tree_round_trip(std::size_t n) {
  Check check("tree-round-trip", n);
  for (const auto& l : universe(n)) {
    const CodeTree tree = tree_from_sequence(l);
    const bool ok = sequence_from_tree(tree) == l &&
                    tree_from_sequence(sequence_from_tree(tree)) == tree &&
                    tree.node_count() == 2 * l.size() - 1;
    if (!check.expect(ok, [&] { return l.to_string(); })) break;
  }
  return check.done();
}

struct Entry {
  PropertyInfo info;
  PropertyReport (*run)(std::size_t);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"enumeration-oracle", "expansion closure equals partition search", 1},
       enumeration_oracle},
      {{"lattice-existence", "every pair has a unique brute-force meet and join", 1},
       lattice_existence},
      {{"partial-order", "imbalance order is reflexive, antisymmetric, transitive", 1},
       partial_order},
      {{"last-monotone", "l ⊴ h implies last l <= last h", 1}, last_monotone},
      {{"suffix-monotone", "l ⊴ h with equal last implies suf l <= suf h", 1}, suffix_monotone},
      {{"scale-independence", "comparison does not depend on the common scale", 1},
       scale_independence},
      {{"expansion-monotone", "upper and lower expansion preserve ⊴", 1}, expansion_monotone},
      {{"constancy-law", "l constant iff lower and upper expansion coincide", 1}, constancy_law},
      {{"contraction-sandwich", "lower expansion of contraction ⊴ l ⊴ its upper expansion", 2},
       contraction_sandwich},
      {{"contraction-round-trip", "re-expanding the merged leaf restores l", 2},
       contraction_round_trip},
      {{"upper-lower-expansion", "l ⊴ h with last l < last h implies l⁺ ⊴ h₊", 1},
       upper_lower_expansion},
      {{"meet-oracle", "recursive meet equals brute-force meet", 1}, meet_oracle},
      {{"meet-last-law", "last of the meet is the smaller last", 1}, meet_last_law},
      {{"meet-laws", "meet is an idempotent commutative associative glb", 1}, meet_laws},
      {{"absorption", "meet and fold-join absorb each other", 1}, absorption},
      {{"join-oracle", "fold-join equals brute-force join", 1}, join_oracle},
      {{"closure-equals-order", "closure of minimal balancing equals ⊴", 1},
       closure_equals_order},
      {{"covers-in-balancing", "every cover is a minimal balancing step", 1},
       covers_in_balancing},
      {{"excess-empty-iff-bottom", "no excess index iff bottom iff near-constant", 1},
       excess_empty_iff_bottom},
      {{"bal-sum-decrease", "bal is strictly below and drops the sum by l_j - l_i - 1", 1},
       bal_sum_decrease},
      {{"bottom-top", "bottom and top bound the whole universe", 1}, bottom_top},
      {{"irreducibility-triple-agreement", "cover count, balancing and uvw tests agree", 1},
       triple_agreement},
      {{"balancing-lower-cover", "first bal step of an irreducible is its lower cover", 1},
       balancing_lower_cover},
      {{"uvw-concatenation", "u·v·w reproduces l", 1}, uvw_concatenation},
      {{"depth-count-monotone", "nodes within depth d never decrease going down", 1},
       depth_count_monotone},
      {{"sum-monotone", "sum of components strictly increases along ⊲", 1}, sum_monotone},
      {{"kraft-realization", "canonical code is prefix-free with lengths l", 1},
       kraft_realization},
      {{"tree-round-trip", "sequence and canonical tree round trip", 1}, tree_round_trip},
  };
  return table;
}

const Entry& find(std::string_view name) {
  for (const Entry& e : entries()) {
    if (e.info.name == name) return e;
  }
  throw Error(ErrorCode::ParseError, "unknown property '" + std::string(name) + "'");
}

}  // namespace

std::span<const PropertyInfo> property_catalog() {
  static const std::vector<PropertyInfo> catalog = [] {
    std::vector<PropertyInfo> out;
    for (const Entry& e : entries()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

PropertyReport check_property(std::string_view name, std::size_t n) { return find(name).run(n); }

std::vector<PropertyReport> run(std::size_t max_n, std::span<const std::string> names) {
  std::vector<const Entry*> selected;
  if (names.empty()) {
    for (const Entry& e : entries()) selected.push_back(&e);
  } else {
    for (const Entry& e : entries()) {
      if (std::find(names.begin(), names.end(), e.info.name) != names.end()) {
        selected.push_back(&e);
      }
    }
    for (const std::string& name : names) find(name);
  }
  std::vector<PropertyReport> reports;
  for (const Entry* e : selected) {
    for (std::size_t n = e->info.min_n; n <= max_n; ++n) reports.push_back(e->run(n));
  }
  return reports;
}

bool all_passed(std::span<const PropertyReport> reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const PropertyReport& r) { return r.passed; });
}

std::string format_text(std::span<const PropertyReport> reports) {
  std::ostringstream out;
  for (const PropertyReport& r : reports) {
    out << (r.passed ? "pass" : "FAIL") << "  " << r.property << "  n=" << r.n
        << "  checked=" << r.checked;
    if (!r.passed) out << "  witness: " << r.witness;
    out << '\n';
  }
  return out.str();
}

std::string format_json(std::span<const PropertyReport> reports) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const PropertyReport& r : reports) {
    nlohmann::ordered_json item;
    item["property"] = r.property;
    item["n"] = r.n;
    item["status"] = r.passed ? "pass" : "fail";
    item["witness"] = r.passed ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.witness);
    item["checked"] = r.checked;
    doc.push_back(std::move(item));
  }
  return doc.dump();
}

}  // namespace imbalance::verify
