/**
 * @file oracle.hpp
 * @brief Independent brute-force checks: grid enumeration, scan-based least
 *        upper bounds, order-axiom sweeps, and seeded random sampling.
 *
 * Everything here deliberately avoids the constructive chain machinery so
 * that agreement between the two routes is evidence, not circularity: the
 * brute least upper bound is a compare-maximum scan, checked against join.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ivif/chain.hpp"

namespace ivif {

/// All valid elements whose four coordinates are multiples of 1/k,
/// ordered lexicographically by (mu_lo, mu_hi, nu_lo, nu_hi).
struct grid {
  int resolution;
  std::vector<ivifn> members;
};

grid enumerate_grid(int k);

/// Closed-form member count: sum over the interval endpoints admitted by
/// the capacity constraint. Matches enumerate_grid(k).members.size().
std::size_t grid_count(int k);

struct lub_result {
  ivifn value;
  bool join_agrees;  // constructive join returned the same element
};

/// Compare-maximum of a nonempty family plus the agreement flag; the dual
/// scan for the minimum. Throws empty_family_error on an empty family.
lub_result brute_lub(std::span<const ivifn> omega, order_selector o);
lub_result brute_glb(std::span<const ivifn> omega, order_selector o);

struct axiom_violation {
  std::string axiom;  // "totality", "antisymmetry", "transitivity", "admissibility"
  std::vector<ivifn> witnesses;
  std::string detail;
};

struct axiom_report {
  std::string suite;
  order_selector order;
  std::uint64_t seed = 0;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  bool admissibility_checked = false;
  std::vector<axiom_violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

using comparator = std::function<comparison_outcome(const ivifn&, const ivifn&)>;

/// Sweeps every pair of the sample for mutual consistency, antisymmetry,
/// and (hzx only) admissibility against subset_leq, and every triple for
/// transitivity. The comparator overload exists so tests can prove the
/// suite detects a corrupted comparator.
axiom_report axiom_suite(std::span<const ivifn> sample, order_selector o);
axiom_report axiom_suite(std::span<const ivifn> sample, order_selector o,
                         const comparator& cmp);

/// Machine-readable report: suite, order, seed, counts, violations with
/// witnesses.
std::string report_to_json(const axiom_report& report, bool pretty = true);

/// Seeded generator of valid elements and related structures; denominators
/// stay small so exact arithmetic stays fast.
class sampler {
 public:
  explicit sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniformly denominated random element (common denominator <= max_den).
  ivifn next_ivifn(int max_den = 60);

  /// Pair (a, b) with subset_leq(a, b) true by construction.
  std::pair<ivifn, ivifn> next_subset_pair(int max_den = 60);

  /// Nonempty multiset of grid members, size in [1, max_size].
  std::vector<ivifn> next_subset(const grid& g, std::size_t max_size);

  std::uint64_t next_index(std::uint64_t bound);  // uniform in [0, bound)

 private:
  std::int64_t pick(std::int64_t lo, std::int64_t hi);  // inclusive
  std::mt19937_64 rng_;
};

}  // namespace ivif
