/**
 * @file chain.hpp
 * @brief Constructive suprema and infima of described families, plus finite
 *        joins and meets.
 *
 * A family (finite or not) is described by chain_stats: the extreme value of
 * each ranking key over successively filtered level sets, with a flag per
 * level recording whether the extreme is attained. supremum() and infimum()
 * rebuild the bounding element in closed form: keys past the described depth
 * take their minimal (supremum) or maximal (infimum) feasible values, and the
 * four keys determine the element uniquely (the key map is a bijection onto
 * the feasible key region).
 */
#pragma once

#include <span>
#include <vector>

#include "ivif/order.hpp"

namespace ivif {

/// Closed interval of feasible values for one key given the previous keys.
struct key_range {
  rational lo, hi;
  bool contains(const rational& v) const { return lo <= v && v <= hi; }
};

/// Feasible key-3 values (E2 or T) given k1 = S and k2 = H.
/// Requires k1 in [-1,1] and k2 in [|k1|,1]; throws infeasible_error otherwise.
key_range key3_range(order_selector o, const rational& k1, const rational& k2);

/// Feasible key-4 values (E3 or G) given the first three keys.
/// Requires k3 inside key3_range; throws infeasible_error otherwise.
key_range key4_range(order_selector o, const rational& k1, const rational& k2,
                     const rational& k3);

/// Level statistics of a described family. depth() = number of meaningful
/// levels (1..4); only the deepest level may be unattained. Construction
/// validates the levels against the feasible key ranges and throws
/// infeasible_error naming the violated condition.
class chain_stats {
 public:
  chain_stats(order_selector order, std::vector<rational> levels,
              std::vector<bool> attained);

  order_selector order() const noexcept { return order_; }
  int depth() const noexcept { return static_cast<int>(levels_.size()); }
  const std::vector<rational>& levels() const noexcept { return levels_; }
  const std::vector<bool>& attained() const noexcept { return attained_; }
  bool fully_attained() const noexcept;

  friend bool operator==(const chain_stats&, const chain_stats&) = default;

 private:
  order_selector order_;
  std::vector<rational> levels_;
  std::vector<bool> attained_;
};

/// Maxima of the four keys over the successively filtered level sets of a
/// finite nonempty family: level 1 is the max score; level i+1 is the max of
/// key i+1 over the members attaining levels 1..i. All levels attained.
/// Throws empty_family_error on an empty family.
chain_stats level_statistics(std::span<const ivifn> omega, order_selector o);

/// Dual of level_statistics: minima over successively filtered level sets.
chain_stats infimum_statistics(std::span<const ivifn> omega, order_selector o);

/// Inverts the key map: the unique element whose key projection is
/// (k1,k2,k3,k4), or infeasible_error naming the violated bound when no
/// valid element has those keys.
ivifn from_stats(order_selector o, const rational& k1, const rational& k2,
                 const rational& k3, const rational& k4);

/// Least upper bound of the described family: keys below the described depth
/// take minimal feasible values (depth 1: k2 = |k1|; deeper keys: range lo).
ivifn supremum(const chain_stats& cs);

/// Greatest lower bound: keys below the described depth take maximal
/// feasible values (depth 1: k2 = 1, forcing degenerate intervals).
ivifn infimum(const chain_stats& cs);

/// join = least upper bound of a finite family (empty family: bottom);
/// meet = greatest lower bound (empty family: top). Computed through the
/// constructive route, so agreement with the compare-maximum scan is a
/// property the oracle checks, not a definition.
ivifn join(std::span<const ivifn> omega, order_selector o);
ivifn meet(std::span<const ivifn> omega, order_selector o);

}  // namespace ivif
