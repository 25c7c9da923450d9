/**
 * @file ivifn.hpp
 * @brief Interval-valued membership/nonmembership pairs and their statistics.
 *
 * An element carries a membership interval [mu_lo, mu_hi] and a
 * nonmembership interval [nu_lo, nu_hi], all bounds in [0,1], with
 * mu_hi + nu_hi <= 1. Construction validates; every instance in the
 * library satisfies the invariant. All arithmetic is exact.
 */
#pragma once

#include "ivif/rational.hpp"

namespace ivif {

class ivifn {
 public:
  /// Validates and constructs; throws validation_error naming the first
  /// violated constraint (bounds in [0,1], intervals ordered, capacity).
  ivifn(rational mu_lo, rational mu_hi, rational nu_lo, rational nu_hi);

  const rational& mu_lo() const noexcept { return mu_lo_; }
  const rational& mu_hi() const noexcept { return mu_hi_; }
  const rational& nu_lo() const noexcept { return nu_lo_; }
  const rational& nu_hi() const noexcept { return nu_hi_; }

  friend bool operator==(const ivifn& a, const ivifn& b) noexcept = default;

  /// "<[mu_lo,mu_hi],[nu_lo,nu_hi]>" with exact fractions.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const ivifn& v);

 private:
  rational mu_lo_, mu_hi_, nu_lo_, nu_hi_;
};

/// Named constructor; identical to the validating constructor.
ivifn make_ivifn(rational mu_lo, rational mu_hi, rational nu_lo, rational nu_hi);

/// The full exact statistic vector of one element.
///   s  = (mu_lo+mu_hi)/2 - (nu_lo+nu_hi)/2     score
///   h  = (mu_lo+mu_hi)/2 + (nu_lo+nu_hi)/2     accuracy
///   e1 = 1 - h
///   e2 = (mu_hi-mu_lo + nu_hi-nu_lo)/2
///   e3 = mu_hi - mu_lo
///   t  = (mu_hi-mu_lo) - (nu_hi-nu_lo)
///   g  = (mu_hi-mu_lo) + (nu_hi-nu_lo)
///   pi = [1-mu_hi-nu_hi, 1-mu_lo-nu_lo]        hesitancy interval
struct stat_vector {
  rational s, h, e1, e2, e3, t, g, pi_lo, pi_hi;
};

stat_vector stats(const ivifn& v);

/// Least element <[0,0],[1,1]> and greatest element <[1,1],[0,0]>.
ivifn bottom();
ivifn top();

}  // namespace ivif
