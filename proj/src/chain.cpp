#include "ivif/chain.hpp"

#include <algorithm>
#include <utility>

namespace ivif {

namespace {

const rational kZero(0);
const rational kOne(1);
const rational kTwo(2);
const rational kHalf(1, 2);

rational abs(const rational& v) { return v < kZero ? -v : v; }

rational min(const rational& a, const rational& b) { return a < b ? a : b; }

// Width box given centers: a = mu width, b = nu width must satisfy
//   0 <= a <= 2*zeta1, 0 <= b <= 2*zeta2, a + b <= 2*(1 - k2)
// (lower bounds from mu_lo, nu_lo >= 0; the sum bound from capacity).
// Upper-bound constraints from mu_hi, nu_hi <= 1 are implied by these.
struct centers {
  rational zeta1, zeta2;
};

centers centers_of(const rational& k1, const rational& k2) {
  return {(k1 + k2) * kHalf, (k2 - k1) * kHalf};
}

void check_prefix2(const rational& k1, const rational& k2) {
  if (k1 < rational(-1) || k1 > kOne)
    throw infeasible_error("k1 in [-1,1]",
                           "level 1 = " + k1.to_string() + " is outside [-1,1]");
  if (k2 < abs(k1) || k2 > kOne)
    throw infeasible_error("k2 in [|k1|,1]",
                           "level 2 = " + k2.to_string() + " is outside [|" +
                               k1.to_string() + "|,1]");
}

const char* condition_of(const validation_error& e) {
  switch (e.kind()) {
    case violation::out_of_unit:
      return "bound in [0,1]";
    case violation::interval_inverted:
      return "interval ordered";
    case violation::capacity_exceeded:
      return "mu_hi + nu_hi <= 1";
  }
  return "ivifn invariant";
}

}  // namespace

key_range key3_range(order_selector o, const rational& k1, const rational& k2) {
  check_prefix2(k1, k2);
  auto [zeta1, zeta2] = centers_of(k1, k2);
  rational slack = kTwo * (kOne - k2);
  if (o == order_selector::hzx) {
    // E2 = (a+b)/2: max at a,b maximal under the box and sum bounds.
    return {kZero, min(k2, kOne - k2)};
  }
  // T = a-b: extremes at (a_max, 0) and (0, b_max).
  rational a_max = min(kTwo * zeta1, slack);
  rational b_max = min(kTwo * zeta2, slack);
  return {-b_max, a_max};
}

key_range key4_range(order_selector o, const rational& k1, const rational& k2,
                     const rational& k3) {
  key_range r3 = key3_range(o, k1, k2);
  if (!r3.contains(k3))
    throw infeasible_error("k3 within feasible range",
                           "level 3 = " + k3.to_string() + " is outside [" +
                               r3.lo.to_string() + "," + r3.hi.to_string() + "]");
  auto [zeta1, zeta2] = centers_of(k1, k2);
  rational slack = kTwo * (kOne - k2);
  if (o == order_selector::hzx) {
    // a = E3, b = 2*E2 - E3; both widths within the box.
    rational b_max = min(kTwo * zeta2, slack);
    rational lo = kTwo * k3 - b_max;
    if (lo < kZero) lo = kZero;
    return {lo, min(kTwo * k3, kTwo * zeta1)};
  }
  // G = a+b with a-b = T fixed: G >= |T|; a <= 2*zeta1 and b <= 2*zeta2
  // translate to G <= 4*zeta1 - T and G <= 4*zeta2 + T.
  rational hi = min(rational(4) * zeta1 - k3, rational(4) * zeta2 + k3);
  hi = min(hi, slack);
  return {abs(k3), hi};
}

chain_stats::chain_stats(order_selector order, std::vector<rational> levels,
                         std::vector<bool> attained)
    : order_(order), levels_(std::move(levels)), attained_(std::move(attained)) {
  if (levels_.empty() || levels_.size() > 4)
    throw infeasible_error("depth in 1..4", "chain_stats needs 1 to 4 levels, got " +
                                                std::to_string(levels_.size()));
  if (attained_.size() != levels_.size())
    throw infeasible_error("one attainment flag per level",
                           "got " + std::to_string(attained_.size()) + " flags for " +
                               std::to_string(levels_.size()) + " levels");
  for (std::size_t i = 0; i + 1 < attained_.size(); ++i)
    if (!attained_[i])
      throw infeasible_error(
          "only the deepest level may be unattained",
          "level " + std::to_string(i + 1) + " is unattained but level " +
              std::to_string(levels_.size()) + " is present");
  int d = depth();
  if (d >= 2) {
    check_prefix2(levels_[0], levels_[1]);
  } else {
    check_prefix2(levels_[0], abs(levels_[0]));  // k1 range only
  }
  if (d >= 3) {
    key_range r3 = key3_range(order_, levels_[0], levels_[1]);
    if (!r3.contains(levels_[2]))
      throw infeasible_error("k3 within feasible range",
                             "level 3 = " + levels_[2].to_string() + " is outside [" +
                                 r3.lo.to_string() + "," + r3.hi.to_string() + "]");
  }
  if (d == 4) {
    key_range r4 = key4_range(order_, levels_[0], levels_[1], levels_[2]);
    if (!r4.contains(levels_[3]))
      throw infeasible_error("k4 within feasible range",
                             "level 4 = " + levels_[3].to_string() + " is outside [" +
                                 r4.lo.to_string() + "," + r4.hi.to_string() + "]");
  }
}

bool chain_stats::fully_attained() const noexcept {
  return std::all_of(attained_.begin(), attained_.end(), [](bool b) { return b; });
}

namespace {

chain_stats filtered_levels(std::span<const ivifn> omega, order_selector o,
                            bool maximize) {
  if (omega.empty())
    throw empty_family_error("level statistics of an empty family");
  std::vector<std::array<rational, 4>> keys;
  keys.reserve(omega.size());
  for (const ivifn& a : omega) keys.push_back(key_projection(stats(a), o));

  std::vector<const std::array<rational, 4>*> live;
  live.reserve(keys.size());
  for (const auto& k : keys) live.push_back(&k);

  std::vector<rational> levels;
  for (int i = 0; i < 4; ++i) {
    rational best = (*live.front())[i];
    for (const auto* k : live) {
      if (maximize ? (*k)[i] > best : (*k)[i] < best) best = (*k)[i];
    }
    levels.push_back(best);
    std::erase_if(live, [&](const auto* k) { return (*k)[i] != best; });
  }
  return chain_stats(o, std::move(levels), {true, true, true, true});
}

}  // namespace

chain_stats level_statistics(std::span<const ivifn> omega, order_selector o) {
  return filtered_levels(omega, o, true);
}

chain_stats infimum_statistics(std::span<const ivifn> omega, order_selector o) {
  return filtered_levels(omega, o, false);
}

ivifn from_stats(order_selector o, const rational& k1, const rational& k2,
                 const rational& k3, const rational& k4) {
  auto [zeta1, zeta2] = centers_of(k1, k2);
  rational a, b;  // mu and nu interval widths
  if (o == order_selector::hzx) {
    a = k4;
    b = kTwo * k3 - k4;
  } else {
    a = (k3 + k4) * kHalf;
    b = (k4 - k3) * kHalf;
  }
  try {
    return ivifn(zeta1 - a * kHalf, zeta1 + a * kHalf, zeta2 - b * kHalf,
                 zeta2 + b * kHalf);
  } catch (const validation_error& e) {
    throw infeasible_error(condition_of(e),
                           "no element has keys (" + k1.to_string() + ", " +
                               k2.to_string() + ", " + k3.to_string() + ", " +
                               k4.to_string() + "): " + e.what());
  }
}

namespace {

// Shared recipe: keep the described levels, fill the remaining keys with an
// endpoint of their feasible range. lo endpoints give the minimum of the
// level set, hence the least upper bound; hi endpoints give the maximum,
// hence the greatest lower bound.
ivifn fill_extremal(const chain_stats& cs, bool take_lo) {
  const auto& lv = cs.levels();
  order_selector o = cs.order();
  rational k1 = lv[0];
  rational k2 = cs.depth() >= 2 ? lv[1] : (take_lo ? abs(k1) : kOne);
  key_range r3 = key3_range(o, k1, k2);
  rational k3 = cs.depth() >= 3 ? lv[2] : (take_lo ? r3.lo : r3.hi);
  key_range r4 = key4_range(o, k1, k2, k3);
  rational k4 = cs.depth() == 4 ? lv[3] : (take_lo ? r4.lo : r4.hi);
  return from_stats(o, k1, k2, k3, k4);
}

}  // namespace

ivifn supremum(const chain_stats& cs) { return fill_extremal(cs, true); }

ivifn infimum(const chain_stats& cs) { return fill_extremal(cs, false); }

ivifn join(std::span<const ivifn> omega, order_selector o) {
  if (omega.empty()) return bottom();
  return supremum(level_statistics(omega, o));
}

ivifn meet(std::span<const ivifn> omega, order_selector o) {
  if (omega.empty()) return top();
  return infimum(infimum_statistics(omega, o));
}

}  // namespace ivif
