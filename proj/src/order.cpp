#include "ivif/order.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace ivif {

std::array<rational, 4> key_projection(const stat_vector& sv, order_selector o) {
  if (o == order_selector::hzx) return {sv.s, sv.h, sv.e2, sv.e3};
  return {sv.s, sv.h, sv.t, sv.g};
}

const char* key_name(order_selector o, int index) {
  static constexpr const char* hzx_names[] = {"S", "H", "E2", "E3"};
  static constexpr const char* wlw_names[] = {"S", "H", "T", "G"};
  if (index < 0 || index > 3) throw std::out_of_range("key_name: index");
  return o == order_selector::hzx ? hzx_names[index] : wlw_names[index];
}

const char* order_name(order_selector o) {
  return o == order_selector::hzx ? "hzx" : "wlw";
}

comparison_outcome compare(const ivifn& a, const ivifn& b, order_selector o) {
  static constexpr decision_level levels[] = {
      decision_level::score, decision_level::accuracy, decision_level::key3,
      decision_level::key4};
  auto ka = key_projection(stats(a), o);
  auto kb = key_projection(stats(b), o);
  for (int i = 0; i < 4; ++i) {
    if (ka[i] < kb[i]) return {relation::less, levels[i]};
    if (ka[i] > kb[i]) return {relation::greater, levels[i]};
  }
  assert(a == b);  // equal keys determine the bounds uniquely
  return {relation::equal, decision_level::all_equal};
}

bool lt(const ivifn& a, const ivifn& b, order_selector o) {
  return compare(a, b, o).rel == relation::less;
}

bool leq(const ivifn& a, const ivifn& b, order_selector o) {
  return compare(a, b, o).rel != relation::greater;
}

bool subset_leq(const ivifn& a, const ivifn& b) {
  return a.mu_lo() <= b.mu_lo() && a.mu_hi() <= b.mu_hi() &&
         a.nu_lo() >= b.nu_lo() && a.nu_hi() >= b.nu_hi();
}

std::pair<ivifn, ivifn> extremes() { return {bottom(), top()}; }

std::vector<ranked_alternative> rank(
    std::span<const std::pair<std::string, ivifn>> alternatives, order_selector o) {
  std::set<std::string> seen;
  std::vector<ranked_alternative> out;
  out.reserve(alternatives.size());
  for (const auto& [label, value] : alternatives) {
    if (!seen.insert(label).second)
      throw duplicate_label_error(label, "duplicate label '" + label + "'");
    out.push_back({label, value, stats(value)});
  }
  std::stable_sort(out.begin(), out.end(),
                   [o](const ranked_alternative& x, const ranked_alternative& y) {
                     return lt(y.value, x.value, o);
                   });
  return out;
}

}  // namespace ivif
