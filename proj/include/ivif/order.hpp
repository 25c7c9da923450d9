/**
 * @file order.hpp
 * @brief The two total orders and the containment partial order.
 *
 * Both total orders compare a four-key projection lexicographically,
 * ascending at every position:
 *   hzx: (S, H, E2, E3)
 *   wlw: (S, H, T, G)
 * Ties through all four keys force structural equality (the four keys
 * determine the four bounds uniquely), so both relations are total orders,
 * and both refine containment: subset_leq(a, b) implies leq(a, b, o).
 */
#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ivif/ivifn.hpp"

namespace ivif {

enum class order_selector { hzx, wlw };

enum class relation { less, equal, greater };

/// Which key decided a comparison; all_equal accompanies relation::equal.
enum class decision_level { score, accuracy, key3, key4, all_equal };

struct comparison_outcome {
  relation rel;
  decision_level decided_at;
  friend bool operator==(const comparison_outcome&, const comparison_outcome&) = default;
};

/// Key projection in comparison order.
std::array<rational, 4> key_projection(const stat_vector& sv, order_selector o);

/// Display name of key `index` (0..3): "S", "H", then "E2"/"E3" or "T"/"G".
const char* key_name(order_selector o, int index);

/// Printable selector name: "hzx" or "wlw".
const char* order_name(order_selector o);

comparison_outcome compare(const ivifn& a, const ivifn& b, order_selector o);

bool lt(const ivifn& a, const ivifn& b, order_selector o);
bool leq(const ivifn& a, const ivifn& b, order_selector o);

/// Containment order: wider truth, narrower falsity.
/// a <= b iff mu bounds of a are <= those of b and nu bounds are >=.
bool subset_leq(const ivifn& a, const ivifn& b);

/// {bottom, top}: the least and greatest elements under both total orders.
std::pair<ivifn, ivifn> extremes();

struct ranked_alternative {
  std::string label;
  ivifn value;
  stat_vector stat;
};

/// Sorts best first (descending). Structural duplicates keep input order;
/// a repeated label throws duplicate_label_error.
std::vector<ranked_alternative> rank(
    std::span<const std::pair<std::string, ivifn>> alternatives, order_selector o);

}  // namespace ivif
