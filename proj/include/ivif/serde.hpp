/**
 * @file serde.hpp
 * @brief File formats used by the CLI: alternatives CSV/JSON, element JSON,
 *        set JSON, and level-statistics JSON.
 *
 * Numeric cells and JSON values are exact: fraction strings ("3/10"),
 * decimal strings ("0.3", expanded over a power of ten), or JSON integers.
 * Non-integer JSON numbers are rejected because they pass through binary
 * floating point; quote them instead.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ivif/chain.hpp"
#include "ivif/ivifs.hpp"

namespace ivif {

using labeled_ivifns = std::vector<std::pair<std::string, ivifn>>;

/// CSV with required header "label,mu_lo,mu_hi,nu_lo,nu_hi"; blank lines
/// are skipped; labels must be unique and comma-free.
labeled_ivifns read_alternatives_csv(std::istream& in);

rational rational_from_json(const nlohmann::json& j);

/// {"mu_lo": "1/10", "mu_hi": "3/10", "nu_lo": "1/5", "nu_hi": "2/5"}
ivifn ivifn_from_json(const nlohmann::json& j);
nlohmann::json ivifn_to_json(const ivifn& v);

/// [{"label": "a", "mu_lo": ..., ...}, ...]
labeled_ivifns alternatives_from_json(const nlohmann::json& j);

/// {"universe": ["x", ...], "degrees": {"x": {ivifn}, ...}}
ivifs ivifs_from_json(const nlohmann::json& j);
nlohmann::json ivifs_to_json(const ivifs& a_set);

/// Mirrors the chain_stats fields: {"order": "hzx"|"wlw", "depth": 1..4,
/// "level1": ..., "attained1": ..., up to the depth}.
chain_stats chain_stats_from_json(const nlohmann::json& j);
nlohmann::json chain_stats_to_json(const chain_stats& cs);

/// Shortest decimal approximation at the given precision; display only.
std::string decimal_approx(const rational& r, int significant_digits = 6);

}  // namespace ivif
