/**
 * @file ivifs.hpp
 * @brief Finite-universe fuzzy sets with interval-valued degrees: cut sets,
 *        decomposition via joins over cuts, and the extension of maps
 *        between universes.
 */
#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ivif/chain.hpp"

namespace ivif {

/// A total assignment of one degree per universe label. The universe is an
/// ordered list of distinct labels; degrees must cover it exactly (no
/// missing, no extraneous keys).
class ivifs {
 public:
  ivifs(std::vector<std::string> universe, std::map<std::string, ivifn> degrees);

  const std::vector<std::string>& universe() const noexcept { return universe_; }
  const std::map<std::string, ivifn>& degrees() const noexcept { return degrees_; }
  const ivifn& degree(const std::string& label) const;

  friend bool operator==(const ivifs&, const ivifs&) = default;

 private:
  std::vector<std::string> universe_;
  std::map<std::string, ivifn> degrees_;
};

/// Labels whose degree compares >= alpha, in universe order.
std::vector<std::string> cut(const ivifs& a_set, const ivifn& alpha,
                             order_selector o);

/// Rebuilds a set from its cuts: per label, the join of every candidate
/// alpha whose cut contains the label (empty: bottom). With candidates
/// covering the degree values this is the identity.
ivifs reconstruct(const ivifs& a_set, std::span<const ivifn> candidates,
                  order_selector o);

/// Lifts f: X -> Y to sets: the image degree at y is the join of the
/// degrees over the preimage of y, bottom when the preimage is empty.
/// f must assign every label of a_set's universe a label in universe_y.
ivifs zadeh_extend(const std::map<std::string, std::string>& f, const ivifs& a_set,
                   std::vector<std::string> universe_y,
                   order_selector o = order_selector::hzx);

}  // namespace ivif
