#include "ivif/ivifs.hpp"

#include <set>
#include <utility>

namespace ivif {

ivifs::ivifs(std::vector<std::string> universe, std::map<std::string, ivifn> degrees)
    : universe_(std::move(universe)), degrees_(std::move(degrees)) {
  std::set<std::string> seen;
  for (const auto& label : universe_) {
    if (!seen.insert(label).second)
      throw duplicate_label_error(label, "duplicate universe label '" + label + "'");
    if (!degrees_.contains(label))
      throw error("no degree for universe label '" + label + "'");
  }
  if (degrees_.size() != universe_.size())
    for (const auto& [label, value] : degrees_)
      if (!seen.contains(label))
        throw error("degree for unknown label '" + label + "'");
}

const ivifn& ivifs::degree(const std::string& label) const {
  auto it = degrees_.find(label);
  if (it == degrees_.end()) throw error("no degree for label '" + label + "'");
  return it->second;
}

std::vector<std::string> cut(const ivifs& a_set, const ivifn& alpha,
                             order_selector o) {
  std::vector<std::string> out;
  for (const auto& label : a_set.universe())
    if (leq(alpha, a_set.degree(label), o)) out.push_back(label);
  return out;
}

ivifs reconstruct(const ivifs& a_set, std::span<const ivifn> candidates,
                  order_selector o) {
  std::map<std::string, ivifn> degrees;
  for (const auto& label : a_set.universe()) {
    const ivifn& bound = a_set.degree(label);
    std::vector<ivifn> below;
    for (const ivifn& alpha : candidates)
      if (leq(alpha, bound, o)) below.push_back(alpha);
    degrees.emplace(label, join(below, o));
  }
  return ivifs(a_set.universe(), std::move(degrees));
}

ivifs zadeh_extend(const std::map<std::string, std::string>& f, const ivifs& a_set,
                   std::vector<std::string> universe_y, order_selector o) {
  std::set<std::string> targets(universe_y.begin(), universe_y.end());
  std::map<std::string, std::vector<ivifn>> preimage_degrees;
  for (const auto& label : a_set.universe()) {
    auto it = f.find(label);
    if (it == f.end()) throw error("map has no image for label '" + label + "'");
    if (!targets.contains(it->second))
      throw error("image '" + it->second + "' of label '" + label +
                  "' is not in the target universe");
    preimage_degrees[it->second].push_back(a_set.degree(label));
  }
  std::map<std::string, ivifn> degrees;
  for (const auto& label : universe_y) {
    auto it = preimage_degrees.find(label);
    if (it == preimage_degrees.end())
      degrees.emplace(label, bottom());
    else
      degrees.emplace(label, join(it->second, o));
  }
  return ivifs(std::move(universe_y), std::move(degrees));
}

}  // namespace ivif
