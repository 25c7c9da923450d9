#include "ivif/serde.hpp"

#include <istream>
#include <set>
#include <sstream>

namespace ivif {

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(trim(cell));
  if (!line.empty() && line.back() == sep) out.push_back("");
  return out;
}

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw parse_error(std::string("missing field '") + name + "'");
  return j.at(name);
}

ivifn ivifn_from_fields(const nlohmann::json& j) {
  return ivifn(rational_from_json(field(j, "mu_lo")),
               rational_from_json(field(j, "mu_hi")),
               rational_from_json(field(j, "nu_lo")),
               rational_from_json(field(j, "nu_hi")));
}

}  // namespace

labeled_ivifns read_alternatives_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error("empty CSV: header required");
  std::vector<std::string> header = split(line, ',');
  const std::vector<std::string> expected = {"label", "mu_lo", "mu_hi", "nu_lo",
                                             "nu_hi"};
  if (header != expected)
    throw parse_error("CSV header must be 'label,mu_lo,mu_hi,nu_lo,nu_hi'");

  labeled_ivifns rows;
  std::set<std::string> seen;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split(line, ',');
    if (cells.size() != 5)
      throw parse_error("line " + std::to_string(line_no) + ": expected 5 cells, got " +
                        std::to_string(cells.size()));
    if (cells[0].empty())
      throw parse_error("line " + std::to_string(line_no) + ": empty label");
    if (!seen.insert(cells[0]).second)
      throw duplicate_label_error(cells[0], "line " + std::to_string(line_no) +
                                                ": duplicate label '" + cells[0] + "'");
    rows.emplace_back(cells[0],
                      ivifn(parse_rational(cells[1]), parse_rational(cells[2]),
                            parse_rational(cells[3]), parse_rational(cells[4])));
  }
  return rows;
}

rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return rational(j.get<std::int64_t>());
  if (j.is_number())
    throw parse_error("non-integer JSON number " + j.dump() +
                      ": quote it as a string to keep the value exact");
  throw parse_error("expected a rational (string or integer), got " + j.dump());
}

ivifn ivifn_from_json(const nlohmann::json& j) { return ivifn_from_fields(j); }

nlohmann::json ivifn_to_json(const ivifn& v) {
  return {{"mu_lo", v.mu_lo().to_string()},
          {"mu_hi", v.mu_hi().to_string()},
          {"nu_lo", v.nu_lo().to_string()},
          {"nu_hi", v.nu_hi().to_string()}};
}

labeled_ivifns alternatives_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw parse_error("alternatives JSON must be an array");
  labeled_ivifns rows;
  std::set<std::string> seen;
  for (const auto& row : j) {
    std::string label = field(row, "label").get<std::string>();
    if (!seen.insert(label).second)
      throw duplicate_label_error(label, "duplicate label '" + label + "'");
    rows.emplace_back(std::move(label), ivifn_from_fields(row));
  }
  return rows;
}

ivifs ivifs_from_json(const nlohmann::json& j) {
  const auto& universe_json = field(j, "universe");
  if (!universe_json.is_array()) throw parse_error("'universe' must be an array");
  std::vector<std::string> universe;
  for (const auto& label : universe_json) universe.push_back(label.get<std::string>());
  const auto& degrees_json = field(j, "degrees");
  if (!degrees_json.is_object()) throw parse_error("'degrees' must be an object");
  std::map<std::string, ivifn> degrees;
  for (const auto& [label, value] : degrees_json.items())
    degrees.emplace(label, ivifn_from_fields(value));
  return ivifs(std::move(universe), std::move(degrees));
}

nlohmann::json ivifs_to_json(const ivifs& a_set) {
  nlohmann::json degrees = nlohmann::json::object();
  for (const auto& label : a_set.universe())
    degrees[label] = ivifn_to_json(a_set.degree(label));
  return {{"universe", a_set.universe()}, {"degrees", degrees}};
}

chain_stats chain_stats_from_json(const nlohmann::json& j) {
  std::string order_text = field(j, "order").get<std::string>();
  order_selector o;
  if (order_text == "hzx")
    o = order_selector::hzx;
  else if (order_text == "wlw")
    o = order_selector::wlw;
  else
    throw parse_error("order must be 'hzx' or 'wlw', got '" + order_text + "'");
  int depth = field(j, "depth").get<int>();
  if (depth < 1 || depth > 4) throw parse_error("depth must be in 1..4");
  std::vector<rational> levels;
  std::vector<bool> attained;
  for (int i = 1; i <= depth; ++i) {
    std::string level_key = "level" + std::to_string(i);
    std::string attained_key = "attained" + std::to_string(i);
    levels.push_back(rational_from_json(field(j, level_key.c_str())));
    const auto& flag = field(j, attained_key.c_str());
    if (!flag.is_boolean()) throw parse_error("'" + attained_key + "' must be a boolean");
    attained.push_back(flag.get<bool>());
  }
  return chain_stats(o, std::move(levels), std::move(attained));
}

nlohmann::json chain_stats_to_json(const chain_stats& cs) {
  nlohmann::json j;
  j["order"] = order_name(cs.order());
  j["depth"] = cs.depth();
  for (int i = 0; i < cs.depth(); ++i) {
    j["level" + std::to_string(i + 1)] = cs.levels()[i].to_string();
    j["attained" + std::to_string(i + 1)] = static_cast<bool>(cs.attained()[i]);
  }
  return j;
}

std::string decimal_approx(const rational& r, int significant_digits) {
  std::ostringstream os;
  os.precision(significant_digits);
  os << r.to_double();
  return os.str();
}

}  // namespace ivif
