// Command-line front end: ranking, comparison, lattice operations, cuts,
// extension, and the verification suites. All file I/O lives here.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ivif/oracle.hpp"
#include "ivif/serde.hpp"

namespace {

using nlohmann::json;
using namespace ivif;

constexpr std::uint64_t kDefaultSeed = 20240817;

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  return in;
}

json load_json(const std::string& path) {
  std::ifstream in = open_file(path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
}

bool is_json_path(const std::string& path) {
  return path.size() >= 5 && path.substr(path.size() - 5) == ".json";
}

labeled_ivifns load_alternatives(const std::string& path) {
  if (is_json_path(path)) return alternatives_from_json(load_json(path));
  std::ifstream in = open_file(path);
  return read_alternatives_csv(in);
}

order_selector to_order(const std::string& name) {
  if (name == "hzx") return order_selector::hzx;
  if (name == "wlw") return order_selector::wlw;
  throw error("unknown order '" + name + "' (expected hzx or wlw)");
}

std::string approx_quadruple(const ivifn& v) {
  return "<[" + decimal_approx(v.mu_lo()) + "," + decimal_approx(v.mu_hi()) +
         "],[" + decimal_approx(v.nu_lo()) + "," + decimal_approx(v.nu_hi()) + "]>";
}

json approx_json(const ivifn& v) {
  return {{"mu_lo", v.mu_lo().to_double()},
          {"mu_hi", v.mu_hi().to_double()},
          {"nu_lo", v.nu_lo().to_double()},
          {"nu_hi", v.nu_hi().to_double()}};
}

std::string relation_name(relation r) {
  switch (r) {
    case relation::less: return "Less";
    case relation::equal: return "Equal";
    case relation::greater: return "Greater";
  }
  return "?";
}

std::string decided_name(order_selector o, decision_level d) {
  switch (d) {
    case decision_level::score: return key_name(o, 0);
    case decision_level::accuracy: return key_name(o, 1);
    case decision_level::key3: return key_name(o, 2);
    case decision_level::key4: return key_name(o, 3);
    case decision_level::all_equal: return "all keys equal";
  }
  return "?";
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    std::cout << line << "\n";
  }
}

// One value plus its exact key row under the chosen order.
void print_value(const std::string& title, const ivifn& v, order_selector o,
                 bool as_json, json extra = json::object()) {
  auto keys = key_projection(stats(v), o);
  if (as_json) {
    json out = extra;
    out["order"] = order_name(o);
    out["value"] = ivifn_to_json(v);
    out["approx"] = approx_json(v);
    json key_obj = json::object(), key_approx = json::object();
    for (int i = 0; i < 4; ++i) {
      key_obj[key_name(o, i)] = keys[i].to_string();
      key_approx[key_name(o, i)] = keys[i].to_double();
    }
    out["keys"] = key_obj;
    out["keys_approx"] = key_approx;
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << title << ": " << v << "\n";
  std::cout << "approx: " << approx_quadruple(v) << "\n";
  std::cout << "keys (" << order_name(o) << "):";
  for (int i = 0; i < 4; ++i)
    std::cout << " " << key_name(o, i) << "=" << keys[i] << " (" +
                     decimal_approx(keys[i]) + ")";
  std::cout << "\n";
}

int run_rank(const std::string& path, order_selector o, bool as_json) {
  labeled_ivifns alternatives = load_alternatives(path);
  std::vector<ranked_alternative> ranked = rank(alternatives, o);
  // Tie-break column: the key separating each row from the next one.
  std::vector<std::string> tiebreak(ranked.size(), "");
  for (std::size_t i = 0; i + 1 < ranked.size(); ++i) {
    comparison_outcome out = compare(ranked[i].value, ranked[i + 1].value, o);
    tiebreak[i] = decided_name(o, out.decided_at);
  }
  if (as_json) {
    json rows = json::array();
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      const auto& r = ranked[i];
      auto keys = key_projection(r.stat, o);
      json key_obj = json::object(), key_approx = json::object();
      for (int k = 0; k < 4; ++k) {
        key_obj[key_name(o, k)] = keys[k].to_string();
        key_approx[key_name(o, k)] = keys[k].to_double();
      }
      rows.push_back({{"rank", i + 1},
                      {"label", r.label},
                      {"value", ivifn_to_json(r.value)},
                      {"approx", approx_json(r.value)},
                      {"keys", key_obj},
                      {"keys_approx", key_approx},
                      {"tiebreak", tiebreak[i]}});
    }
    std::cout << json{{"order", order_name(o)}, {"ranking", rows}}.dump(2) << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header = {"rank", "label", "value"};
  for (int k = 0; k < 4; ++k) {
    header.push_back(key_name(o, k));
    header.push_back("~" + std::string(key_name(o, k)));
  }
  header.push_back("tiebreak");
  table.push_back(header);
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const auto& r = ranked[i];
    auto keys = key_projection(r.stat, o);
    std::vector<std::string> row = {std::to_string(i + 1), r.label,
                                    r.value.to_string()};
    for (int k = 0; k < 4; ++k) {
      row.push_back(keys[k].to_string());
      row.push_back(decimal_approx(keys[k]));
    }
    row.push_back(tiebreak[i]);
    table.push_back(row);
  }
  print_table(table);
  return 0;
}

int run_compare(const std::string& path_a, const std::string& path_b,
                order_selector o, bool as_json) {
  ivifn a = ivifn_from_json(load_json(path_a));
  ivifn b = ivifn_from_json(load_json(path_b));
  comparison_outcome out = compare(a, b, o);
  if (as_json) {
    std::cout << json{{"order", order_name(o)},
                      {"a", ivifn_to_json(a)},
                      {"b", ivifn_to_json(b)},
                      {"relation", relation_name(out.rel)},
                      {"decided_at", decided_name(o, out.decided_at)}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "a: " << a << "  approx " << approx_quadruple(a) << "\n";
  std::cout << "b: " << b << "  approx " << approx_quadruple(b) << "\n";
  if (out.rel == relation::equal)
    std::cout << "result: Equal (all keys equal)\n";
  else
    std::cout << "result: " << relation_name(out.rel) << " (decided at "
              << decided_name(o, out.decided_at) << ")\n";
  return 0;
}

int run_join_meet(const std::string& path, order_selector o, bool as_json,
                  bool is_join) {
  labeled_ivifns alternatives = load_alternatives(path);
  std::vector<ivifn> family;
  family.reserve(alternatives.size());
  for (const auto& [label, value] : alternatives) family.push_back(value);
  ivifn result = is_join ? join(family, o) : meet(family, o);
  print_value(is_join ? "join" : "meet", result, o, as_json,
              json{{"operation", is_join ? "join" : "meet"},
                   {"count", family.size()}});
  return 0;
}

int run_sup_stats(const std::string& path, bool dual, bool as_json) {
  chain_stats cs = chain_stats_from_json(load_json(path));
  ivifn result = dual ? infimum(cs) : supremum(cs);
  print_value(dual ? "infimum" : "supremum", result, cs.order(), as_json,
              json{{"operation", dual ? "infimum" : "supremum"},
                   {"stats", chain_stats_to_json(cs)}});
  return 0;
}

int run_cut(const std::string& set_path, const std::string& alpha_path,
            order_selector o, bool as_json) {
  ivifs a_set = ivifs_from_json(load_json(set_path));
  ivifn alpha = ivifn_from_json(load_json(alpha_path));
  std::vector<std::string> labels = cut(a_set, alpha, o);
  if (as_json) {
    std::cout << json{{"order", order_name(o)},
                      {"alpha", ivifn_to_json(alpha)},
                      {"labels", labels}}
                     .dump(2)
              << "\n";
    return 0;
  }
  for (const auto& label : labels) std::cout << label << "\n";
  return 0;
}

int run_extend(const std::string& set_path, const std::string& map_path,
               order_selector o, bool as_json) {
  ivifs a_set = ivifs_from_json(load_json(set_path));
  json mapping = load_json(map_path);
  if (!mapping.contains("map") || !mapping["map"].is_object())
    throw parse_error(map_path + ": expected an object field 'map'");
  if (!mapping.contains("universe_y") || !mapping["universe_y"].is_array())
    throw parse_error(map_path + ": expected an array field 'universe_y'");
  std::map<std::string, std::string> f;
  for (const auto& [from, to] : mapping["map"].items())
    f.emplace(from, to.get<std::string>());
  std::vector<std::string> universe_y;
  for (const auto& label : mapping["universe_y"])
    universe_y.push_back(label.get<std::string>());
  ivifs image = zadeh_extend(f, a_set, std::move(universe_y), o);
  if (as_json) {
    json out = ivifs_to_json(image);
    out["order"] = order_name(o);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  for (const auto& label : image.universe()) {
    const ivifn& v = image.degree(label);
    std::cout << label << ": " << v << "  approx " << approx_quadruple(v) << "\n";
  }
  return 0;
}

struct verify_check {
  std::string suite;
  std::size_t checked = 0;
  std::vector<std::string> failures{};
};

json check_to_json(const verify_check& c) {
  return {{"suite", c.suite},
          {"checked", c.checked},
          {"violations", c.failures},
          {"ok", c.failures.empty()}};
}

int run_verify(int grid_k, std::optional<std::string> order_text,
               std::uint64_t seed, bool as_json) {
  grid g = enumerate_grid(grid_k);
  std::vector<order_selector> orders;
  if (order_text)
    orders.push_back(to_order(*order_text));
  else
    orders = {order_selector::hzx, order_selector::wlw};

  json order_reports = json::array();
  std::size_t total_violations = 0;
  std::ostringstream text;
  text << "verify: grid k=" << grid_k << " (" << g.members.size()
       << " elements), seed " << seed << "\n";

  for (order_selector o : orders) {
    sampler rng(seed);
    json reports = json::array();

    axiom_report axioms = axiom_suite(g.members, o);
    axioms.seed = seed;
    total_violations += axioms.violations.size();
    reports.push_back(json::parse(report_to_json(axioms, false)));
    text << "[" << order_name(o) << "] axioms: pairs=" << axioms.pairs_checked
         << ", triples=" << axioms.triples_checked
         << ", violations=" << axioms.violations.size() << "\n";

    verify_check lattice{.suite = "lattice_agreement"};
    for (int trial = 0; trial < 250; ++trial) {
      std::vector<ivifn> family = rng.next_subset(g, 12);
      lattice.checked += 2;
      if (!brute_lub(family, o).join_agrees)
        lattice.failures.push_back("join disagrees on trial " + std::to_string(trial));
      if (!brute_glb(family, o).join_agrees)
        lattice.failures.push_back("meet disagrees on trial " + std::to_string(trial));
    }

    verify_check roundtrip{.suite = "key_roundtrip"};
    auto check_roundtrip = [&](const ivifn& v) {
      ++roundtrip.checked;
      auto keys = key_projection(stats(v), o);
      if (!(from_stats(o, keys[0], keys[1], keys[2], keys[3]) == v))
        roundtrip.failures.push_back("roundtrip differs at " + v.to_string());
    };
    for (const ivifn& v : g.members) check_roundtrip(v);
    for (int i = 0; i < 1000; ++i) check_roundtrip(rng.next_ivifn());

    verify_check admissibility{.suite = "admissibility_random"};
    if (o == order_selector::hzx) {
      for (int i = 0; i < 2000; ++i) {
        auto [a, b] = rng.next_subset_pair();
        ++admissibility.checked;
        if (compare(a, b, o).rel == relation::greater)
          admissibility.failures.push_back("containment pair compares greater: " +
                                           a.to_string() + " vs " + b.to_string());
      }
    }

    for (const verify_check* c : {&lattice, &roundtrip, &admissibility}) {
      total_violations += c->failures.size();
      reports.push_back(check_to_json(*c));
      text << "[" << order_name(o) << "] " << c->suite << ": checked=" << c->checked
           << ", violations=" << c->failures.size() << "\n";
    }
    order_reports.push_back({{"order", order_name(o)}, {"reports", reports}});
  }

  if (as_json) {
    std::cout << json{{"grid", grid_k},
                      {"seed", seed},
                      {"orders", order_reports},
                      {"violations_total", total_violations},
                      {"ok", total_violations == 0}}
                     .dump(2)
              << "\n";
  } else {
    text << (total_violations == 0
                 ? "result: OK (0 violations)"
                 : "result: VIOLATIONS (" + std::to_string(total_violations) + ")")
         << "\n";
    std::cout << text.str();
  }
  return total_violations == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval-valued membership structures: total orders, lattice "
               "operations, cuts, extension, verification"};
  app.require_subcommand(1);

  std::string order_text = "hzx";
  bool as_json = false;
  int exit_code = 0;

  auto add_common = [&](CLI::App* sub, bool with_order = true) {
    if (with_order)
      sub->add_option("--order", order_text, "total order: hzx or wlw")
          ->check(CLI::IsMember({"hzx", "wlw"}))
          ->capture_default_str();
    sub->add_flag("--json", as_json, "machine-readable output");
  };

  std::string rank_file;
  CLI::App* rank_cmd = app.add_subcommand("rank", "rank an alternatives file (CSV or JSON)");
  rank_cmd->add_option("file", rank_file, "alternatives file")->required();
  add_common(rank_cmd);
  rank_cmd->callback([&] { exit_code = run_rank(rank_file, to_order(order_text), as_json); });

  std::string cmp_a, cmp_b;
  CLI::App* compare_cmd = app.add_subcommand("compare", "compare two elements (JSON files)");
  compare_cmd->add_option("a", cmp_a, "first element JSON")->required();
  compare_cmd->add_option("b", cmp_b, "second element JSON")->required();
  add_common(compare_cmd);
  compare_cmd->callback(
      [&] { exit_code = run_compare(cmp_a, cmp_b, to_order(order_text), as_json); });

  std::string join_file;
  CLI::App* join_cmd = app.add_subcommand("join", "least upper bound of an alternatives file");
  join_cmd->add_option("file", join_file, "alternatives file")->required();
  add_common(join_cmd);
  join_cmd->callback(
      [&] { exit_code = run_join_meet(join_file, to_order(order_text), as_json, true); });

  std::string meet_file;
  CLI::App* meet_cmd = app.add_subcommand("meet", "greatest lower bound of an alternatives file");
  meet_cmd->add_option("file", meet_file, "alternatives file")->required();
  add_common(meet_cmd);
  meet_cmd->callback(
      [&] { exit_code = run_join_meet(meet_file, to_order(order_text), as_json, false); });

  std::string stats_file;
  bool dual = false;
  CLI::App* sup_cmd = app.add_subcommand(
      "sup-stats", "supremum of a described family (level-statistics JSON)");
  sup_cmd->add_option("file", stats_file, "level-statistics JSON")->required();
  sup_cmd->add_flag("--infimum", dual, "compute the infimum instead");
  add_common(sup_cmd, false);
  sup_cmd->callback([&] { exit_code = run_sup_stats(stats_file, dual, as_json); });

  std::string cut_set, cut_alpha;
  CLI::App* cut_cmd = app.add_subcommand("cut", "labels whose degree is >= alpha");
  cut_cmd->add_option("set", cut_set, "set JSON")->required();
  cut_cmd->add_option("alpha", cut_alpha, "threshold element JSON")->required();
  add_common(cut_cmd);
  cut_cmd->callback(
      [&] { exit_code = run_cut(cut_set, cut_alpha, to_order(order_text), as_json); });

  std::string extend_set, extend_map;
  CLI::App* extend_cmd =
      app.add_subcommand("extend", "extend a label map to sets (join over preimages)");
  extend_cmd->add_option("set", extend_set, "set JSON")->required();
  extend_cmd->add_option("mapping", extend_map, "mapping JSON {map, universe_y}")->required();
  add_common(extend_cmd);
  extend_cmd->callback(
      [&] { exit_code = run_extend(extend_set, extend_map, to_order(order_text), as_json); });

  int grid_k = 3;
  std::uint64_t seed = kDefaultSeed;
  std::string verify_order;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the brute-force verification suites");
  verify_cmd->add_option("--grid", grid_k, "grid resolution")
      ->check(CLI::Range(1, 6))
      ->capture_default_str();
  verify_cmd->add_option("--seed", seed, "random seed (recorded in the report)")
      ->capture_default_str();
  verify_cmd->add_option("--order", verify_order, "restrict to one order")
      ->check(CLI::IsMember({"hzx", "wlw"}));
  verify_cmd->add_flag("--json", as_json, "machine-readable output");
  verify_cmd->callback([&] {
    std::optional<std::string> restrict_order;
    if (!verify_order.empty()) restrict_order = verify_order;
    exit_code = run_verify(grid_k, restrict_order, seed, as_json);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ivif::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
