#include "ivif/oracle.hpp"

#include <json.hpp>

#include <stdexcept>

namespace ivif {

grid enumerate_grid(int k) {
  if (k < 1) throw std::invalid_argument("grid resolution must be >= 1");
  grid g{k, {}};
  g.members.reserve(grid_count(k));
  for (int i1 = 0; i1 <= k; ++i1)
    for (int i2 = i1; i2 <= k; ++i2)
      for (int j1 = 0; j1 <= k - i2; ++j1)
        for (int j2 = j1; j2 <= k - i2; ++j2)
          g.members.push_back(ivifn(rational(i1, k), rational(i2, k),
                                    rational(j1, k), rational(j2, k)));
  return g;
}

std::size_t grid_count(int k) {
  // For each mu_hi = i2/k there are i2+1 choices of mu_lo and, independently,
  // pairs j1 <= j2 <= k-i2 for nu: sum_{j2} (j2+1).
  std::size_t total = 0;
  for (int i2 = 0; i2 <= k; ++i2) {
    std::size_t nu_pairs = 0;
    for (int j2 = 0; j2 <= k - i2; ++j2) nu_pairs += j2 + 1;
    total += static_cast<std::size_t>(i2 + 1) * nu_pairs;
  }
  return total;
}

namespace {

lub_result brute_extreme(std::span<const ivifn> omega, order_selector o,
                         bool maximize) {
  if (omega.empty()) throw empty_family_error("brute extreme of an empty family");
  ivifn best = omega.front();
  for (const ivifn& a : omega.subspan(1)) {
    relation r = compare(a, best, o).rel;
    if (maximize ? r == relation::greater : r == relation::less) best = a;
  }
  ivifn constructive = maximize ? join(omega, o) : meet(omega, o);
  return {best, constructive == best};
}

}  // namespace

lub_result brute_lub(std::span<const ivifn> omega, order_selector o) {
  return brute_extreme(omega, o, true);
}

lub_result brute_glb(std::span<const ivifn> omega, order_selector o) {
  return brute_extreme(omega, o, false);
}

axiom_report axiom_suite(std::span<const ivifn> sample, order_selector o) {
  return axiom_suite(sample, o, [o](const ivifn& a, const ivifn& b) {
    return compare(a, b, o);
  });
}

axiom_report axiom_suite(std::span<const ivifn> sample, order_selector o,
                         const comparator& cmp) {
  axiom_report report;
  report.suite = "axiom_suite";
  report.order = o;
  report.admissibility_checked = o == order_selector::hzx;

  auto note = [&report](const char* axiom, std::vector<ivifn> witnesses,
                        std::string detail) {
    if (report.violations.size() < 100)  // cap runaway output on broken comparators
      report.violations.push_back({axiom, std::move(witnesses), std::move(detail)});
  };

  const std::size_t n = sample.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ivifn& a = sample[i];
      const ivifn& b = sample[j];
      comparison_outcome ab = cmp(a, b);
      comparison_outcome ba = cmp(b, a);
      ++report.pairs_checked;
      bool mirrored = (ab.rel == relation::less && ba.rel == relation::greater) ||
                      (ab.rel == relation::greater && ba.rel == relation::less) ||
                      (ab.rel == relation::equal && ba.rel == relation::equal);
      if (!mirrored)
        note("totality", {a, b}, "outcomes of (a,b) and (b,a) do not mirror");
      if (ab.rel == relation::equal && !(a == b))
        note("antisymmetry", {a, b}, "compared equal but differ structurally");
      if (report.admissibility_checked && subset_leq(a, b) &&
          ab.rel == relation::greater)
        note("admissibility", {a, b}, "subset_leq holds but compare says greater");
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      relation ij = cmp(sample[i], sample[j]).rel;
      if (ij == relation::greater) {
        report.triples_checked += n;
        continue;  // premise i <= j already false for the whole row
      }
      for (std::size_t k = 0; k < n; ++k) {
        ++report.triples_checked;
        relation jk = cmp(sample[j], sample[k]).rel;
        if (jk == relation::greater) continue;
        if (cmp(sample[i], sample[k]).rel == relation::greater)
          note("transitivity", {sample[i], sample[j], sample[k]},
               "i <= j and j <= k but i > k");
      }
    }
  }
  return report;
}

std::string report_to_json(const axiom_report& report, bool pretty) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["order"] = order_name(report.order);
  j["seed"] = report.seed;
  j["checked"] = {{"pairs", report.pairs_checked},
                  {"triples", report.triples_checked}};
  j["admissibility_checked"] = report.admissibility_checked;
  j["ok"] = report.ok();
  auto& out = j["violations"] = nlohmann::json::array();
  for (const auto& v : report.violations) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& item : v.witnesses) w.push_back(item.to_string());
    out.push_back({{"axiom", v.axiom}, {"witnesses", w}, {"detail", v.detail}});
  }
  return pretty ? j.dump(2) : j.dump();
}

std::int64_t sampler::pick(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

std::uint64_t sampler::next_index(std::uint64_t bound) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng_);
}

ivifn sampler::next_ivifn(int max_den) {
  std::int64_t d = pick(1, max_den);
  std::int64_t mu_hi = pick(0, d);
  std::int64_t nu_hi = pick(0, d - mu_hi);
  std::int64_t mu_lo = pick(0, mu_hi);
  std::int64_t nu_lo = pick(0, nu_hi);
  return ivifn(rational(mu_lo, d), rational(mu_hi, d), rational(nu_lo, d),
               rational(nu_hi, d));
}

std::pair<ivifn, ivifn> sampler::next_subset_pair(int max_den) {
  std::int64_t d = pick(1, max_den);
  std::int64_t b_mu_hi = pick(0, d);
  std::int64_t b_nu_hi = pick(0, d - b_mu_hi);
  std::int64_t b_mu_lo = pick(0, b_mu_hi);
  std::int64_t b_nu_lo = pick(0, b_nu_hi);
  // a shrinks mu and grows nu within its own capacity.
  std::int64_t a_mu_lo = pick(0, b_mu_lo);
  std::int64_t a_mu_hi = pick(a_mu_lo, b_mu_hi);
  std::int64_t a_nu_hi = pick(b_nu_hi, d - a_mu_hi);
  std::int64_t a_nu_lo = pick(b_nu_lo, a_nu_hi);
  ivifn a(rational(a_mu_lo, d), rational(a_mu_hi, d), rational(a_nu_lo, d),
          rational(a_nu_hi, d));
  ivifn b(rational(b_mu_lo, d), rational(b_mu_hi, d), rational(b_nu_lo, d),
          rational(b_nu_hi, d));
  return {a, b};
}

std::vector<ivifn> sampler::next_subset(const grid& g, std::size_t max_size) {
  std::size_t size = 1 + next_index(max_size);
  std::vector<ivifn> out;
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i)
    out.push_back(g.members[next_index(g.members.size())]);
  return out;
}

}  // namespace ivif
