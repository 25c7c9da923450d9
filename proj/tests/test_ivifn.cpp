#include <doctest.h>

#include "ivif/ivifn.hpp"
#include "ivif/oracle.hpp"

using namespace ivif;

namespace {
rational q(std::int64_t n, std::int64_t d = 1) { return rational(n, d); }
}  // namespace

TEST_SUITE("ivifn") {
  TEST_CASE("construction accepts the extremes and ordinary elements") {
    ivifn b = make_ivifn(q(0), q(0), q(1), q(1));
    CHECK(b == bottom());
    CHECK(make_ivifn(q(1), q(1), q(0), q(0)) == top());
    CHECK_NOTHROW(make_ivifn(q(1, 10), q(3, 10), q(2, 10), q(4, 10)));
    CHECK_NOTHROW(make_ivifn(q(0), q(1, 2), q(0), q(1, 2)));
  }

  TEST_CASE("capacity violations name the offending field") {
    try {
      make_ivifn(q(1, 2), q(1, 2), q(3, 5), q(3, 5));
      FAIL("expected validation_error");
    } catch (const validation_error& e) {
      CHECK(e.kind() == violation::capacity_exceeded);
      CHECK(e.field() == "mu+nu");
    }
  }

  TEST_CASE("out-of-unit bounds are rejected per field") {
    try {
      make_ivifn(q(-1, 10), q(3, 10), q(0), q(0));
      FAIL("expected validation_error");
    } catch (const validation_error& e) {
      CHECK(e.kind() == violation::out_of_unit);
      CHECK(e.field() == "mu_lo");
    }
    try {
      make_ivifn(q(0), q(0), q(0), q(11, 10));
      FAIL("expected validation_error");
    } catch (const validation_error& e) {
      CHECK(e.kind() == violation::out_of_unit);
      CHECK(e.field() == "nu_hi");
    }
  }

  TEST_CASE("inverted intervals are rejected per side") {
    try {
      make_ivifn(q(3, 10), q(1, 10), q(0), q(0));
      FAIL("expected validation_error");
    } catch (const validation_error& e) {
      CHECK(e.kind() == violation::interval_inverted);
      CHECK(e.field() == "mu");
    }
    try {
      make_ivifn(q(0), q(0), q(1, 2), q(1, 4));
      FAIL("expected validation_error");
    } catch (const validation_error& e) {
      CHECK(e.kind() == violation::interval_inverted);
      CHECK(e.field() == "nu");
    }
  }

  TEST_CASE("stats of the bottom element") {
    stat_vector sv = stats(bottom());
    CHECK(sv.s == q(-1));
    CHECK(sv.h == q(1));
    CHECK(sv.e1 == q(0));
    CHECK(sv.e2 == q(0));
    CHECK(sv.e3 == q(0));
    CHECK(sv.t == q(0));
    CHECK(sv.g == q(0));
    CHECK(sv.pi_lo == q(0));
    CHECK(sv.pi_hi == q(0));
  }

  TEST_CASE("stats of a generic element, every component") {
    stat_vector sv = stats(make_ivifn(q(1, 10), q(3, 10), q(2, 10), q(4, 10)));
    CHECK(sv.s == q(-1, 10));
    CHECK(sv.h == q(1, 2));
    CHECK(sv.e1 == q(1, 2));
    CHECK(sv.e2 == q(1, 5));
    CHECK(sv.e3 == q(1, 5));
    CHECK(sv.t == q(0));
    CHECK(sv.g == q(2, 5));
    CHECK(sv.pi_lo == q(3, 10));
    CHECK(sv.pi_hi == q(7, 10));
  }

  TEST_CASE("stats of a degenerate-membership element") {
    stat_vector sv = stats(make_ivifn(q(3, 10), q(3, 10), q(1, 10), q(5, 10)));
    CHECK(sv.s == q(0));
    CHECK(sv.h == q(3, 5));
    CHECK(sv.e2 == q(1, 5));
    CHECK(sv.e3 == q(0));
    CHECK(sv.t == q(-2, 5));
    CHECK(sv.g == q(2, 5));
  }

  TEST_CASE("statistic identities hold on the whole grid and random draws") {
    auto check_identities = [](const ivifn& v) {
      stat_vector sv = stats(v);
      CHECK(sv.h + sv.e1 == q(1));
      CHECK(sv.s <= sv.h);
      CHECK(-sv.s <= sv.h);
      CHECK(sv.h <= q(1));
      CHECK(sv.e2 == sv.g * rational(1, 2));
      CHECK(sv.t == q(2) * sv.e3 - q(2) * sv.e2);
      CHECK(sv.e2 >= q(0));
      CHECK(sv.e3 >= q(0));
      CHECK(sv.g >= q(0));
      CHECK(q(2) * sv.e2 - sv.e3 >= q(0));
      CHECK(sv.pi_lo == q(1) - v.mu_hi() - v.nu_hi());
      CHECK(sv.pi_hi == q(1) - v.mu_lo() - v.nu_lo());
      CHECK(q(0) <= sv.pi_lo);
      CHECK(sv.pi_lo <= sv.pi_hi);
      CHECK(sv.pi_hi <= q(1));
    };
    for (const ivifn& v : enumerate_grid(4).members) check_identities(v);
    sampler rng(101);
    for (int i = 0; i < 500; ++i) check_identities(rng.next_ivifn());
  }

  TEST_CASE("printing") {
    CHECK(bottom().to_string() == "<[0,0],[1,1]>");
    CHECK(make_ivifn(q(1, 10), q(3, 10), q(1, 5), q(2, 5)).to_string() ==
          "<[1/10,3/10],[1/5,2/5]>");
  }
}
