#include <doctest.h>

#include <vector>

#include "ivif/oracle.hpp"
#include "ivif/order.hpp"

using namespace ivif;

namespace {

rational q(std::int64_t n, std::int64_t d = 1) { return rational(n, d); }

const ivifn kA = make_ivifn(q(2, 10), q(2, 10), q(3, 10), q(3, 10));
const ivifn kB = make_ivifn(q(1, 10), q(3, 10), q(2, 10), q(4, 10));

// The definitional if-else chains, written branch by branch, to pin the
// tuple comparison against an independent transcription.
relation branchy(const ivifn& x, const ivifn& y, order_selector o) {
  stat_vector a = stats(x), b = stats(y);
  if (a.s < b.s) return relation::less;
  if (a.s > b.s) return relation::greater;
  if (a.h < b.h) return relation::less;
  if (a.h > b.h) return relation::greater;
  if (o == order_selector::hzx) {
    if (a.e2 < b.e2) return relation::less;
    if (a.e2 > b.e2) return relation::greater;
    if (a.e3 < b.e3) return relation::less;
    if (a.e3 > b.e3) return relation::greater;
  } else {
    if (a.t < b.t) return relation::less;
    if (a.t > b.t) return relation::greater;
    if (a.g < b.g) return relation::less;
    if (a.g > b.g) return relation::greater;
  }
  return relation::equal;
}

}  // namespace

TEST_SUITE("order") {
  TEST_CASE("third-key decision under the entropy chain") {
    comparison_outcome out = compare(kA, kB, order_selector::hzx);
    CHECK(out.rel == relation::less);
    CHECK(out.decided_at == decision_level::key3);
  }

  TEST_CASE("fourth-key decision under the uncertainty chain") {
    comparison_outcome out = compare(kA, kB, order_selector::wlw);
    CHECK(out.rel == relation::less);
    CHECK(out.decided_at == decision_level::key4);
  }

  TEST_CASE("the two orders genuinely disagree on a score/accuracy tie") {
    ivifn x = make_ivifn(q(3, 10), q(3, 10), q(1, 10), q(5, 10));
    ivifn y = make_ivifn(q(3, 20), q(9, 20), q(3, 10), q(3, 10));
    CHECK(stats(x).s == stats(y).s);
    CHECK(stats(x).h == stats(y).h);
    comparison_outcome hzx = compare(x, y, order_selector::hzx);
    CHECK(hzx.rel == relation::greater);
    CHECK(hzx.decided_at == decision_level::key3);
    comparison_outcome wlw = compare(x, y, order_selector::wlw);
    CHECK(wlw.rel == relation::less);
    CHECK(wlw.decided_at == decision_level::key3);
  }

  TEST_CASE("reflexivity reports full equality") {
    for (order_selector o : {order_selector::hzx, order_selector::wlw}) {
      comparison_outcome out = compare(kA, kA, o);
      CHECK(out.rel == relation::equal);
      CHECK(out.decided_at == decision_level::all_equal);
    }
  }

  TEST_CASE("equal outcome appears if and only if decided_at is all_equal") {
    grid g = enumerate_grid(3);
    for (order_selector o : {order_selector::hzx, order_selector::wlw})
      for (const ivifn& a : g.members)
        for (const ivifn& b : g.members) {
          comparison_outcome out = compare(a, b, o);
          CHECK((out.rel == relation::equal) ==
                (out.decided_at == decision_level::all_equal));
          if (out.rel == relation::equal) CHECK(a == b);
        }
  }

  TEST_CASE("containment order") {
    CHECK(subset_leq(make_ivifn(q(1, 10), q(2, 10), q(3, 10), q(4, 10)),
                     make_ivifn(q(2, 10), q(3, 10), q(2, 10), q(3, 10))));
    CHECK(subset_leq(kA, kA));
    CHECK_FALSE(subset_leq(make_ivifn(q(2, 10), q(3, 10), q(2, 10), q(3, 10)),
                           make_ivifn(q(1, 10), q(2, 10), q(3, 10), q(4, 10))));
  }

  TEST_CASE("extremes bound the whole grid under both orders") {
    auto [lo, hi] = extremes();
    CHECK(lo == bottom());
    CHECK(hi == top());
    comparison_outcome out = compare(lo, hi, order_selector::hzx);
    CHECK(out.rel == relation::less);
    CHECK(out.decided_at == decision_level::score);
    for (const ivifn& v : enumerate_grid(4).members) {
      CHECK(leq(lo, v, order_selector::hzx));
      CHECK(leq(v, hi, order_selector::wlw));
    }
  }

  TEST_CASE("rank puts the top first and bottom last") {
    std::vector<std::pair<std::string, ivifn>> items = {{"worst", bottom()},
                                                        {"best", top()}};
    for (order_selector o : {order_selector::hzx, order_selector::wlw}) {
      auto ranked = rank(items, o);
      REQUIRE(ranked.size() == 2);
      CHECK(ranked[0].label == "best");
      CHECK(ranked[1].label == "worst");
    }
  }

  TEST_CASE("rank order of a tied-score pair differs between the two chains") {
    std::vector<std::pair<std::string, ivifn>> items = {
        {"x", make_ivifn(q(3, 10), q(3, 10), q(1, 10), q(5, 10))},
        {"y", make_ivifn(q(3, 20), q(9, 20), q(3, 10), q(3, 10))},
        {"top", top()}};
    auto hzx = rank(items, order_selector::hzx);
    CHECK(hzx[0].label == "top");
    CHECK(hzx[1].label == "x");
    CHECK(hzx[2].label == "y");
    auto wlw = rank(items, order_selector::wlw);
    CHECK(wlw[0].label == "top");
    CHECK(wlw[1].label == "y");
    CHECK(wlw[2].label == "x");
  }

  TEST_CASE("rank of a singleton is itself, with stats attached") {
    std::vector<std::pair<std::string, ivifn>> items = {{"only", kB}};
    auto ranked = rank(items, order_selector::hzx);
    REQUIRE(ranked.size() == 1);
    CHECK(ranked[0].label == "only");
    CHECK(ranked[0].value == kB);
    CHECK(ranked[0].stat.s == q(-1, 10));
  }

  TEST_CASE("rank keeps input order for structurally equal values") {
    std::vector<std::pair<std::string, ivifn>> items = {
        {"first", kA}, {"second", kA}, {"third", kA}};
    auto ranked = rank(items, order_selector::wlw);
    CHECK(ranked[0].label == "first");
    CHECK(ranked[1].label == "second");
    CHECK(ranked[2].label == "third");
  }

  TEST_CASE("duplicate labels are rejected") {
    std::vector<std::pair<std::string, ivifn>> items = {{"a", kA}, {"a", kB}};
    CHECK_THROWS_AS(rank(items, order_selector::hzx), duplicate_label_error);
    try {
      rank(items, order_selector::hzx);
    } catch (const duplicate_label_error& e) {
      CHECK(e.label() == "a");
    }
  }

  TEST_CASE("tuple comparison agrees with the definitional branch chain") {
    grid g = enumerate_grid(3);
    for (order_selector o : {order_selector::hzx, order_selector::wlw})
      for (const ivifn& a : g.members)
        for (const ivifn& b : g.members)
          CHECK(compare(a, b, o).rel == branchy(a, b, o));
    sampler rng(2024);
    for (order_selector o : {order_selector::hzx, order_selector::wlw})
      for (int i = 0; i < 2000; ++i) {
        ivifn a = rng.next_ivifn();
        ivifn b = rng.next_ivifn();
        CHECK(compare(a, b, o).rel == branchy(a, b, o));
      }
  }

  TEST_CASE("both chains extend the two-key score/accuracy ranking") {
    grid g = enumerate_grid(4);
    sampler rng(55);
    for (int i = 0; i < 4000; ++i) {
      const ivifn& a = g.members[rng.next_index(g.members.size())];
      const ivifn& b = g.members[rng.next_index(g.members.size())];
      stat_vector sa = stats(a), sb = stats(b);
      if (sa.s == sb.s && sa.h == sb.h) continue;  // two keys cannot decide
      bool xu_less = sa.s < sb.s || (sa.s == sb.s && sa.h < sb.h);
      for (order_selector o : {order_selector::hzx, order_selector::wlw})
        CHECK(lt(a, b, o) == xu_less);
    }
  }

  TEST_CASE("key names follow the order") {
    CHECK(std::string(key_name(order_selector::hzx, 0)) == "S");
    CHECK(std::string(key_name(order_selector::hzx, 2)) == "E2");
    CHECK(std::string(key_name(order_selector::hzx, 3)) == "E3");
    CHECK(std::string(key_name(order_selector::wlw, 2)) == "T");
    CHECK(std::string(key_name(order_selector::wlw, 3)) == "G");
    CHECK(std::string(order_name(order_selector::wlw)) == "wlw");
  }
}
