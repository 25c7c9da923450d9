#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ivif/ivifs.hpp"
#include "ivif/oracle.hpp"

using namespace ivif;

namespace {

rational q(std::int64_t n, std::int64_t d = 1) { return rational(n, d); }

ivifn alpha_x() { return make_ivifn(q(1, 10), q(3, 10), q(2, 10), q(4, 10)); }
ivifn alpha_y() { return make_ivifn(q(2, 10), q(2, 10), q(3, 10), q(3, 10)); }

ivifs sample_set() {
  return ivifs({"x", "y"}, {{"x", alpha_x()}, {"y", alpha_y()}});
}

const std::vector<order_selector> kOrders = {order_selector::hzx,
                                             order_selector::wlw};

}  // namespace

TEST_SUITE("ivifs") {
  TEST_CASE("construction keeps universe order and degree lookup") {
    ivifs a = sample_set();
    CHECK(a.universe() == std::vector<std::string>{"x", "y"});
    CHECK(a.degree("x") == alpha_x());
    CHECK(a.degree("y") == alpha_y());
    CHECK_THROWS_AS(a.degree("z"), error);
  }

  TEST_CASE("universe labels must be distinct") {
    try {
      ivifs({"x", "x"}, {{"x", alpha_x()}});
      FAIL("expected duplicate_label_error");
    } catch (const duplicate_label_error& e) {
      CHECK(e.label() == "x");
    }
  }

  TEST_CASE("degrees must cover the universe exactly") {
    CHECK_THROWS_AS(ivifs({"x", "y"}, {{"x", alpha_x()}}), error);
    CHECK_THROWS_AS(ivifs({"x"}, {{"x", alpha_x()}, {"y", alpha_y()}}), error);
  }

  TEST_CASE("equality is componentwise") {
    CHECK(sample_set() == sample_set());
    ivifs other({"x", "y"}, {{"x", alpha_x()}, {"y", alpha_x()}});
    CHECK_FALSE(sample_set() == other);
  }
}

TEST_SUITE("cut") {
  TEST_CASE("the bottom threshold keeps the whole universe") {
    for (order_selector o : kOrders)
      CHECK(cut(sample_set(), bottom(), o) == std::vector<std::string>{"x", "y"});
  }

  TEST_CASE("the top threshold keeps only maximal degrees") {
    ivifs a({"x", "y"}, {{"x", top()}, {"y", alpha_y()}});
    for (order_selector o : kOrders)
      CHECK(cut(a, top(), o) == std::vector<std::string>{"x"});
  }

  TEST_CASE("a degree value cuts to the labels at or above it") {
    // alpha_y < alpha_x in the value chain, so the cut at alpha_x drops y.
    CHECK(cut(sample_set(), alpha_x(), order_selector::hzx) ==
          std::vector<std::string>{"x"});
    CHECK(cut(sample_set(), alpha_y(), order_selector::hzx) ==
          std::vector<std::string>{"x", "y"});
  }

  TEST_CASE("cuts shrink as the threshold rises") {
    grid g = enumerate_grid(3);
    sampler rng(5);
    std::vector<std::string> labels = {"a", "b", "c", "d", "e"};
    for (int i = 0; i < 200; ++i) {
      std::map<std::string, ivifn> degrees;
      for (const std::string& l : labels)
        degrees.insert({l, g.members[rng.next_index(g.members.size())]});
      ivifs a(labels, degrees);
      const ivifn& lo = g.members[rng.next_index(g.members.size())];
      const ivifn& hi = g.members[rng.next_index(g.members.size())];
      for (order_selector o : kOrders) {
        if (!leq(lo, hi, o)) continue;
        std::vector<std::string> wide = cut(a, lo, o);
        std::vector<std::string> narrow = cut(a, hi, o);
        CHECK(std::includes(wide.begin(), wide.end(), narrow.begin(), narrow.end()));
      }
    }
  }

  TEST_CASE("cut preserves universe order") {
    ivifs a({"q", "p", "r"}, {{"p", alpha_x()}, {"q", alpha_y()}, {"r", alpha_x()}});
    CHECK(cut(a, bottom(), order_selector::hzx) ==
          std::vector<std::string>{"q", "p", "r"});
    CHECK(cut(a, alpha_x(), order_selector::hzx) ==
          std::vector<std::string>{"p", "r"});
  }
}

TEST_SUITE("reconstruct") {
  TEST_CASE("candidates covering the degree values give the identity") {
    ivifs a = sample_set();
    std::vector<ivifn> candidates = {alpha_x(), alpha_y()};
    for (order_selector o : kOrders) CHECK(reconstruct(a, candidates, o) == a);
  }

  TEST_CASE("a lone bottom candidate collapses every degree to bottom") {
    ivifs a = sample_set();
    std::vector<ivifn> candidates = {bottom()};
    ivifs flat({"x", "y"}, {{"x", bottom()}, {"y", bottom()}});
    for (order_selector o : kOrders) CHECK(reconstruct(a, candidates, o) == flat);
  }

  TEST_CASE("no candidates at all also collapse to bottom") {
    ivifs a = sample_set();
    ivifs flat({"x", "y"}, {{"x", bottom()}, {"y", bottom()}});
    for (order_selector o : kOrders) CHECK(reconstruct(a, {}, o) == flat);
  }

  TEST_CASE("a grid of candidates containing the degrees is exact") {
    grid g = enumerate_grid(4);
    sampler rng(13);
    std::vector<std::string> labels = {"a", "b", "c", "d", "e", "f", "g", "h"};
    for (int i = 0; i < 50; ++i) {
      std::map<std::string, ivifn> degrees;
      for (const std::string& l : labels)
        degrees.insert({l, g.members[rng.next_index(g.members.size())]});
      ivifs a(labels, degrees);
      for (order_selector o : kOrders) CHECK(reconstruct(a, g.members, o) == a);
    }
  }
}

TEST_SUITE("zadeh_extend") {
  TEST_CASE("injective maps relabel and pad with bottom") {
    ivifs a = sample_set();
    std::map<std::string, std::string> f = {{"x", "u"}, {"y", "v"}};
    for (order_selector o : kOrders) {
      ivifs b = zadeh_extend(f, a, {"u", "v", "w"}, o);
      CHECK(b.universe() == std::vector<std::string>{"u", "v", "w"});
      CHECK(b.degree("u") == alpha_x());
      CHECK(b.degree("v") == alpha_y());
      CHECK(b.degree("w") == bottom());
    }
  }

  TEST_CASE("collapsing maps join the preimage degrees") {
    ivifs a = sample_set();
    std::map<std::string, std::string> f = {{"x", "u"}, {"y", "u"}};
    ivifs b = zadeh_extend(f, a, {"u"}, order_selector::hzx);
    CHECK(b.degree("u") == alpha_x());  // alpha_y < alpha_x, join is the max
  }

  TEST_CASE("the map must be total and land inside the target universe") {
    ivifs a = sample_set();
    std::map<std::string, std::string> partial = {{"x", "u"}};
    CHECK_THROWS_AS(zadeh_extend(partial, a, {"u"}), error);
    std::map<std::string, std::string> astray = {{"x", "u"}, {"y", "z"}};
    CHECK_THROWS_AS(zadeh_extend(astray, a, {"u"}), error);
  }

  TEST_CASE("the identity map is the identity on sets") {
    ivifs a = sample_set();
    std::map<std::string, std::string> id = {{"x", "x"}, {"y", "y"}};
    for (order_selector o : kOrders) CHECK(zadeh_extend(id, a, {"x", "y"}, o) == a);
  }

  TEST_CASE("extension respects composition, exhaustively on small universes") {
    std::vector<std::string> ux = {"x1", "x2", "x3"};
    std::vector<std::string> uy = {"y1", "y2"};
    std::vector<std::string> uz = {"z1", "z2", "z3"};
    ivifs a(ux, {{"x1", alpha_x()},
                 {"x2", alpha_y()},
                 {"x3", make_ivifn(q(3, 10), q(3, 10), q(1, 10), q(1, 2))}});
    for (order_selector o : kOrders)
      for (int fi = 0; fi < 8; ++fi)
        for (int gi = 0; gi < 9; ++gi) {
          std::map<std::string, std::string> f, g, gf;
          for (int i = 0; i < 3; ++i) f[ux[i]] = uy[(fi >> i) & 1];
          for (int j = 0; j < 2; ++j) g[uy[j]] = uz[(gi / (j == 0 ? 1 : 3)) % 3];
          for (int i = 0; i < 3; ++i) gf[ux[i]] = g[f[ux[i]]];
          CHECK(zadeh_extend(gf, a, uz, o) ==
                zadeh_extend(g, zadeh_extend(f, a, uy, o), uz, o));
        }
  }
}
