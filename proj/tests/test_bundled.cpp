#include <doctest.h>

#include <set>

#include "nambuflow/bundled.hpp"
#include "nambuflow/graph_complex.hpp"

using namespace nambu;

TEST_CASE("bundled wheel cocycles are closed") {
  auto g3 = bundled_gamma3();
  REQUIRE(g3.size() == 1);
  CHECK(g3[0].first.n == 4);
  CHECK(g3[0].first.e.size() == 6);
  CHECK(is_cocycle(g3).ok);

  auto g5 = bundled_gamma5();
  REQUIRE(g5.size() == 2);
  for (const auto& [g, c] : g5) {
    CHECK(g.n == 6);
    CHECK(g.e.size() == 10);
  }
  CHECK(is_cocycle(g5).ok);
}

TEST_CASE("the 5-wheel combination is re-derivable from the kernel search") {
  CHECK(derive_wheel5_cocycle() == bundled_gamma5());
}

TEST_CASE("commutator of the two wheel cocycles lands on 68 graphs in (9,16)") {
  auto c = gc_bracket(bundled_gamma3(), bundled_gamma5());
  CHECK(c.size() == 68);
  for (const auto& [g, co] : c) {
    CHECK(g.n == 9);
    CHECK(g.e.size() == 16);
  }
  CHECK(is_cocycle(c).ok);
}

TEST_CASE("bundled 2D trivialisation data") {
  auto x = bundled_sunflower_2d();
  REQUIRE(x.size() == 2);
  std::multiset<int> tp, coeffs;
  for (const auto& [g, c] : x) {
    CHECK(g.m == 1);
    CHECK(g.wedges() == 3);
    tp.insert(tadpole_count(g));
    CHECK(c.get_den() == 1);
    coeffs.insert(abs((int)c.get_num().get_si()));
  }
  CHECK(tp == std::multiset<int>{0, 1});
  CHECK(coeffs == std::multiset<int>{1, 2});

  auto h3 = bundled_ham_gamma3();
  REQUIRE(h3.size() == 1);
  CHECK(h3[0].first.m == 0);
  CHECK(h3[0].first.t() == 1);
  CHECK(h3[0].first.term[0] == kRho);
  CHECK(h3[0].first.wedges() == 2);

  auto h5 = bundled_ham_gamma5();
  REQUIRE(h5.size() == 3);
  for (const auto& [g, c] : h5) {
    CHECK(g.m == 0);
    CHECK(g.t() == 1);
    CHECK(g.wedges() == 4);
  }
}
