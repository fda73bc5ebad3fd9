#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "nambuflow/bundled.hpp"
#include "nambuflow/orientation.hpp"

using namespace nambu;

namespace {

// Swap the two sinks of every term.
KSum sink_mirror(const KSum& s) {
  KSumBuilder out;
  for (const auto& [g, c] : s) {
    KontsevichGraph h = g;
    for (auto& [l, r] : h.w) {
      if (l < 2) l ^= 1;
      if (r < 2) r ^= 1;
    }
    out.add(h, c);
  }
  return out.take();
}

// Number of orbits under the sink swap and the count of fixed points.
std::pair<int, int> skew_orbits(const KSum& s) {
  std::map<KontsevichGraph, Rat> terms(s.begin(), s.end());
  int orbits = 0, fixed = 0;
  std::set<KontsevichGraph> seen;
  for (const auto& [g, c] : s) {
    if (seen.count(g)) continue;
    KontsevichGraph h = g;
    for (auto& [l, r] : h.w) {
      if (l < 2) l ^= 1;
      if (r < 2) r ^= 1;
    }
    auto cn = kg_canonical(h);
    REQUIRE(cn.sign != 0);
    seen.insert(g);
    if (cn.g == g) {
      ++fixed;
    } else {
      REQUIRE(terms.count(cn.g));
      seen.insert(cn.g);
    }
    ++orbits;
  }
  return {orbits, fixed};
}

}  // namespace

TEST_CASE("the one-vertex graph orients to the single wedge") {
  GraphSumBuilder b;
  b.add(UndirectedGraph{1, {}}, Rat(1));
  auto r = orient(b.take());
  REQUIRE(r.q.size() == 1);
  CHECK(r.raw_terms == 1);
  CHECK(r.q[0].first.m == 2);
  CHECK(r.q[0].first.wedges() == 1);
  CHECK(r.q[0].first.w[0] == std::pair<uint8_t, uint8_t>{0, 1});
  CHECK(r.q[0].second == kOrientNorm);
}

TEST_CASE("orienting off the (n, 2n-2) grading is refused") {
  GraphSumBuilder b;
  b.add(UndirectedGraph{2, {{0, 1}}}, Rat(1));
  CHECK_THROWS_AS((void)orient(b.take()), std::invalid_argument);
}

TEST_CASE("tetrahedron flow: three directed graphs with weight ratio 1:6") {
  auto r = orient(bundled_gamma3());
  REQUIRE(r.q.size() == 3);
  for (const auto& [g, c] : r.q) {
    CHECK(g.m == 2);
    CHECK(g.wedges() == 4);
    CHECK(tadpole_count(g) == 0);
  }
  CHECK(sink_mirror(r.q) == ks_scale(r.q, Rat(-1)));

  auto [orbits, fixed] = skew_orbits(r.q);
  CHECK(orbits == 2);
  CHECK(fixed == 1);

  // weight of the self-skew picture : total weight of the mirror pair = 1 : 6,
  // the unique balance at which the flow preserves the Jacobi identity
  Rat lone(0), pair(0);
  for (const auto& [g, c] : r.q) {
    KSum one = {{g, Rat(1)}};
    if (sink_mirror(one)[0].first == g)
      lone += abs(c);
    else
      pair += abs(c);
  }
  CHECK(pair == 6 * lone);
}

TEST_CASE("pentagon-wheel flow: 167 directed graphs in 91 skew orbits") {
  auto r = orient(bundled_gamma5());
  CHECK(r.q.size() == 167);
  for (const auto& [g, c] : r.q) {
    CHECK(g.m == 2);
    CHECK(g.wedges() == 6);
  }
  CHECK(sink_mirror(r.q) == ks_scale(r.q, Rat(-1)));
  auto [orbits, fixed] = skew_orbits(r.q);
  CHECK(orbits == 91);
  CHECK(fixed == 15);
}

TEST_CASE("marked orientation spreads the tetrahedron over its vertices") {
  KSum v = orient_marked(bundled_gamma3(), kA1);
  REQUIRE(!v.empty());
  for (const auto& [g, c] : v) {
    CHECK(g.m == 0);
    CHECK(g.t() == 1);
    CHECK(g.term[0] == kA1);
    CHECK(g.wedges() == 3);
  }
}
