#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "nambuflow/bundled.hpp"
#include "nambuflow/evaluate.hpp"
#include "nambuflow/graphs_io.hpp"
#include "nambuflow/micro.hpp"

using namespace nambu;

namespace {

KontsevichGraph one_wedge() { return KontsevichGraph{2, {}, {{0, 1}}}; }

// Raw Leibniz choices of one Kontsevich graph as explicit encodings, the
// double-edge ones dropped; mirrors the expansion loop so tests can inspect
// the instances a class is made of.
std::vector<MicroGraph> raw_instances(const KontsevichGraph& g, int d) {
  const int m = g.m, t = g.t(), w = g.wedges(), base = m + t;
  std::vector<std::pair<int, int>> slots;
  for (int vi = 0; vi < w; ++vi) {
    if (g.w[vi].first >= base) slots.push_back({vi, 0});
    if (g.w[vi].second >= base) slots.push_back({vi, 1});
  }
  std::vector<MicroGraph> out;
  std::vector<int> choice(slots.size(), 0);
  for (;;) {
    MicroGraph mg;
    mg.d = d;
    mg.m = m;
    mg.term = g.term;
    mg.b = w;
    mg.lr.resize(w);
    for (int vi = 0; vi < w; ++vi) mg.lr[vi] = {g.w[vi].first, g.w[vi].second};
    for (size_t a = 0; a < slots.size(); ++a) {
      auto [wi, side] = slots[a];
      int u = (side ? g.w[wi].second : g.w[wi].first) - base;
      uint8_t nv = choice[a] == 0 ? (uint8_t)mg.head(u) : (uint8_t)mg.cas(u, choice[a]);
      (side ? mg.lr[wi].second : mg.lr[wi].first) = nv;
    }
    if (!mg_double_edge(mg)) out.push_back(mg);
    size_t a = slots.size();
    while (a > 0 && choice[a - 1] == d - 2) choice[--a] = 0;
    if (a == 0) break;
    choice[a - 1]++;
  }
  return out;
}

struct Census {
  int zero = 0;       // canonical sign 0
  int vanishing = 0;  // zero or phi == 0
  long long vanishing_instances = 0;
};

Census census(const ExpandReport& rep, int d) {
  Census c;
  for (size_t i = 0; i < rep.classes.size(); ++i) {
    bool z = mg_canonical(rep.classes[i]).sign == 0;
    bool v = z || evaluate(MSum{{rep.classes[i], 1}}, d).zero();
    c.zero += z;
    if (v) {
      c.vanishing++;
      c.vanishing_instances += rep.mult[i];
    }
  }
  return c;
}

}  // namespace

TEST_CASE("expanding the bare wedge is the bracket itself") {
  for (int d = 2; d <= 4; ++d) {
    auto rep = leibniz_expand(KSum{{one_wedge(), 1}}, d);
    CHECK(rep.raw_terms == 1);
    CHECK(rep.live_terms == 1);
    CHECK(rep.classes.size() == 1);
    CHECK(rep.dead_classes == 0);
    CHECK(evaluate(rep.sum, d) == nambu_bivector(d));
  }
}

TEST_CASE("one free arrow plus a 1-loop: distribution over head and copy") {
  // two sinks; wedge 1 (vertex 3) sends one arrow to wedge 0 (vertex 2) and
  // one to itself.  Over d=3 each of the two choices on the w0-arrow pairs
  // with head/copy on the loop; the copy choice on the loop repeats the
  // casimir arrow, so half the choices die.
  KontsevichGraph g{2, {}, {{0, 1}, {2, 3}}};
  auto rep = leibniz_expand(KSum{{g, 1}}, 3);
  CHECK(rep.raw_terms == 4);
  CHECK(rep.live_terms == 2);
  CHECK(rep.classes.size() == 2);
  CHECK(rep.dead_classes == 2);
  MSumBuilder want;
  want.add(MicroGraph{3, 2, {}, 2, {{0, 1}, {2, 3}}}, 1);  // head choice
  want.add(MicroGraph{3, 2, {}, 2, {{0, 1}, {4, 3}}}, 1);  // copy choice
  CHECK(rep.sum == want.take());
}

TEST_CASE("micro species sanity: loops allowed, copies owned structurally") {
  MicroGraph g1{3, 3, {}, 2, {{0, 1}, {2, 5}}};  // arrow onto another block's copy
  CHECK_NOTHROW(mg_validate(g1));
  CHECK(tadpole_count(g1) == 0);
  CHECK_FALSE(mg_double_edge(g1));

  MicroGraph g2{3, 2, {}, 2, {{0, 1}, {3, 4}}};  // 1-loop on the second head
  CHECK_NOTHROW(mg_validate(g2));
  CHECK(tadpole_count(g2) == 1);
  CHECK(mg_canonical(g2).sign != 0);

  MicroGraph g3{3, 2, {}, 2, {{0, 1}, {2, 5}}};  // arrow onto its own copy
  CHECK(mg_double_edge(g3));
  CHECK(mg_canonical(g3).sign == 0);
}

TEST_CASE("expansion commutes with evaluation") {
  KSum x = bundled_sunflower_2d();
  for (int d = 3; d <= 4; ++d) {
    auto rep = leibniz_expand(x, d);
    if (d == 3) {
      CHECK(evaluate(rep.sum, d) == evaluate(x, d));
    } else {
      // exact equality at d=4 is covered by the acceptance run; compare the
      // Z/p fingerprints here to keep the suite quick
      auto a = evaluate_mod(rep.sum, d, 7);
      auto b = mv_fingerprint(evaluate(x, d), 7);
      CHECK(a == b);
    }
  }
}

TEST_CASE("sunflower descendant census over d=3") {
  auto rep = leibniz_expand(bundled_sunflower_2d(), 3);
  CHECK(rep.raw_terms == 64);
  CHECK(rep.live_terms == 48);
  CHECK(rep.classes.size() == 41);
  CHECK(rep.dead_classes == 10);
  CHECK(rep.sum.size() == 39);
  auto c = census(rep, 3);
  CHECK(c.zero == 2);
  CHECK(c.vanishing == 12);
  CHECK(c.vanishing_instances == 13);
}

TEST_CASE("sunflower descendant census over d=4") {
  // the class census and the instance census disagree here: several classes
  // collect two Leibniz choices each, so both readings stay reportable
  auto rep = leibniz_expand(bundled_sunflower_2d(), 4);
  CHECK(rep.raw_terms == 486);
  CHECK(rep.live_terms == 324);
  CHECK(rep.classes.size() == 282);
  CHECK(rep.dead_classes == 90);
  CHECK(rep.sum.size() == 276);
  auto c = census(rep, 4);
  CHECK(c.zero == 6);
  CHECK(c.vanishing == 52);
  CHECK(c.vanishing_instances == 54);
}

TEST_CASE("instances of one class evaluate consistently with their signs") {
  // classes that collect two distinct encodings are exactly where the copy
  // re-matching in mg_canonical earns its keep: phi of each encoding must be
  // the canonical sign times phi of the representative
  KSum x = bundled_sunflower_2d();
  std::map<MicroGraph, std::vector<MicroGraph>> by_class;
  for (auto& [g, c] : x)
    for (auto& enc : raw_instances(g, 3)) by_class[mg_canonical(enc).g].push_back(enc);
  int merged = 0, checked = 0;
  for (auto& [rep, encs] : by_class) {
    std::set<MicroGraph> distinct(encs.begin(), encs.end());
    if (distinct.size() < 2) continue;
    merged++;
    auto base = evaluate(MSum{{rep, 1}}, 3);
    if (base.zero()) continue;
    for (auto& enc : distinct) {
      auto c = mg_canonical(enc);
      REQUIRE(c.sign != 0);
      CHECK(evaluate(MSum{{enc, Rat(c.sign)}}, 3) == base);
      checked++;
    }
  }
  CHECK(merged >= 6);
  CHECK(checked >= 12);
}

TEST_CASE("embed grows one fresh copy per block and nothing else") {
  MicroGraph g{3, 1, {}, 3, {{0, 1}, {1, 6}, {4, 5}}};
  auto h = embed(g);
  CHECK(h.d == 4);
  CHECK(h.b == 3);
  CHECK(h.m == 1);
  // copies restride: 4 -> 4, 5 -> 6, 6 -> 8; heads and sinks stay put
  CHECK(h.lr == std::vector<std::pair<uint8_t, uint8_t>>{{0, 1}, {1, 8}, {4, 6}});
  CHECK(tadpole_count(h) == tadpole_count(g));
  CHECK(mg_double_edge(h) == mg_double_edge(g));

  // the fresh copies have in-degree one (their own casimir arrow only)
  std::vector<int> indeg(h.vertices(), 0);
  for (int l = 0; l < h.b; ++l) {
    indeg[h.lr[l].first]++;
    indeg[h.lr[l].second]++;
    for (int i = 1; i <= h.d - 2; ++i) indeg[h.cas(l, i)]++;
  }
  for (int l = 0; l < h.b; ++l) CHECK(indeg[h.cas(l, h.d - 2)] == 1);
}

TEST_CASE("embed respects isomorphism and the canonical sign") {
  // same drawing written with the blocks in another order: embeds of the two
  // encodings are the same class with consistent signs
  MicroGraph a{3, 1, {}, 3, {{0, 1}, {1, 6}, {4, 5}}};
  MicroGraph b{3, 1, {}, 3, {{0, 1}, {4, 6}, {1, 5}}};  // blocks 1 and 2 swapped
  auto ca = mg_canonical(a), cb = mg_canonical(b);
  REQUIRE(ca.g == cb.g);
  auto ea = mg_canonical(embed(a)), eb = mg_canonical(embed(b));
  CHECK(ea.g == eb.g);
  CHECK(ea.sign * ca.sign == eb.sign * cb.sign);
}

TEST_CASE("a vanishing descendant still vanishes after embedding") {
  MicroGraph v{3, 1, {}, 3, {{0, 1}, {1, 6}, {4, 5}}};
  REQUIRE(mg_canonical(v).sign != 0);
  REQUIRE(evaluate(MSum{{v, 1}}, 3).zero());
  CHECK(evaluate(MSum{{embed(v), 1}}, 4).zero());
}

TEST_CASE("two-block hamiltonian families") {
  // head-to-head counts: enumerate returns every shape, the census keeps the
  // ones that survive the double-edge rule
  struct Row {
    int d, live, vanishing;
  };
  for (auto [d, live, vanishing] : {Row{2, 1, 0}, Row{3, 6, 0}, Row{4, 21, 1}}) {
    auto all = enumerate_micrographs(0, 2, d);
    int nlive = 0, nvan = 0, nmixed = 0;
    for (auto& g : all) {
      if (mg_double_edge(g)) continue;
      if (mg_canonical(g).sign == 0) {
        nmixed++;
        continue;
      }
      nlive++;
      nvan += evaluate(MSum{{g, 1}}, d).zero();
    }
    CHECK(nlive == live);
    CHECK(nmixed == 0);
    CHECK(nvan == vanishing);
  }
}

TEST_CASE("the unique vanishing two-block hamiltonian over d=4") {
  MicroRoles roles;
  roles.lc = {1, 2};
  roles.casimirs = {{3, 1}, {4, 1}, {5, 2}, {6, 2}};
  auto h = parse_micrograph("[1,2,3,5;3,4,5,6]", 4, roles);
  REQUIRE(mg_canonical(h).sign != 0);
  CHECK(evaluate(MSum{{h, 1}}, 4).zero());
  auto all = enumerate_micrographs(0, 2, 4);
  MicroGraph found;
  int hits = 0;
  for (auto& g : all) {
    if (mg_double_edge(g) || mg_canonical(g).sign == 0) continue;
    if (evaluate(MSum{{g, 1}}, 4).zero()) {
      found = g;
      hits++;
    }
  }
  REQUIRE(hits == 1);
  CHECK(found == mg_canonical(h).g);
}

TEST_CASE("one-block enumeration catches the degenerate corners") {
  // single block over one sink at d=3: the free pair draws from the sink,
  // the head itself and the own copy; own-copy choices are double edges
  auto all = enumerate_micrographs(1, 1, 3);
  int live = 0;
  for (auto& g : all) live += !mg_double_edge(g) && mg_canonical(g).sign != 0;
  CHECK(live == 1);  // sink + 1-loop is the only surviving shape
  CHECK(all.size() == 2);
}
