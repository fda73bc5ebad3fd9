#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "nambuflow/bundled.hpp"
#include "nambuflow/evaluate.hpp"
#include "nambuflow/graphs_io.hpp"
#include "nambuflow/multivector.hpp"
#include "nambuflow/orientation.hpp"

using namespace nambu;

namespace {

KontsevichGraph one_wedge() { return KontsevichGraph{2, {}, {{0, 1}}}; }

// d/dy^i = sum_j B[j][i] d/dx^j on jet polynomials; expands one jet of the
// new chart in the old one.
DiffPoly pullback_jet(Jet v, int d, const std::vector<std::vector<int>>& B) {
  DiffPoly p = dp_jet(d, jet(jet_symbol(v)));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < jet_alpha(v, i); ++k) {
      DiffPoly q = dp_zero(d);
      for (int j = 0; j < d; ++j)
        if (B[j][i]) q = dp_add(q, dp_scale(dp_diff(p, j), B[j][i]));
      p = q;
    }
  return p;
}

std::vector<std::vector<int>> mat_mul(const std::vector<std::vector<int>>& a,
                                      const std::vector<std::vector<int>>& b) {
  int d = (int)a.size();
  std::vector<std::vector<int>> c(d, std::vector<int>(d, 0));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Checks that the evaluation of g transforms tensorially under y = M x with
// det M = 1: expressing the components in x-jets and mixing them with M
// agrees with pulling the jets of the y-chart back through B = M^{-1}.
void check_equivariance(const KSum& g, int d,
                        const std::vector<std::vector<int>>& M,
                        const std::vector<std::vector<int>>& B) {
  Multivector q = evaluate(g, d);
  int k = q.arity;
  std::vector<int> jt(k, 1);
  for (;;) {
    DiffPoly lhs = dp_substitute(
        mv_component(q, jt),
        [&](Jet v) { return pullback_jet(v, d, B); });
    DiffPoly rhs = dp_zero(d);
    std::vector<int> it(k, 1);
    bool more = true;
    while (more) {
      int coef = 1;
      for (int a = 0; a < k; ++a) coef *= M[jt[a] - 1][it[a] - 1];
      if (coef) rhs = dp_add(rhs, dp_scale(mv_component(q, it), coef));
      int a = k - 1;
      while (a >= 0 && it[a] == d) it[a--] = 1;
      if (a < 0)
        more = false;
      else
        it[a]++;
    }
    CHECK(lhs == rhs);
    int a = k - 1;
    while (a >= 0 && jt[a] == d) jt[a--] = 1;
    if (a < 0) break;
    jt[a]++;
  }
}

}  // namespace

TEST_CASE("the one-wedge graph evaluates to the Nambu bi-vector on the nose") {
  for (int d = 2; d <= 4; ++d)
    CHECK(evaluate(KSum{{one_wedge(), 1}}, d) == nambu_bivector(d));
  CHECK(evaluate(KSum{{one_wedge(), 1}}, 2, Bracket::kGeneric2D) ==
        nambu_bivector(2));
  CHECK_THROWS_AS(evaluate(KSum{{one_wedge(), 1}}, 3, Bracket::kGeneric2D),
                  std::invalid_argument);

  // Left/Right swap of the wedge is the sign of the bi-vector.
  KontsevichGraph swapped{2, {}, {{1, 0}}};
  CHECK(evaluate(KSum{{swapped, 1}}, 3) == mv_scale(nambu_bivector(3), -1));

  // One Levi-Civita block is the same bi-vector through the epsilon route.
  for (int d = 2; d <= 5; ++d) {
    MicroGraph blk;
    blk.d = d;
    blk.m = 2;
    blk.b = 1;
    blk.lr = {{0, 1}};
    CHECK(evaluate(MSum{{blk, 1}}, d) == nambu_bivector(d));
    blk.lr = {{1, 0}};
    CHECK(evaluate(MSum{{blk, 1}}, d) == mv_scale(nambu_bivector(d), -1));
    CHECK_THROWS_AS(evaluate(MSum{{blk, 1}}, d == 2 ? 3 : 2),
                    std::invalid_argument);
  }
}

TEST_CASE("evaluation is linear and blind to relabeling") {
  KSum sun = bundled_sunflower_2d();
  Multivector x = evaluate(sun, 2);
  CHECK(x.arity == 1);
  CHECK_FALSE(x.zero());
  CHECK(evaluate(ks_scale(sun, Rat(-7, 3)), 2) == mv_scale(x, Rat(-7, 3)));

  // Splitting the sum term by term and re-adding changes nothing.
  Multivector acc = mv_zero(1, 2);
  for (auto& [g, c] : sun) acc = mv_add(acc, evaluate(KSum{{g, c}}, 2));
  CHECK(acc == x);

  // A hand-relabeled copy of the first sunflower term: wedge order permuted
  // and one wedge L/R-flipped, compensated by the coefficient sign.
  KontsevichGraph a = sun[0].first;
  REQUIRE(a.wedges() == 3);
  KontsevichGraph b = a;
  std::swap(b.w[0], b.w[1]);
  for (auto& [l, r] : b.w) {
    auto fix = [&](uint8_t v) {
      if (v == 1) return uint8_t(2);
      if (v == 2) return uint8_t(1);
      return v;
    };
    l = fix(l);
    r = fix(r);
  }
  std::swap(b.w[2].first, b.w[2].second);
  CHECK(evaluate(KSum{{b, -1}}, 2) == evaluate(KSum{{a, 1}}, 2));
}

TEST_CASE("sinks demand exactly one arrow each") {
  KontsevichGraph g{2, {}, {{0, 0}}};  // both arrows on sink 0
  CHECK_THROWS_AS(evaluate(KSum{{g, 1}}, 2), std::invalid_argument);
  MicroGraph mg;
  mg.d = 3;
  mg.m = 2;
  mg.b = 1;
  mg.lr = {{0, 0}};
  CHECK_THROWS_AS(evaluate(MSum{{mg, 1}}, 3), std::invalid_argument);
}

TEST_CASE("the crossed-ownership two-block Hamiltonian vanishes at d=4") {
  MicroRoles r;
  r.lc = {1, 2};
  r.casimirs = {{3, 1}, {4, 1}, {5, 2}, {6, 2}};
  int sign = 0;
  MicroGraph h = parse_micrograph("[1,2,3,5;3,4,5,6]", 4, r, &sign);
  REQUIRE(mg_canonical(h).sign != 0);
  Multivector v = evaluate(MSum{{h, 1}}, 4);
  CHECK(v.arity == 0);
  CHECK(v.zero());

  // Negative control: its d=3 cousins are honest nonzero Hamiltonians.
  MicroRoles r3;
  r3.lc = {1, 2};
  r3.casimirs = {{3, 1}, {4, 1}};
  MicroGraph g3 = parse_micrograph("[1,2,3;1,2,4]", 3, r3);
  CHECK_FALSE(evaluate(MSum{{g3, 1}}, 3).zero());
}

TEST_CASE("mod-p fingerprints agree with the exact evaluation") {
  // A 3-vector with crossed Casimir ownership: identically zero at d=3.
  MicroRoles r;
  r.sinks = {0, 1, 2};
  r.lc = {3, 4};
  r.casimirs = {{5, 1}, {6, 1}};
  MicroGraph g1 = parse_micrograph("[0,1,5;2,5,6]", 3, r);
  CHECK(evaluate(MSum{{g1, 1}}, 3).zero());

  MicroRoles rh;
  rh.lc = {1, 2};
  rh.casimirs = {{3, 1}, {4, 1}, {5, 2}, {6, 2}};
  MicroGraph h4 = parse_micrograph("[1,2,3,5;3,4,5,6]", 4, rh);

  MicroRoles r3;
  r3.lc = {1, 2};
  r3.casimirs = {{3, 1}, {4, 1}};
  MicroGraph ham = parse_micrograph("[1,2,3;1,2,4]", 3, r3);

  MSum s1{{g1, Rat(3, 7)}};
  MSum s2{{h4, 1}};
  MSum s3{{ham, 1}};
  for (uint64_t seed : {1ull, 2ull, 99ull}) {
    CHECK(evaluate_mod(s1, 3, seed) == mv_fingerprint(evaluate(s1, 3), seed));
    CHECK(evaluate_mod(s2, 4, seed) == mv_fingerprint(evaluate(s2, 4), seed));
    CHECK(evaluate_mod(s2, 4, seed).empty());
    CHECK(evaluate_mod(s3, 3, seed) == mv_fingerprint(evaluate(s3, 3), seed));
    CHECK_FALSE(evaluate_mod(s3, 3, seed).empty());
  }
  // Distinct values almost surely detect distinct multivectors.
  CHECK(evaluate_mod(s3, 3, 5) != evaluate_mod(ms_scale(s3, 2), 3, 5));
}

TEST_CASE("evaluation transforms tensorially under unimodular changes") {
  // Shear compositions with exact integer inverses.
  std::vector<std::vector<int>> s1{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  std::vector<std::vector<int>> s1i{{1, -1, 0}, {0, 1, 0}, {0, 0, 1}};
  std::vector<std::vector<int>> s2{{1, 0, 0}, {0, 1, 0}, {0, -2, 1}};
  std::vector<std::vector<int>> s2i{{1, 0, 0}, {0, 1, 0}, {0, 2, 1}};
  auto M = mat_mul(s1, s2);
  auto B = mat_mul(s2i, s1i);

  KSum pt{{one_wedge(), 1}};
  check_equivariance(pt, 3, M, B);

  KSum tetra = orient(bundled_gamma3()).q;
  check_equivariance(tetra, 3, M, B);

  KSum vel = orient_marked(bundled_gamma3(), kA1);
  check_equivariance(vel, 3, M, B);

  // Tadpole stress: sunflower terms, one at a time, in the plane.
  std::vector<std::vector<int>> m2{{1, 3}, {0, 1}};
  std::vector<std::vector<int>> b2{{1, -3}, {0, 1}};
  for (auto& [g, c] : bundled_sunflower_2d())
    check_equivariance(KSum{{g, c}}, 2, m2, b2);
}

TEST_CASE("the plane sunflower field trivialises the tetrahedron flow") {
  Multivector p = nambu_bivector(2);
  Multivector x = evaluate(bundled_sunflower_2d(), 2);
  Multivector q = evaluate(orient(bundled_gamma3()).q, 2);
  REQUIRE_FALSE(q.zero());
  CHECK(schouten(p, x) == q);
}
