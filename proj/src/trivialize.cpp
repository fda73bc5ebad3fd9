#include "nambuflow/trivialize.hpp"

#include "nambuflow/orientation.hpp"

#include <exception>
#include <map>
#include <stdexcept>
#include <utility>

namespace nambu {

KSum ham_vector_field_2d(const KSum& ham) {
  KSumBuilder out;
  for (const auto& [g, c] : ham) {
    if (g.m != 0 || g.t() != 1 || g.term[0] != kRho)
      throw std::invalid_argument(
          "ham_vector_field_2d: need no sinks and one rho terminal");
    const int V = g.vertices();
    for (int r = 0; r < V; ++r) {
      KontsevichGraph x;
      x.m = 1;
      x.w.push_back({0, (uint8_t)(r + 1)});
      for (auto [l, rr] : g.w) x.w.push_back({(uint8_t)(l + 1), (uint8_t)(rr + 1)});
      out.add(x, c);
    }
  }
  return out.take();
}

Multivector nambu_entries(int d, const DiffPoly& density,
                          const std::vector<DiffPoly>& casimirs) {
  if ((int)casimirs.size() != d - 2)
    throw std::invalid_argument("nambu_entries: need d-2 casimir entries");
  Multivector m = nambu_compose(d, density, casimirs);
  // compose eats the odd slots right to left; restoring ascending order
  // costs the triangular sign
  return ((d - 2) * (d - 3) / 2) % 2 ? mv_scale(m, Rat(-1)) : m;
}

namespace {

// rows keyed by serialized (index tuple | jet monomial); the column count
// is fixed up front, column `col` receives the multivector's coefficients
using Matrix = std::map<std::string, std::vector<Rat>>;

void add_column(Matrix& m, size_t width, size_t col, const Multivector& v) {
  for (const auto& [tup, poly] : v.c)
    for (const auto& [mono, q] : poly.t) {
      std::string key((const char*)tup.v.data(), tup.v.size());
      key.push_back('|');
      key.append((const char*)mono.f.data(), mono.f.size() * sizeof(Jet));
      auto& row = m[key];
      row.resize(width, Rat(0));
      row[col] = q;
    }
}

std::vector<Multivector> schouten_columns(const Multivector& p,
                                          std::vector<Multivector>&& phis) {
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < (int)phis.size(); ++i) {
    try {
      phis[i] = schouten(p, phis[i]);
    } catch (...) {
#pragma omp critical
      err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return std::move(phis);
}

// columns[i] = [[P, phi(ansatz_i)]], last column = q; reduced echelon on
// the coefficient block, free coordinates zero, exact residual
Trivialisation solve_columns(const Multivector& q,
                             std::vector<Multivector> cols, int d,
                             std::string cocycle) {
  const size_t n = cols.size();
  Matrix m;
  for (size_t i = 0; i < n; ++i) add_column(m, n + 1, i, cols[i]);
  add_column(m, n + 1, n, q);

  std::vector<std::vector<Rat>> rows;
  rows.reserve(m.size());
  for (auto& [k, row] : m) {
    row.resize(n + 1, Rat(0));
    rows.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  int rank = 0;
  for (size_t col = 0; col < n && rank < (int)rows.size(); ++col) {
    int piv = -1;
    for (int r = rank; r < (int)rows.size(); ++r)
      if (rows[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    const Rat lead = rows[rank][col];
    for (size_t c = col; c <= n; ++c) rows[rank][c] /= lead;
    for (int r = 0; r < (int)rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rat f = rows[r][col];
      for (size_t c = col; c <= n; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivot_col.push_back((int)col);
    rank++;
  }

  Trivialisation out;
  out.cocycle = std::move(cocycle);
  out.d = d;
  out.coeff.assign(n, Rat(0));
  for (int r = 0; r < rank; ++r) out.coeff[pivot_col[r]] = rows[r][n];

  Multivector res = q;
  for (size_t i = 0; i < n; ++i)
    if (out.coeff[i] != 0) res = mv_sub(res, mv_scale(cols[i], out.coeff[i]));
  out.residual = std::move(res);
  out.solved = out.residual.zero();
  return out;
}

}  // namespace

Trivialisation solve_coboundary(const Multivector& q,
                                const std::vector<KSum>& ansatz, int d,
                                std::string cocycle) {
  std::vector<Multivector> phis(ansatz.size());
  for (size_t i = 0; i < ansatz.size(); ++i) phis[i] = evaluate(ansatz[i], d);
  return solve_columns(q, schouten_columns(nambu_bivector(d), std::move(phis)),
                       d, std::move(cocycle));
}

Trivialisation solve_coboundary(const Multivector& q,
                                const std::vector<MSum>& ansatz, int d,
                                std::string cocycle) {
  std::vector<Multivector> phis(ansatz.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < (int)ansatz.size(); ++i) {
    try {
      phis[i] = evaluate(ansatz[i], d);
    } catch (...) {
#pragma omp critical
      err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return solve_columns(q, schouten_columns(nambu_bivector(d), std::move(phis)),
                       d, std::move(cocycle));
}

DiffPoly casimir_velocity(const GraphSum& gamma, int d, int i) {
  if (d < 3 || d > kMaxDim || i < 1 || i > d - 2)
    throw std::invalid_argument("casimir_velocity: need 1 <= i <= d-2, d >= 3");
  Multivector v = mv_scale(evaluate(orient_marked(gamma, casimir(i)), d),
                           kOrientNorm);
  return v.zero() ? dp_zero(d) : v.c.front().second;
}

std::optional<DiffPoly> rho_velocity(const GraphSum& gamma, int d,
                                     Monomial* witness) {
  DiffPoly rho = dp_jet(d, jet(kRho));
  std::vector<DiffPoly> base;
  for (int j = 1; j <= d - 2; ++j) base.push_back(dp_jet(d, jet(casimir(j))));

  Multivector r = evaluate(orient(gamma).q, d);
  for (int i = 1; i <= d - 2; ++i) {
    auto entries = base;
    entries[i - 1] = casimir_velocity(gamma, d, i);
    r = mv_sub(r, nambu_entries(d, rho, entries));
  }
  const Multivector b = nambu_entries(d, dp_const(d, 1), base);
  if (r.zero()) return dp_zero(d);

  std::vector<int> lead(r.c.front().first.v.begin(), r.c.front().first.v.end());
  auto quot = dp_div_exact(r.c.front().second, mv_component(b, lead), witness);
  if (!quot) return std::nullopt;
  Multivector check =
      mv_map(b, [&](const DiffPoly& p) { return dp_mul(p, *quot); });
  if (check == r) return quot;
  Multivector diff = mv_sub(r, check);
  if (witness) *witness = diff.c.front().second.t.front().first;
  return std::nullopt;
}

Multivector leibniz_residual(const Multivector& q, const DiffPoly& rho_dot,
                             const std::vector<DiffPoly>& a_dots, int d) {
  if ((int)a_dots.size() != d - 2)
    throw std::invalid_argument("leibniz_residual: need d-2 casimir velocities");
  DiffPoly rho = dp_jet(d, jet(kRho));
  std::vector<DiffPoly> base;
  for (int j = 1; j <= d - 2; ++j) base.push_back(dp_jet(d, jet(casimir(j))));
  Multivector r = mv_sub(q, nambu_entries(d, rho_dot, base));
  for (int i = 1; i <= d - 2; ++i) {
    auto entries = base;
    entries[i - 1] = a_dots[i - 1];
    r = mv_sub(r, nambu_entries(d, rho, entries));
  }
  return r;
}

bool verify_leibniz_match(const GraphSum& gamma, int d) {
  auto rd = rho_velocity(gamma, d);
  if (!rd) return false;
  std::vector<DiffPoly> a_dots;
  for (int i = 1; i <= d - 2; ++i) a_dots.push_back(casimir_velocity(gamma, d, i));
  return leibniz_residual(evaluate(orient(gamma).q, d), *rd, a_dots, d).zero();
}

bool verify_field_transport(const Multivector& x, const GraphSum& gamma, int d) {
  for (int i = 1; i <= d - 2; ++i) {
    DiffPoly rhs = dp_zero(d);
    for (int j = 1; j <= d; ++j)
      rhs = dp_sub(rhs, dp_mul(mv_component(x, {j}),
                               dp_jet(d, jet_bump(jet(casimir(i)), j - 1))));
    if (!(casimir_velocity(gamma, d, i) == rhs)) return false;
  }
  auto rd = rho_velocity(gamma, d);
  if (!rd) return false;
  IdxTuple top;
  for (int i = 1; i <= d; ++i) top.v.push_back((uint8_t)i);
  return mv_normalize(d, d, {{top, *rd}}) == schouten(nambu_dvector(d), x);
}

bool symmetry_check(const GraphSum& gamma, int d, const CasimirTransform& t) {
  if (d < 3 || t.i < 1 || t.i > d - 2 ||
      (t.kind == CasimirTransform::kSwap &&
       (t.j < 1 || t.j > d - 2 || t.j == t.i)))
    throw std::invalid_argument("symmetry_check: bad casimir indices");
  auto apply = [&](const Multivector& m) {
    return mv_map(m, [&](const DiffPoly& p) {
      return t.kind == CasimirTransform::kFlip
                 ? dp_negate_symbol(p, casimir(t.i))
                 : dp_swap_symbols(p, casimir(t.i), casimir(t.j));
    });
  };
  const Multivector p = nambu_bivector(d);
  if (!(apply(p) == mv_scale(p, Rat(-1)))) return false;
  const Multivector q = evaluate(orient(gamma).q, d);
  return apply(q) == q;
}

}  // namespace nambu
