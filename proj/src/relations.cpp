#include "nambuflow/relations.hpp"

#include "nambuflow/micro.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace nambu {

namespace {

constexpr uint64_t kFilterSeed = 0x5eedf00d;

// The fingerprint decides "nonzero" soundly; only its zeros need the exact
// evaluation.  Parallel over graphs; evaluate's own parallel region does not
// nest, so the outer loop owns the threads.
std::vector<char> vanishing_flags(const std::vector<MicroGraph>& gs, int d) {
  std::vector<char> flag(gs.size(), 0);
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < (int)gs.size(); ++i) {
    try {
      if (evaluate_mod(MSum{{gs[i], 1}}, d, kFilterSeed).empty())
        flag[i] = evaluate(MSum{{gs[i], 1}}, d).zero();
    } catch (...) {
#pragma omp critical
      err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return flag;
}

// rows keyed by (free index tuple | jet monomial), bytewise; map order makes
// the elimination deterministic
using Matrix = std::map<std::string, std::vector<Rat>>;

void add_column(Matrix& m, size_t ncols, size_t col, const Multivector& v) {
  for (const auto& [tup, poly] : v.c)
    for (const auto& [mono, q] : poly.t) {
      std::string key((const char*)tup.v.data(), tup.v.size());
      key.push_back('|');
      key.append((const char*)mono.f.data(), mono.f.size() * sizeof(Jet));
      auto& row = m[key];
      row.resize(ncols, Rat(0));
      row[col] = q;
    }
}

// reduced row echelon over Q, then one kernel vector per free column
std::vector<std::vector<Rat>> kernel_of(Matrix&& m, size_t ncols) {
  std::vector<std::vector<Rat>> rows;
  rows.reserve(m.size());
  for (auto& [k, row] : m) {
    row.resize(ncols, Rat(0));
    rows.push_back(std::move(row));
  }
  std::vector<int> pivot_row(ncols, -1);
  int rank = 0;
  for (size_t col = 0; col < ncols && rank < (int)rows.size(); ++col) {
    int piv = -1;
    for (int r = rank; r < (int)rows.size(); ++r)
      if (rows[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    const Rat lead = rows[rank][col];
    for (size_t c = col; c < ncols; ++c) rows[rank][c] /= lead;
    for (int r = 0; r < (int)rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rat f = rows[r][col];
      for (size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivot_row[col] = rank++;
  }
  std::vector<std::vector<Rat>> kernel;
  for (size_t col = 0; col < ncols; ++col) {
    if (pivot_row[col] >= 0) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[col] = 1;
    for (size_t c = 0; c < col; ++c)
      if (pivot_row[c] >= 0) v[c] = -rows[pivot_row[c]][col];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::vector<Multivector> evaluate_columns(const std::vector<MicroGraph>& gs, int d) {
  std::vector<Multivector> vals(gs.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < (int)gs.size(); ++i) {
    try {
      vals[i] = evaluate(MSum{{gs[i], 1}}, d);
    } catch (...) {
#pragma omp critical
      err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return vals;
}

}  // namespace

VanishingReport find_vanishing(const std::vector<MicroGraph>& gs, int d) {
  VanishingReport rep;
  std::vector<char> sign0(gs.size(), 0);
  std::vector<MicroGraph> live;
  std::vector<int> live_at;
  for (size_t i = 0; i < gs.size(); ++i) {
    mg_validate(gs[i]);
    sign0[i] = mg_canonical(gs[i]).sign == 0;
    if (!sign0[i]) {
      live.push_back(gs[i]);
      live_at.push_back((int)i);
    }
  }
  auto flag = vanishing_flags(live, d);
  std::vector<char> van(gs.size(), 0);
  for (size_t j = 0; j < live.size(); ++j) van[live_at[j]] = flag[j];
  for (size_t i = 0; i < gs.size(); ++i) {
    if (sign0[i])
      rep.zero_by_sign.push_back(gs[i]);
    else if (van[i])
      rep.vanishing.push_back(gs[i]);
    else
      rep.nonvanishing.push_back(gs[i]);
  }
  return rep;
}

std::vector<SynonymClass> synonym_classes(const std::vector<MicroGraph>& gs, int d) {
  auto vals = evaluate_columns(gs, d);
  for (size_t i = 0; i < gs.size(); ++i)
    if (vals[i].zero())
      throw std::invalid_argument("synonym_classes: vanishing input graph");

  std::vector<int> cls(gs.size(), -1);
  std::vector<SynonymClass> out;
  for (size_t i = 0; i < gs.size(); ++i) {
    if (cls[i] >= 0) continue;
    SynonymClass sc;
    sc.members.push_back((int)i);
    sc.constants.push_back(Rat(1));
    cls[i] = (int)out.size();
    const auto& [t0, p0] = vals[i].c.front();
    const auto& [m0, q0] = p0.t.front();
    for (size_t j = i + 1; j < gs.size(); ++j) {
      if (cls[j] >= 0) continue;
      // candidate constant from the reference component, then exact check
      if (vals[j].c.front().first != t0) continue;
      const auto& pj = vals[j].c.front().second;
      if (pj.t.front().first != m0) continue;
      Rat c = pj.t.front().second / q0;
      if (vals[j] == mv_scale(vals[i], c)) {
        cls[j] = cls[i];
        sc.members.push_back((int)j);
        sc.constants.push_back(c);
      }
    }
    out.push_back(std::move(sc));
  }
  return out;
}

std::vector<std::vector<Rat>> nullspace(const std::vector<MicroGraph>& gs, int d) {
  auto vals = evaluate_columns(gs, d);
  Matrix m;
  for (size_t i = 0; i < gs.size(); ++i) add_column(m, gs.size(), i, vals[i]);
  return kernel_of(std::move(m), gs.size());
}

std::vector<std::vector<Rat>> nullspace(const std::vector<KontsevichGraph>& gs,
                                        int d, Bracket bracket) {
  Matrix m;
  for (size_t i = 0; i < gs.size(); ++i)
    add_column(m, gs.size(), i, evaluate(KSum{{gs[i], 1}}, d, bracket));
  return kernel_of(std::move(m), gs.size());
}

bool check_embedding_preserves(const std::vector<Rat>& coeff,
                               const std::vector<MicroGraph>& gs, int d) {
  if (coeff.size() != gs.size())
    throw std::invalid_argument("check_embedding_preserves: size mismatch");
  MSumBuilder sum;
  for (size_t i = 0; i < gs.size(); ++i)
    if (coeff[i] != 0) sum.add(embed(gs[i]), coeff[i]);
  return evaluate(sum.take(), d + 1).zero();
}

std::vector<KontsevichGraph> onevector_graphs(int wedges) {
  if (wedges < 1 || wedges > 6)
    throw std::invalid_argument("onevector_graphs: need 1 <= wedges <= 6");
  const int V = 1 + wedges;
  std::vector<std::pair<uint8_t, uint8_t>> pairs;
  for (int a = 0; a < V; ++a)
    for (int bb = a + 1; bb < V; ++bb) pairs.push_back({(uint8_t)a, (uint8_t)bb});

  KontsevichGraph g;
  g.m = 1;
  g.w.assign(wedges, {0, 0});

  std::set<KontsevichGraph> shapes;
  std::vector<int> comp(V);
  std::function<int(int)> find = [&](int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  std::vector<int> pick(wedges, 0);
  for (;;) {
    int sink_in = 0;
    for (int k = 0; k < wedges; ++k) {
      g.w[k] = pairs[pick[k]];
      sink_in += (g.w[k].first == 0) + (g.w[k].second == 0);
    }
    if (sink_in == 1) {
      for (int v = 0; v < V; ++v) comp[v] = v;
      for (int k = 0; k < wedges; ++k) {
        comp[find(1 + k)] = find(g.w[k].first);
        comp[find(1 + k)] = find(g.w[k].second);
      }
      bool conn = true;
      for (int v = 1; v < V; ++v)
        if (find(v) != find(0)) conn = false;
      if (conn) shapes.insert(kg_canonical(g).g);
    }
    int k = wedges - 1;
    while (k >= 0 && pick[k] == (int)pairs.size() - 1) pick[k--] = 0;
    if (k < 0) break;
    pick[k]++;
  }
  return {shapes.begin(), shapes.end()};
}

}  // namespace nambu
