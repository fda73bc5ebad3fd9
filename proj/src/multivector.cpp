#include "nambuflow/multivector.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nambu {

Multivector mv_zero(int arity, int dim) { return Multivector{arity, dim, {}}; }

Multivector mv_normalize(int arity, int dim,
                         std::vector<std::pair<IdxTuple, DiffPoly>> comps) {
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<IdxTuple, DiffPoly>> out;
  for (size_t i = 0; i < comps.size();) {
    size_t j = i + 1;
    DiffPoly p = comps[i].second;
    while (j < comps.size() && comps[j].first == comps[i].first)
      p = dp_add(p, comps[j++].second);
    if (!p.zero()) out.emplace_back(comps[i].first, std::move(p));
    i = j;
  }
  return Multivector{arity, dim, std::move(out)};
}

static void check_compat(const Multivector& a, const Multivector& b) {
  if (a.arity != b.arity || a.dim != b.dim)
    throw std::invalid_argument("multivector arity/dim mismatch");
}

Multivector mv_add(const Multivector& a, const Multivector& b) {
  check_compat(a, b);
  auto comps = a.c;
  comps.insert(comps.end(), b.c.begin(), b.c.end());
  return mv_normalize(a.arity, a.dim, std::move(comps));
}

Multivector mv_sub(const Multivector& a, const Multivector& b) {
  return mv_add(a, mv_scale(b, -1));
}

Multivector mv_scale(const Multivector& a, const Rat& s) {
  if (rat_zero(s)) return mv_zero(a.arity, a.dim);
  Multivector r = a;
  for (auto& [i, p] : r.c) p = dp_scale(p, s);
  return r;
}

DiffPoly mv_component(const Multivector& a, const std::vector<int>& idx) {
  if ((int)idx.size() != a.arity) throw std::invalid_argument("bad index arity");
  IdxTuple key;
  key.v.reserve(idx.size());
  for (int i : idx) key.v.push_back((uint8_t)i);
  // sort, tracking parity; repeated index -> 0
  int sign = 1;
  for (size_t i = 0; i + 1 < key.v.size(); ++i)
    for (size_t j = 0; j + 1 < key.v.size() - i; ++j) {
      if (key.v[j] == key.v[j + 1]) return dp_zero(a.dim);
      if (key.v[j] > key.v[j + 1]) {
        std::swap(key.v[j], key.v[j + 1]);
        sign = -sign;
      }
    }
  auto it = std::lower_bound(
      a.c.begin(), a.c.end(), key,
      [](const auto& e, const IdxTuple& k) { return e.first < k; });
  if (it == a.c.end() || !(it->first == key)) return dp_zero(a.dim);
  return sign == 1 ? it->second : dp_scale(it->second, -1);
}

Multivector mv_map(const Multivector& a,
                   const std::function<DiffPoly(const DiffPoly&)>& fn) {
  std::vector<std::pair<IdxTuple, DiffPoly>> comps;
  for (const auto& [i, p] : a.c) comps.emplace_back(i, fn(p));
  return mv_normalize(a.arity, a.dim, std::move(comps));
}

int wedge_sign(const IdxTuple& a, const IdxTuple& b, IdxTuple& out) {
  out.v.clear();
  out.v.reserve(a.v.size() + b.v.size());
  size_t i = 0, j = 0;
  int inversions = 0;
  while (i < a.v.size() && j < b.v.size()) {
    if (a.v[i] == b.v[j]) return 0;
    if (a.v[i] < b.v[j]) {
      out.v.push_back(a.v[i++]);
    } else {
      // b[j] passes the remaining factors of a
      inversions += (int)(a.v.size() - i);
      out.v.push_back(b.v[j++]);
    }
  }
  while (i < a.v.size()) out.v.push_back(a.v[i++]);
  while (j < b.v.size()) out.v.push_back(b.v[j++]);
  return inversions % 2 ? -1 : 1;
}

// One half of the bracket: sum_j (A psi-right-deriv_j) * d/dx_j (B), the
// psi remainder of A wedged in front of B's tuple.
static void half_bracket(const Multivector& a, const Multivector& b, int outer_sign,
                         std::vector<std::pair<IdxTuple, DiffPoly>>& acc) {
  const int p = a.arity;
  for (const auto& [ia, fa] : a.c) {
    for (int t = 0; t < p; ++t) {
      int coord = ia.v[t] - 1;
      // right derivative by psi_{ia[t]}: sign (-1)^(p-1-t) with t 0-based
      int s_right = ((p - 1 - t) % 2) ? -1 : 1;
      IdxTuple rest;
      rest.v.reserve(p - 1);
      for (int u = 0; u < p; ++u)
        if (u != t) rest.v.push_back(ia.v[u]);
      for (const auto& [ib, fb] : b.c) {
        IdxTuple merged;
        int s_wedge = wedge_sign(rest, ib, merged);
        if (s_wedge == 0) continue;
        DiffPoly dfb = dp_diff(fb, coord);
        if (dfb.zero()) continue;
        DiffPoly term = dp_mul(fa, dfb);
        int s = outer_sign * s_right * s_wedge;
        acc.emplace_back(std::move(merged), s == 1 ? std::move(term)
                                                   : dp_scale(term, -1));
      }
    }
  }
}

Multivector schouten(const Multivector& a, const Multivector& b) {
  if (a.dim != b.dim) throw std::invalid_argument("schouten: dim mismatch");
  const int p = a.arity, q = b.arity;
  int arity = p + q - 1;
  if (arity < 0 || arity > a.dim) return mv_zero(std::max(arity, 0), a.dim);
  std::vector<std::pair<IdxTuple, DiffPoly>> acc;
  half_bracket(a, b, 1, acc);
  int koszul = ((p - 1) * (q - 1)) % 2 ? 1 : -1;  // -(-1)^((p-1)(q-1))
  half_bracket(b, a, koszul, acc);
  return mv_normalize(arity, a.dim, std::move(acc));
}

Multivector jacobiator(const Multivector& p) {
  return mv_scale(schouten(p, p), Rat(1, 2));
}

Multivector nambu_dvector(int d) {
  IdxTuple top;
  for (int i = 1; i <= d; ++i) top.v.push_back((uint8_t)i);
  return Multivector{d, d, {{top, dp_jet(d, jet(kRho))}}};
}

// Parity of the permutation sending (1..d) to tuple (must be a permutation).
static int perm_sign(const std::vector<int>& tuple) {
  int n = (int)tuple.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : tuple) {
    if (v < 1 || v > n || seen[v]) return 0;
    seen[v] = true;
  }
  int sign = 1;
  std::vector<int> t = tuple;
  for (int i = 0; i < n; ++i)
    while (t[i] != i + 1) {
      std::swap(t[i], t[t[i] - 1]);
      sign = -sign;
    }
  return sign;
}

Multivector nambu_nvector(int d, int n) {
  if (d < 2 || d > kMaxDim || n < 2 || n > d)
    throw std::invalid_argument("nambu_nvector: need 2 <= n <= d <= 6");
  int tail = d - n;  // Casimirs a_{n-1}..a_{d-2}
  std::vector<std::pair<IdxTuple, DiffPoly>> comps;
  std::vector<int> head(n);
  // iterate over increasing head tuples
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == n) {
      std::vector<int> rest;
      for (int v = 1; v <= d; ++v)
        if (std::find(head.begin(), head.end(), v) == head.end())
          rest.push_back(v);
      DpBuilder acc(d);
      do {
        std::vector<int> full = head;
        full.insert(full.end(), rest.begin(), rest.end());
        int s = perm_sign(full);
        if (s == 0) continue;
        Monomial m;
        m.f.push_back(jet(kRho));
        for (int t = 0; t < tail; ++t)
          m.f.push_back(jet_bump(jet(casimir(n - 1 + t)), rest[t] - 1));
        std::sort(m.f.begin(), m.f.end());
        acc.add(std::move(m), Rat(s));
      } while (std::next_permutation(rest.begin(), rest.end()));
      IdxTuple it;
      for (int v : head) it.v.push_back((uint8_t)v);
      DiffPoly pcomp = acc.take();
      if (!pcomp.zero()) comps.emplace_back(std::move(it), std::move(pcomp));
      return;
    }
    for (int v = from; v <= d; ++v) {
      head[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 1);
  return mv_normalize(n, d, std::move(comps));
}

Multivector nambu_bivector(int d) { return nambu_nvector(d, 2); }

Multivector nambu_compose(int d, const DiffPoly& density,
                          const std::vector<DiffPoly>& casimirs) {
  IdxTuple top;
  for (int i = 1; i <= d; ++i) top.v.push_back((uint8_t)i);
  Multivector a{d, d, {}};
  if (!density.zero()) a.c.emplace_back(top, density);
  for (const auto& cas : casimirs) {
    Multivector f{0, d, {}};
    if (!cas.zero()) f.c.emplace_back(IdxTuple{}, cas);
    a = schouten(a, f);
  }
  return a;
}

std::string mv_str(const Multivector& a) {
  if (a.zero()) return "0";
  std::ostringstream os;
  for (size_t k = 0; k < a.c.size(); ++k) {
    if (k) os << "\n";
    os << "[";
    for (size_t i = 0; i < a.c[k].first.v.size(); ++i)
      os << (i ? "," : "") << (int)a.c[k].first.v[i];
    os << "] " << dp_str(a.c[k].second);
  }
  return os.str();
}

}  // namespace nambu
