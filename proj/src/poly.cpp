#include "nambuflow/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nambu {

Poly px_zero(int dim) { return Poly{dim, {}}; }

Poly px_const(int dim, const Rat& c) {
  Poly p{dim, {}};
  if (!rat_zero(c)) p.t.emplace_back(XMono{}, c);
  return p;
}

Poly px_coord(int dim, int coord) {
  XMono m;
  m.e[coord] = 1;
  return Poly{dim, {{m, Rat(1)}}};
}

static Poly px_normalize(int dim, std::vector<std::pair<XMono, Rat>> t) {
  std::sort(t.begin(), t.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  size_t w = 0;
  for (size_t i = 0; i < t.size();) {
    size_t j = i + 1;
    Rat c = t[i].second;
    while (j < t.size() && t[j].first == t[i].first) c += t[j++].second;
    if (!rat_zero(c)) t[w++] = {t[i].first, std::move(c)};
    i = j;
  }
  t.resize(w);
  return Poly{dim, std::move(t)};
}

Poly px_add(const Poly& a, const Poly& b) {
  auto t = a.t;
  t.insert(t.end(), b.t.begin(), b.t.end());
  return px_normalize(a.dim, std::move(t));
}

Poly px_sub(const Poly& a, const Poly& b) { return px_add(a, px_scale(b, -1)); }

Poly px_scale(const Poly& a, const Rat& c) {
  if (rat_zero(c)) return px_zero(a.dim);
  Poly r = a;
  for (auto& [m, q] : r.t) q *= c;
  return r;
}

Poly px_mul(const Poly& a, const Poly& b) {
  std::vector<std::pair<XMono, Rat>> t;
  t.reserve(a.t.size() * b.t.size());
  for (const auto& [ma, ca] : a.t)
    for (const auto& [mb, cb] : b.t) {
      XMono m = ma;
      for (int c = 0; c < kMaxDim; ++c) m.e[c] += mb.e[c];
      t.emplace_back(m, ca * cb);
    }
  return px_normalize(a.dim, std::move(t));
}

Poly px_diff(const Poly& a, int coord) {
  std::vector<std::pair<XMono, Rat>> t;
  for (const auto& [m, c] : a.t) {
    if (m.e[coord] == 0) continue;
    XMono n = m;
    n.e[coord] -= 1;
    t.emplace_back(n, c * m.e[coord]);
  }
  return px_normalize(a.dim, std::move(t));
}

std::string px_str(const Poly& a) {
  if (a.zero()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < a.t.size(); ++i) {
    if (i) os << " + ";
    os << rat_str(a.t[i].second);
    for (int c = 0; c < a.dim; ++c)
      for (int k = 0; k < a.t[i].first.e[c]; ++k) os << "*x" << c + 1;
  }
  return os.str();
}

Poly px_random(int dim, int degree, std::mt19937_64& rng, int coeff_bound) {
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  std::vector<std::pair<XMono, Rat>> t;
  // all exponent vectors with total degree <= degree
  std::function<void(int, int, XMono)> rec = [&](int c, int left, XMono m) {
    if (c == dim) {
      int q = coeff(rng);
      if (q) t.emplace_back(m, Rat(q));
      return;
    }
    for (int e = 0; e <= left; ++e) {
      XMono n = m;
      n.e[c] = (uint16_t)e;
      rec(c + 1, left - e, n);
    }
  };
  rec(0, degree, XMono{});
  return px_normalize(dim, std::move(t));
}

Poly px_linear_subst(const Poly& a,
                     const std::array<std::array<int, kMaxDim>, kMaxDim>& A) {
  // x^i -> sum_j A[i][j] x^j
  std::array<Poly, kMaxDim> img;
  for (int i = 0; i < a.dim; ++i) {
    img[i] = px_zero(a.dim);
    for (int j = 0; j < a.dim; ++j)
      if (A[i][j]) img[i] = px_add(img[i], px_scale(px_coord(a.dim, j), A[i][j]));
  }
  Poly r = px_zero(a.dim);
  for (const auto& [m, c] : a.t) {
    Poly term = px_const(a.dim, c);
    for (int i = 0; i < a.dim; ++i)
      for (int k = 0; k < m.e[i]; ++k) term = px_mul(term, img[i]);
    r = px_add(r, term);
  }
  return r;
}

Poly instantiate(const DiffPoly& p, const Instantiation& inst) {
  if (p.dim != inst.dim) throw std::invalid_argument("instantiate: dim mismatch");
  std::map<Jet, Poly> cache;
  auto jet_val = [&](Jet v) -> const Poly& {
    auto it = cache.find(v);
    if (it != cache.end()) return it->second;
    Poly q = inst.value[jet_symbol(v)];
    for (int c = 0; c < p.dim; ++c)
      for (int k = 0; k < jet_alpha(v, c); ++k) q = px_diff(q, c);
    return cache.emplace(v, std::move(q)).first->second;
  };
  Poly r = px_zero(p.dim);
  for (const auto& [m, c] : p.t) {
    Poly term = px_const(p.dim, c);
    for (Jet v : m.f) term = px_mul(term, jet_val(v));
    r = px_add(r, term);
  }
  return r;
}

}  // namespace nambu
