#include "nambuflow/diffpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nambu {

static const char* kSymbolNames[kSymbolCount] = {"rho", "a1", "a2", "a3",
                                                 "a4",  "f",  "g",  "aux"};

const char* symbol_name(Symbol s) {
  if (s >= kSymbolCount) throw std::invalid_argument("bad symbol");
  return kSymbolNames[s];
}

Symbol symbol_from_name(std::string_view name) {
  for (int s = 0; s < kSymbolCount; ++s)
    if (name == kSymbolNames[s]) return Symbol(s);
  throw std::invalid_argument("unknown symbol: " + std::string(name));
}

Jet jet(Symbol s, const std::array<uint8_t, kMaxDim>& alpha) {
  Jet v = jet(s);
  for (int c = 0; c < kMaxDim; ++c) {
    if (alpha[c] > 15) throw std::invalid_argument("jet order > 15");
    v |= Jet(alpha[c]) << (4 * c);
  }
  return v;
}

Jet jet_bump(Jet v, int coord) {
  if (jet_alpha(v, coord) == 15) throw std::overflow_error("jet order > 15");
  return v + (Jet(1) << (4 * coord));
}

int jet_order(Jet v) {
  int n = 0;
  for (int c = 0; c < kMaxDim; ++c) n += jet_alpha(v, c);
  return n;
}

std::string jet_str(Jet v, int dim) {
  std::string s = symbol_name(jet_symbol(v));
  if (jet_order(v) == 0) return s;
  std::string idx;
  for (int c = 0; c < dim; ++c)
    for (int k = 0; k < jet_alpha(v, c); ++k) idx += std::to_string(c + 1);
  return s + "_" + idx;
}

bool mono_less(const Monomial& a, const Monomial& b) {
  // Exponent-vector lex scan over ascending jet ids, using the sortedness of
  // the factor lists; run lengths are the exponents.
  size_t i = 0, j = 0;
  while (i < a.f.size() && j < b.f.size()) {
    if (a.f[i] != b.f[j]) {
      // The smaller jet id is present with positive exponent on one side and
      // exponent 0 on the other: that side is lex-greater.
      return a.f[i] > b.f[j];
    }
    Jet v = a.f[i];
    size_t ia = i, jb = j;
    while (i < a.f.size() && a.f[i] == v) ++i;
    while (j < b.f.size() && b.f[j] == v) ++j;
    size_t ea = i - ia, eb = j - jb;
    if (ea != eb) return ea < eb;
  }
  if (i < a.f.size()) return false;  // a has an extra (larger-id) factor
  if (j < b.f.size()) return true;
  return false;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.f.resize(a.f.size() + b.f.size());
  std::merge(a.f.begin(), a.f.end(), b.f.begin(), b.f.end(), r.f.begin());
  return r;
}

bool mono_divides(const Monomial& d, const Monomial& m) {
  size_t i = 0;
  for (Jet v : d.f) {
    while (i < m.f.size() && m.f[i] < v) ++i;
    if (i == m.f.size() || m.f[i] != v) return false;
    ++i;
  }
  return true;
}

Monomial mono_div(const Monomial& m, const Monomial& d) {
  Monomial r;
  r.f.reserve(m.f.size() - d.f.size());
  size_t i = 0;
  for (Jet v : m.f) {
    if (i < d.f.size() && d.f[i] == v)
      ++i;
    else
      r.f.push_back(v);
  }
  if (i != d.f.size()) throw std::logic_error("mono_div: not divisible");
  return r;
}

std::string mono_str(const Monomial& m, int dim) {
  if (m.f.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < m.f.size(); ++i) {
    if (i) s += "*";
    s += jet_str(m.f[i], dim);
  }
  return s;
}

DiffPoly dp_zero(int dim) { return DiffPoly{dim, {}}; }

DiffPoly dp_const(int dim, const Rat& c) {
  DiffPoly p{dim, {}};
  if (!rat_zero(c)) p.t.emplace_back(Monomial{}, c);
  return p;
}

DiffPoly dp_jet(int dim, Jet v) { return dp_mono(dim, Monomial{{v}}, 1); }

DiffPoly dp_mono(int dim, Monomial m, const Rat& c) {
  DiffPoly p{dim, {}};
  if (!rat_zero(c)) p.t.emplace_back(std::move(m), c);
  return p;
}

static void normalize(std::vector<std::pair<Monomial, Rat>>& t) {
  std::sort(t.begin(), t.end(),
            [](const auto& a, const auto& b) { return mono_less(a.first, b.first); });
  size_t w = 0;
  for (size_t i = 0; i < t.size();) {
    size_t j = i + 1;
    Rat c = t[i].second;
    while (j < t.size() && t[j].first == t[i].first) c += t[j++].second;
    if (!rat_zero(c)) {
      if (w != i) t[w].first = std::move(t[i].first);
      t[w].second = std::move(c);
      ++w;
    }
    i = j;
  }
  t.resize(w);
}

DiffPoly DpBuilder::take() {
  normalize(acc);
  DiffPoly p{dim, std::move(acc)};
  acc.clear();
  return p;
}

static void check_dims(const DiffPoly& a, const DiffPoly& b) {
  if (a.dim != b.dim) throw std::invalid_argument("DiffPoly dimension mismatch");
}

DiffPoly dp_add(const DiffPoly& a, const DiffPoly& b) {
  check_dims(a, b);
  DiffPoly r{a.dim, {}};
  r.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() || j < b.t.size()) {
    if (j == b.t.size() || (i < a.t.size() && mono_less(a.t[i].first, b.t[j].first))) {
      r.t.push_back(a.t[i++]);
    } else if (i == a.t.size() || mono_less(b.t[j].first, a.t[i].first)) {
      r.t.push_back(b.t[j++]);
    } else {
      Rat c = a.t[i].second + b.t[j].second;
      if (!rat_zero(c)) r.t.emplace_back(a.t[i].first, std::move(c));
      ++i, ++j;
    }
  }
  return r;
}

DiffPoly dp_sub(const DiffPoly& a, const DiffPoly& b) {
  return dp_add(a, dp_scale(b, -1));
}

DiffPoly dp_scale(const DiffPoly& a, const Rat& c) {
  if (rat_zero(c)) return dp_zero(a.dim);
  DiffPoly r{a.dim, a.t};
  for (auto& [m, q] : r.t) q *= c;
  return r;
}

DiffPoly dp_mul(const DiffPoly& a, const DiffPoly& b) {
  check_dims(a, b);
  DpBuilder acc(a.dim);
  acc.acc.reserve(a.t.size() * b.t.size());
  for (const auto& [ma, ca] : a.t)
    for (const auto& [mb, cb] : b.t) acc.add(mono_mul(ma, mb), ca * cb);
  return acc.take();
}

DiffPoly dp_diff(const DiffPoly& a, int coord) {
  DpBuilder acc(a.dim);
  for (const auto& [m, c] : a.t) {
    // Leibniz over the factor list; equal factors produce equal monomials
    // which the builder merges (yielding the exponent as coefficient).
    for (size_t k = 0; k < m.f.size(); ++k) {
      Monomial n = m;
      n.f[k] = jet_bump(n.f[k], coord);
      std::sort(n.f.begin(), n.f.end());
      acc.add(std::move(n), c);
    }
  }
  return acc.take();
}

DiffPoly dp_substitute(const DiffPoly& a, const std::function<DiffPoly(Jet)>& image) {
  DiffPoly r = dp_zero(a.dim);
  for (const auto& [m, c] : a.t) {
    DiffPoly term = dp_const(a.dim, c);
    for (Jet v : m.f) term = dp_mul(term, image(v));
    r = dp_add(r, term);
  }
  return r;
}

DiffPoly dp_negate_symbol(const DiffPoly& a, Symbol s) {
  DiffPoly r{a.dim, a.t};
  for (auto& [m, c] : r.t) {
    int k = 0;
    for (Jet v : m.f) k += jet_symbol(v) == s;
    if (k & 1) c = -c;
  }
  return r;
}

DiffPoly dp_swap_symbols(const DiffPoly& a, Symbol s1, Symbol s2) {
  DpBuilder acc(a.dim);
  for (const auto& [m, c] : a.t) {
    Monomial n = m;
    for (Jet& v : n.f) {
      Symbol s = jet_symbol(v);
      if (s == s1)
        v = (v & 0xffffff) | (Jet(s2) << 24);
      else if (s == s2)
        v = (v & 0xffffff) | (Jet(s1) << 24);
    }
    std::sort(n.f.begin(), n.f.end());
    acc.add(std::move(n), c);
  }
  return acc.take();
}

DiffPoly dp_set_symbol_const(const DiffPoly& a, Symbol s, const Rat& c) {
  DpBuilder acc(a.dim);
  for (const auto& [m, q] : a.t) {
    Monomial n;
    Rat cc = q;
    bool dead = false;
    for (Jet v : m.f) {
      if (jet_symbol(v) != s) {
        n.f.push_back(v);
      } else if (jet_order(v) == 0) {
        cc *= c;
      } else {
        dead = true;
        break;
      }
    }
    if (!dead && !rat_zero(cc)) acc.add(std::move(n), std::move(cc));
  }
  return acc.take();
}

static uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return (uint64_t)((__uint128_t)a * b % p);
}

uint64_t dp_eval_mod(const DiffPoly& a, const std::function<uint64_t(Jet)>& value,
                     uint64_t p) {
  uint64_t sum = 0;
  mpz_class mp(std::to_string(p));
  std::map<Jet, uint64_t> cache;
  for (const auto& [m, c] : a.t) {
    uint64_t prod = 1;
    for (Jet v : m.f) {
      auto it = cache.find(v);
      if (it == cache.end()) it = cache.emplace(v, value(v) % p).first;
      prod = mulmod(prod, it->second, p);
    }
    mpz_class num = c.get_num() % mp;
    if (num < 0) num += mp;
    mpz_class den = c.get_den() % mp;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mp.get_mpz_t()) == 0)
      throw std::runtime_error("dp_eval_mod: denominator not invertible");
    uint64_t cm = mulmod(num.get_ui(), inv.get_ui(), p);
    sum = (sum + mulmod(prod, cm, p)) % p;
  }
  return sum;
}

std::optional<DiffPoly> dp_div_exact(const DiffPoly& t, const DiffPoly& d,
                                     Monomial* witness) {
  check_dims(t, d);
  if (d.zero()) throw std::invalid_argument("dp_div_exact: zero divisor");
  DiffPoly r = t;
  DpBuilder q(t.dim);
  const auto& [ld, cd] = d.t.back();  // leading = largest in mono_less
  while (!r.zero()) {
    const auto& [lr, cr] = r.t.back();
    if (!mono_divides(ld, lr)) {
      if (witness) *witness = lr;
      return std::nullopt;
    }
    Monomial qm = mono_div(lr, ld);
    Rat qc = cr / cd;
    q.add(qm, qc);
    r = dp_sub(r, dp_mul(dp_mono(r.dim, std::move(qm), qc), d));
  }
  return q.take();
}

std::string dp_str(const DiffPoly& a) {
  if (a.zero()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < a.t.size(); ++i) {
    const auto& [m, c] = a.t[i];
    if (i) os << " + ";
    os << rat_str(c);
    if (m.degree()) os << "*" << mono_str(m, a.dim);
  }
  return os.str();
}

}  // namespace nambu
