#include "nambuflow/evaluate.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace nambu {

namespace {

long factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Raw contributions are keyed by the 1-based free index tuple in sink order;
// the fold sorts each tuple with its parity and applies the 1/k! weight.
// Repeated free indices never reach here (skipped during enumeration).
using RawComps = std::vector<std::pair<std::vector<uint8_t>, DiffPoly>>;

Multivector fold_alt(int arity, int dim, RawComps raw) {
  const Rat w(1, factorial(arity));
  std::vector<std::pair<IdxTuple, DiffPoly>> comps;
  comps.reserve(raw.size());
  for (auto& [tup, poly] : raw) {
    if (poly.zero()) continue;
    int sign = 1;
    for (size_t i = 1; i < tup.size(); ++i)
      for (size_t j = i; j > 0 && tup[j] < tup[j - 1]; --j) {
        std::swap(tup[j], tup[j - 1]);
        sign = -sign;
      }
    comps.emplace_back(IdxTuple{std::move(tup)}, dp_scale(poly, sign * w));
  }
  return mv_normalize(arity, dim, std::move(comps));
}

// ---------------------------------------------------------------- Kontsevich

// Differentiated bi-vector components, memoized on (i, j, packed alpha);
// alpha uses the Jet nibble layout, 4 bits of derivative order per coordinate.
struct WedgeTable {
  int d;
  Multivector p;
  std::map<uint64_t, DiffPoly> cache;

  const DiffPoly& factor(int i, int j, uint32_t alpha) {
    uint64_t key = (uint64_t(i) << 40) | (uint64_t(j) << 32) | alpha;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    DiffPoly f = mv_component(p, {i, j});
    for (int c = 0; c < d; ++c)
      for (int k = int((alpha >> (4 * c)) & 0xf); k > 0; --k) f = dp_diff(f, c);
    return cache.emplace(key, std::move(f)).first->second;
  }
};

void eval_k_term(const KontsevichGraph& g, const Rat& coeff, int d,
                 WedgeTable& wt, std::map<std::vector<uint8_t>, DpBuilder>& out) {
  kg_validate(g);
  const int m = g.m, t = g.t(), w = g.wedges(), V = g.vertices();
  std::vector<int> dst;
  dst.reserve(2 * w);
  for (auto& [l, r] : g.w) {
    dst.push_back(l);
    dst.push_back(r);
  }
  const int A = (int)dst.size();

  std::vector<int> indeg(V, 0);
  std::vector<int> sink_arrow(m, -1);
  for (int a = 0; a < A; ++a) {
    indeg[dst[a]]++;
    if (dst[a] < m) sink_arrow[dst[a]] = a;
  }
  for (int s = 0; s < m; ++s)
    if (indeg[s] != 1)
      throw std::invalid_argument("evaluate: every sink needs in-degree 1");
  for (int v = m; v < V; ++v)
    if (indeg[v] > 15)
      throw std::invalid_argument("evaluate: in-degree exceeds the jet packing");

  std::vector<uint8_t> idx(A, 1);
  std::vector<uint32_t> alpha(V);
  for (;;) {
    bool skip = false;
    for (int s = 0; s < m && !skip; ++s)
      for (int r = s + 1; r < m; ++r)
        if (idx[sink_arrow[s]] == idx[sink_arrow[r]]) {
          skip = true;
          break;
        }
    if (!skip) {
      std::fill(alpha.begin(), alpha.end(), 0);
      for (int a = 0; a < A; ++a)
        if (dst[a] >= m) alpha[dst[a]] += 1u << (4 * (idx[a] - 1));
      DiffPoly prod = dp_const(d, 1);
      for (int vi = 0; vi < w && !prod.zero(); ++vi) {
        const DiffPoly& f =
            wt.factor(idx[2 * vi], idx[2 * vi + 1], alpha[m + t + vi]);
        prod = f.zero() ? f : dp_mul(prod, f);
      }
      for (int ti = 0; ti < t && !prod.zero(); ++ti)
        prod = dp_mul(prod, dp_jet(d, (Jet(g.term[ti]) << 24) | alpha[m + ti]));
      if (!prod.zero()) {
        std::vector<uint8_t> tup(m);
        for (int s = 0; s < m; ++s) tup[s] = idx[sink_arrow[s]];
        auto& b = out.try_emplace(std::move(tup), d).first->second;
        for (auto& [mono, c] : prod.t) b.add(mono, c * coeff);
      }
    }
    int a = A - 1;
    while (a >= 0 && idx[a] == d) idx[a--] = 1;
    if (a < 0) break;
    idx[a]++;
  }
}

// --------------------------------------------------------------------- micro

struct PermTable {
  std::vector<std::array<uint8_t, kMaxDim>> p;
  std::vector<int> sign;
};

PermTable perm_table(int d) {
  PermTable t;
  std::array<uint8_t, kMaxDim> v{};
  for (int i = 0; i < d; ++i) v[i] = (uint8_t)i;
  do {
    int s = 1;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (v[i] > v[j]) s = -s;
    t.p.push_back(v);
    t.sign.push_back(s);
  } while (std::next_permutation(v.begin(), v.begin() + d));
  return t;
}

struct VecHash {
  size_t operator()(const std::vector<uint32_t>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return (size_t)h;
  }
};

// Structure shared by the exact and the Z/p micro walks: per block the d
// arrow targets in epsilon-tuple order (L, R, own copies of a_1..a_{d-2}).
struct MicroShape {
  int m, V, b, d;
  std::vector<std::array<uint8_t, kMaxDim>> tgt;
  std::vector<Symbol> content;  // for vertices m..V-1
};

MicroShape micro_shape(const MicroGraph& g, int d) {
  mg_validate(g);
  if (g.d != d)
    throw std::invalid_argument("evaluate: micro-graph dimension mismatch");
  MicroShape sh{g.m, g.vertices(), g.b, d, {}, {}};
  std::vector<int> indeg(sh.V, 0);
  for (int l = 0; l < g.b; ++l) {
    std::array<uint8_t, kMaxDim> t{};
    t[0] = g.lr[l].first;
    t[1] = g.lr[l].second;
    for (int i = 1; i <= d - 2; ++i) t[1 + i] = (uint8_t)g.cas(l, i);
    for (int pos = 0; pos < d; ++pos) indeg[t[pos]]++;
    sh.tgt.push_back(t);
  }
  for (int s = 0; s < g.m; ++s)
    if (indeg[s] != 1)
      throw std::invalid_argument("evaluate: every sink needs in-degree 1");
  for (int v = g.m; v < sh.V; ++v) {
    if (indeg[v] > 15)
      throw std::invalid_argument("evaluate: in-degree exceeds the jet packing");
    Symbol s;
    if (v < g.m + g.t())
      s = g.term[v - g.m];
    else if (g.head_of(v) >= 0)
      s = kRho;
    else
      s = casimir(g.cas_index(v));
    sh.content.push_back(s);
  }
  return sh;
}

// One monomial per element of (S_d)^blocks: the key packs the free tuple in
// its first word and the sorted jets after it.
RawComps eval_m_term(const MicroGraph& g, const Rat& coeff, int d,
                     const PermTable& pt) {
  const MicroShape sh = micro_shape(g, d);
  const int nper = (int)pt.p.size();
  std::unordered_map<std::vector<uint32_t>, long, VecHash> cnt;

  std::vector<int> pi(sh.b, 0);
  std::vector<uint32_t> alpha(sh.V);
  std::vector<uint8_t> tup(sh.m);
  std::vector<uint32_t> key;
  for (;;) {
    int sign = 1;
    for (int l = 0; l < sh.b; ++l) sign *= pt.sign[pi[l]];
    std::fill(alpha.begin(), alpha.end(), 0);
    for (int l = 0; l < sh.b; ++l) {
      const auto& tau = pt.p[pi[l]];
      for (int pos = 0; pos < d; ++pos) {
        int v = sh.tgt[l][pos];
        if (v < sh.m)
          tup[v] = (uint8_t)(tau[pos] + 1);
        else
          alpha[v] += 1u << (4 * tau[pos]);
      }
    }
    bool skip = false;
    for (int s = 0; s < sh.m && !skip; ++s)
      for (int r = s + 1; r < sh.m; ++r)
        if (tup[s] == tup[r]) {
          skip = true;
          break;
        }
    if (!skip) {
      key.clear();
      uint32_t packed = 0;
      for (int s = 0; s < sh.m; ++s) packed |= uint32_t(tup[s]) << (4 * s);
      key.push_back(packed);
      for (int v = sh.m; v < sh.V; ++v)
        key.push_back((Jet(sh.content[v - sh.m]) << 24) | alpha[v]);
      std::sort(key.begin() + 1, key.end());
      cnt[key] += sign;
    }
    int l = sh.b - 1;
    while (l >= 0 && pi[l] == nper - 1) pi[l--] = 0;
    if (l < 0) break;
    pi[l]++;
  }

  std::map<std::vector<uint8_t>, DpBuilder> per_tuple;
  for (auto& [k, c] : cnt) {
    if (c == 0) continue;
    std::vector<uint8_t> tpl(sh.m);
    for (int s = 0; s < sh.m; ++s) tpl[s] = (k[0] >> (4 * s)) & 0xf;
    Monomial mono{std::vector<Jet>(k.begin() + 1, k.end())};
    per_tuple.try_emplace(std::move(tpl), d)
        .first->second.add(std::move(mono), c * coeff);
  }
  RawComps out;
  for (auto& [tpl, b] : per_tuple) out.emplace_back(tpl, b.take());
  return out;
}

int common_arity(int m0, int m) {
  if (m0 >= 0 && m0 != m)
    throw std::invalid_argument("evaluate: mixed sink counts in one sum");
  return m;
}

// ---------------------------------------------------------------mod-p walk

uint64_t mulmod(uint64_t a, uint64_t b) {
  return (uint64_t)((unsigned __int128)a * b % kEvalPrime);
}

uint64_t powmod(uint64_t a, uint64_t e) {
  uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

uint64_t rat_mod(const Rat& q) {
  const mpz_class p((unsigned long)kEvalPrime);
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  return mulmod(num.get_ui(), powmod(den.get_ui(), kEvalPrime - 2));
}

}  // namespace

Multivector evaluate(const KSum& s, int d, Bracket bracket) {
  if (d < 2 || d > kMaxDim) throw std::invalid_argument("evaluate: bad dimension");
  if (bracket == Bracket::kGeneric2D && d != 2)
    throw std::invalid_argument("evaluate: the generic plane bi-vector needs d = 2");
  WedgeTable wt{d, nambu_bivector(d), {}};
  std::map<std::vector<uint8_t>, DpBuilder> acc;
  int arity = -1;
  for (auto& [g, c] : s) {
    arity = common_arity(arity, g.m);
    eval_k_term(g, c, d, wt, acc);
  }
  if (arity < 0) return mv_zero(0, d);
  RawComps raw;
  for (auto& [tup, b] : acc) raw.emplace_back(tup, b.take());
  return fold_alt(arity, d, std::move(raw));
}

Multivector evaluate(const MSum& s, int d) {
  if (d < 2 || d > kMaxDim) throw std::invalid_argument("evaluate: bad dimension");
  const PermTable pt = perm_table(d);
  int arity = -1;
  for (auto& [g, c] : s) arity = common_arity(arity, g.m);
  if (arity < 0) return mv_zero(0, d);

  std::vector<RawComps> per(s.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < (int)s.size(); ++i) {
    try {
      per[i] = eval_m_term(s[i].first, s[i].second, d, pt);
    } catch (...) {
#pragma omp critical
      err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);

  RawComps raw;
  for (auto& r : per) raw.insert(raw.end(), r.begin(), r.end());
  return fold_alt(arity, d, std::move(raw));
}

uint64_t jet_point(Jet v, uint64_t seed) {
  uint64_t x = (seed + 0x9e3779b97f4a7c15ull) ^ (uint64_t(v) * 0xff51afd7ed558ccdull);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  x %= kEvalPrime;
  return x ? x : 1;
}

std::vector<std::pair<IdxTuple, uint64_t>> evaluate_mod(const MSum& s, int d,
                                                        uint64_t seed) {
  if (d < 2 || d > kMaxDim) throw std::invalid_argument("evaluate: bad dimension");
  const PermTable pt = perm_table(d);
  const int nper = (int)pt.p.size();
  int arity = -1;
  std::map<std::vector<uint8_t>, uint64_t> acc;
  for (auto& [g, coeff] : s) {
    arity = common_arity(arity, g.m);
    const MicroShape sh = micro_shape(g, d);
    const uint64_t cm = rat_mod(coeff);
    std::vector<int> pi(sh.b, 0);
    std::vector<uint32_t> alpha(sh.V);
    std::vector<uint8_t> tup(sh.m);
    for (;;) {
      int sign = 1;
      for (int l = 0; l < sh.b; ++l) sign *= pt.sign[pi[l]];
      std::fill(alpha.begin(), alpha.end(), 0);
      for (int l = 0; l < sh.b; ++l) {
        const auto& tau = pt.p[pi[l]];
        for (int pos = 0; pos < d; ++pos) {
          int v = sh.tgt[l][pos];
          if (v < sh.m)
            tup[v] = (uint8_t)(tau[pos] + 1);
          else
            alpha[v] += 1u << (4 * tau[pos]);
        }
      }
      bool skip = false;
      for (int a = 0; a < sh.m && !skip; ++a)
        for (int r = a + 1; r < sh.m; ++r)
          if (tup[a] == tup[r]) {
            skip = true;
            break;
          }
      if (!skip) {
        uint64_t val = cm;
        for (int v = sh.m; v < sh.V; ++v)
          val = mulmod(val, jet_point((Jet(sh.content[v - sh.m]) << 24) | alpha[v],
                                      seed));
        uint64_t& slot = acc[tup];
        slot = sign > 0 ? (slot + val) % kEvalPrime
                        : (slot + kEvalPrime - val) % kEvalPrime;
      }
      int l = sh.b - 1;
      while (l >= 0 && pi[l] == nper - 1) pi[l--] = 0;
      if (l < 0) break;
      pi[l]++;
    }
  }
  if (arity < 0) return {};

  // Alt fold in Z/p, mirroring fold_alt.
  const uint64_t w = powmod(rat_mod(Rat(factorial(arity))), kEvalPrime - 2);
  std::map<IdxTuple, uint64_t> folded;
  for (auto& [tup0, val] : acc) {
    auto tup = tup0;
    int sign = 1;
    for (size_t i = 1; i < tup.size(); ++i)
      for (size_t j = i; j > 0 && tup[j] < tup[j - 1]; --j) {
        std::swap(tup[j], tup[j - 1]);
        sign = -sign;
      }
    uint64_t v = mulmod(val, w);
    if (sign < 0) v = (kEvalPrime - v) % kEvalPrime;
    uint64_t& slot = folded[IdxTuple{tup}];
    slot = (slot + v) % kEvalPrime;
  }
  std::vector<std::pair<IdxTuple, uint64_t>> out;
  for (auto& [t, v] : folded)
    if (v) out.emplace_back(t, v);
  return out;
}

std::vector<std::pair<IdxTuple, uint64_t>> mv_fingerprint(const Multivector& a,
                                                          uint64_t seed) {
  std::vector<std::pair<IdxTuple, uint64_t>> out;
  for (auto& [t, poly] : a.c) {
    uint64_t v = dp_eval_mod(
        poly, [seed](Jet j) { return jet_point(j, seed); }, kEvalPrime);
    if (v) out.emplace_back(t, v);
  }
  return out;
}

}  // namespace nambu
