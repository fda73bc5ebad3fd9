// Canonical labeling with sign for the three graph species.
//
// Undirected: branch-and-bound over vertex placements.  The code of a
// placement order is the concatenation over t of the adjacency column
// (mult(v_t, v_0), ..., mult(v_t, v_{t-1})); the canonical order maximizes
// the code lexicographically, so dense prefixes prune early.  All
// maximizing orders are inspected; the term's sign is the parity of the
// edge-list permutation that sorts the relabeled edges.  A parity conflict
// between two maximizing orders, or a parallel edge, gives sign 0.
//
// Kontsevich / micro: enumerate wedge (resp. block) relabelings outright;
// the counts stay small (<= 8 movable vertices everywhere in this project).
// Relabeling is sign-free; per-wedge L<->R normalization contributes -1.

#include <algorithm>
#include <stdexcept>

#include "nambuflow/graphs.hpp"

namespace nambu {

namespace {

using Pairs = std::vector<std::pair<uint8_t, uint8_t>>;

// insertion-sort parity; dup set when two entries coincide
int sort_parity(Pairs& v, bool* dup) {
  int sgn = 1;
  for (size_t i = 1; i < v.size(); ++i)
    for (size_t j = i; j > 0 && v[j] < v[j - 1]; --j) {
      std::swap(v[j], v[j - 1]);
      sgn = -sgn;
    }
  *dup = false;
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] == v[i - 1]) *dup = true;
  return sgn;
}

struct UgSearch {
  int n = 0;
  const UndirectedGraph* g = nullptr;
  std::vector<uint8_t> adj;  // n*n multiplicities
  std::vector<int> pos;      // pos[orig] = slot or -1
  std::vector<int> order;    // order[slot] = orig
  std::vector<uint8_t> best, col;
  bool have_best = false;
  bool mixed = false;
  std::vector<int> win;  // first maximizing order
  int win_sign = 0;

  int leaf_sign() const {
    Pairs e;
    e.reserve(g->e.size());
    for (auto [a, b] : g->e) {
      uint8_t x = (uint8_t)pos[a], y = (uint8_t)pos[b];
      if (x > y) std::swap(x, y);
      e.emplace_back(x, y);
    }
    bool dup = false;
    int s = sort_parity(e, &dup);
    return dup ? 0 : s;
  }

  void dfs(int t, size_t off) {
    if (t == n) {
      int s = leaf_sign();
      if (!have_best) {
        have_best = true;
        win = order;
        win_sign = s;
        mixed = false;
      } else if (s != win_sign) {
        mixed = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (pos[v] >= 0) continue;
      col.resize(t);
      for (int j = 0; j < t; ++j) col[j] = adj[v * n + order[j]];
      if (have_best) {
        int c = 0;
        for (int j = 0; j < t; ++j)
          if (col[j] != best[off + j]) {
            c = col[j] > best[off + j] ? -1 : 1;
            break;
          }
        if (c > 0) continue;
        if (c < 0) {
          have_best = false;
          best.resize(off);
          best.insert(best.end(), col.begin(), col.end());
        }
      } else {
        best.resize(off);
        best.insert(best.end(), col.begin(), col.end());
      }
      pos[v] = t;
      order[t] = v;
      dfs(t + 1, off + t);
      pos[v] = -1;
    }
  }
};

}  // namespace

Canonical<UndirectedGraph> ug_canonical(const UndirectedGraph& g) {
  ug_validate(g);
  UgSearch s;
  s.n = g.n;
  s.g = &g;
  s.adj.assign((size_t)g.n * g.n, 0);
  for (auto [a, b] : g.e) {
    s.adj[a * g.n + b]++;
    s.adj[b * g.n + a]++;
  }
  s.pos.assign(g.n, -1);
  s.order.assign(g.n, 0);
  s.dfs(0, 0);

  Canonical<UndirectedGraph> out;
  out.perm.assign(g.n, 0);
  if (g.n == 0) {
    out.g = g;
    out.sign = g.e.empty() ? 1 : 0;
    return out;
  }
  for (int t = 0; t < g.n; ++t) out.perm[s.win[t]] = t;
  out.g.n = g.n;
  out.g.e.reserve(g.e.size());
  for (auto [a, b] : g.e) {
    uint8_t x = (uint8_t)out.perm[a], y = (uint8_t)out.perm[b];
    if (x > y) std::swap(x, y);
    out.g.e.emplace_back(x, y);
  }
  std::sort(out.g.e.begin(), out.g.e.end());
  bool dup = false;
  for (size_t i = 1; i < out.g.e.size(); ++i)
    if (out.g.e[i] == out.g.e[i - 1]) dup = true;
  out.sign = (s.mixed || dup) ? 0 : s.win_sign;
  return out;
}

namespace {

// arrangements of [0,t) that keep the terminal symbol list unchanged
std::vector<std::vector<int>> symbol_arrangements(const std::vector<Symbol>& term) {
  int t = (int)term.size();
  std::vector<int> arr(t);
  for (int i = 0; i < t; ++i) arr[i] = i;
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < t; ++i)
      if (term[arr[i]] != term[i]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(arr);
  } while (std::next_permutation(arr.begin(), arr.end()));
  return out;
}

}  // namespace

Canonical<KontsevichGraph> kg_canonical(const KontsevichGraph& g) {
  kg_validate(g);
  const int m = g.m, t = g.t(), nw = g.wedges(), base = m + t;
  bool dead = false;  // both arrows of one wedge on the same target
  for (auto [l, r] : g.w)
    if (l == r) dead = true;

  auto taus = symbol_arrangements(g.term);
  std::vector<int> arrw(nw);
  for (int i = 0; i < nw; ++i) arrw[i] = i;

  Pairs bestw;
  int bestsign = 0;
  bool mixed = false, first = true;
  std::vector<int> bestperm;
  std::vector<int> vmap(g.vertices());

  for (const auto& tau : taus) {
    std::vector<int> arr = arrw;
    do {
      for (int v = 0; v < m; ++v) vmap[v] = v;
      for (int j = 0; j < t; ++j) vmap[m + tau[j]] = m + j;
      for (int k = 0; k < nw; ++k) vmap[base + arr[k]] = base + k;
      Pairs cand(nw);
      int sgn = 1;
      for (int k = 0; k < nw; ++k) {
        auto [l, r] = g.w[arr[k]];
        uint8_t a = (uint8_t)vmap[l], b = (uint8_t)vmap[r];
        if (a > b) {
          std::swap(a, b);
          sgn = -sgn;
        }
        cand[k] = {a, b};
      }
      if (first || cand < bestw) {
        bestw = cand;
        bestsign = sgn;
        bestperm = vmap;
        mixed = false;
        first = false;
      } else if (cand == bestw && sgn != bestsign) {
        mixed = true;
      }
    } while (std::next_permutation(arr.begin(), arr.end()));
  }

  Canonical<KontsevichGraph> out;
  out.g.m = g.m;
  out.g.term = g.term;
  out.g.w = bestw;
  out.sign = (dead || mixed) ? 0 : bestsign;
  out.perm = bestperm;
  return out;
}

// Micro-graph isomorphism works on the underlying content-labeled digraph:
// a Casimir copy is a leaf distinguished only by its symbol, and which of
// the arrows into it is "the" epsilon-slot arrow of its owner is a choice
// of perfect matching, not structure.  So the relabeling group is
// S(blocks) x S(copies of a_1) x ... x S(copies of a_{d-2}) x terminal
// arrangements, with the copy arrangements independent of the block one.
// A candidate is admissible when every relabeled head still holds all of
// its own copies among its d targets (the straight matching exists); each
// head's sign is the parity of sorting its written d-tuple
// (L, R, own copies) into the stored order.
Canonical<MicroGraph> mg_canonical(const MicroGraph& g) {
  mg_validate(g);
  const int m = g.m, t = g.t(), nb = g.b, base = m + t;
  const int nc = g.d - 2;
  const bool dead = mg_double_edge(g);

  auto taus = symbol_arrangements(g.term);
  std::vector<std::vector<int>> bperms;
  {
    std::vector<int> p(nb);
    for (int i = 0; i < nb; ++i) p[i] = i;
    do bperms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }

  Pairs bestw;
  int bestsign = 0;
  bool mixed = false, first = true;
  std::vector<int> bestperm;
  std::vector<int> vmap(g.vertices());
  std::vector<size_t> ci(nc, 0);  // odometer over copy arrangements
  std::vector<uint8_t> tup(g.d), want(g.d);

  for (const auto& tau : taus)
    for (const auto& arr : bperms) {
      std::fill(ci.begin(), ci.end(), 0);
      for (;;) {
        for (int v = 0; v < m; ++v) vmap[v] = v;
        for (int j = 0; j < t; ++j) vmap[m + tau[j]] = m + j;
        for (int k = 0; k < nb; ++k) vmap[base + arr[k]] = base + k;
        for (int i = 1; i <= nc; ++i) {
          const auto& cp = bperms[ci[i - 1]];
          for (int k = 0; k < nb; ++k) vmap[g.cas(cp[k], i)] = g.cas(k, i);
        }

        Pairs cand(nb);
        int sgn = 1;
        bool ok = true;
        for (int k = 0; k < nb && ok; ++k) {
          const int l = arr[k];
          tup[0] = (uint8_t)vmap[g.lr[l].first];
          tup[1] = (uint8_t)vmap[g.lr[l].second];
          for (int i = 1; i <= nc; ++i) tup[1 + i] = (uint8_t)vmap[g.cas(l, i)];
          // stored order: free pair ascending, then the head's own copies
          for (int i = 1; i <= nc; ++i) want[1 + i] = (uint8_t)g.cas(k, i);
          std::vector<uint8_t> rest;
          {
            std::vector<bool> used(g.d, false);
            for (int i = 1; i <= nc; ++i) {
              bool hit = false;
              for (int q = 0; q < g.d; ++q)
                if (!used[q] && tup[q] == want[1 + i]) {
                  used[q] = true;
                  hit = true;
                  break;
                }
              if (!hit) {
                ok = false;
                break;
              }
            }
            if (!ok) break;
            for (int q = 0; q < g.d; ++q)
              if (!used[q]) rest.push_back(tup[q]);
          }
          if (rest[0] > rest[1]) std::swap(rest[0], rest[1]);
          want[0] = rest[0];
          want[1] = rest[1];
          cand[k] = {rest[0], rest[1]};
          // parity of the rearrangement tup -> want (values distinct
          // unless the graph is dead, where the sign is 0 anyway)
          std::vector<bool> taken(g.d, false);
          std::vector<int> sig(g.d);
          for (int p = 0; p < g.d; ++p)
            for (int q = 0; q < g.d; ++q)
              if (!taken[q] && tup[q] == want[p]) {
                taken[q] = true;
                sig[p] = q;
                break;
              }
          for (int p = 0; p < g.d; ++p)
            for (int q = p + 1; q < g.d; ++q)
              if (sig[p] > sig[q]) sgn = -sgn;
        }

        if (ok) {
          if (first || cand < bestw) {
            bestw = cand;
            bestsign = sgn;
            bestperm = vmap;
            mixed = false;
            first = false;
          } else if (cand == bestw && sgn != bestsign) {
            mixed = true;
          }
        }

        int i = 0;
        while (i < nc && ++ci[i] == bperms.size()) ci[i++] = 0;
        if (i == nc) break;
      }
    }

  Canonical<MicroGraph> out;
  out.g.d = g.d;
  out.g.m = g.m;
  out.g.term = g.term;
  out.g.b = g.b;
  out.g.lr = bestw;
  out.sign = (dead || mixed) ? 0 : bestsign;
  out.perm = bestperm;
  return out;
}

}  // namespace nambu
