#include "nambuflow/micro.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace nambu {

ExpandReport leibniz_expand(const KSum& s, int d) {
  if (d < 2 || d > kMaxDim)
    throw std::invalid_argument("leibniz_expand: need 2 <= d <= 6");
  ExpandReport rep;
  MSumBuilder out;
  std::map<MicroGraph, long long> cls;  // live canonical shape -> choice count
  std::set<MicroGraph> dead;            // double-edge shapes
  for (const auto& [g, coeff] : s) {
    kg_validate(g);
    const int m = g.m, t = g.t(), w = g.wedges(), base = m + t;

    // Arrows whose head is a wedge; each one picks a factor of that block.
    std::vector<std::pair<int, int>> slots;  // (wedge, 0 = L / 1 = R)
    for (int vi = 0; vi < w; ++vi) {
      if (g.w[vi].first >= base) slots.push_back({vi, 0});
      if (g.w[vi].second >= base) slots.push_back({vi, 1});
    }

    std::vector<int> choice(slots.size(), 0);  // 0 = head, i = copy of a_i
    for (;;) {
      MicroGraph mg;
      mg.d = d;
      mg.m = m;
      mg.term = g.term;
      mg.b = w;
      mg.lr.resize(w);
      for (int vi = 0; vi < w; ++vi)
        mg.lr[vi] = {g.w[vi].first, g.w[vi].second};
      for (size_t a = 0; a < slots.size(); ++a) {
        auto [wi, side] = slots[a];
        int u = (side ? g.w[wi].second : g.w[wi].first) - base;
        uint8_t nv = choice[a] == 0 ? (uint8_t)mg.head(u)
                                    : (uint8_t)mg.cas(u, choice[a]);
        (side ? mg.lr[wi].second : mg.lr[wi].first) = nv;
      }
      rep.raw_terms++;
      if (mg_double_edge(mg)) {
        dead.insert(mg_canonical(mg).g);
      } else {
        rep.live_terms++;
        cls[mg_canonical(mg).g]++;
        out.add(mg, coeff);
      }

      size_t a = slots.size();
      while (a > 0 && choice[a - 1] == d - 2) choice[--a] = 0;
      if (a == 0) break;
      choice[a - 1]++;
    }
  }
  rep.sum = out.take();
  for (auto& [shape, n] : cls) {
    rep.classes.push_back(shape);
    rep.mult.push_back(n);
  }
  rep.dead_classes = (int)dead.size();
  return rep;
}

MicroGraph embed(const MicroGraph& g) {
  mg_validate(g);
  if (g.d + 1 > kMaxDim)
    throw std::invalid_argument("embed: dimension cap is 6");
  MicroGraph h;
  h.d = g.d + 1;
  h.m = g.m;
  h.term = g.term;
  h.b = g.b;
  // Sinks, terminals and heads keep their ids; copies shift with the block
  // stride, and the fresh last copy of every block receives nothing.
  auto remap = [&](uint8_t v) -> uint8_t {
    int l = g.cas_owner(v);
    return l < 0 ? v : (uint8_t)h.cas(l, g.cas_index(v));
  };
  for (auto [L, R] : g.lr) h.lr.push_back({remap(L), remap(R)});
  return h;
}

MSum embed(const MSum& s) {
  MSumBuilder out;
  for (auto& [g, c] : s) out.add(embed(g), c);
  return out.take();
}

namespace {

bool weakly_connected(const MicroGraph& g) {
  const int V = g.vertices();
  if (V == 0) return true;
  std::vector<int> comp(V);
  for (int v = 0; v < V; ++v) comp[v] = v;
  std::function<int(int)> find = [&](int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  auto join = [&](int a, int b) { comp[find(a)] = find(b); };
  for (int l = 0; l < g.b; ++l) {
    join(g.head(l), g.lr[l].first);
    join(g.head(l), g.lr[l].second);
    for (int i = 1; i <= g.d - 2; ++i) join(g.head(l), g.cas(l, i));
  }
  for (int v = 1; v < V; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

}  // namespace

std::vector<MicroGraph> enumerate_micrographs(int k, int blocks, int d,
                                              bool connected_only) {
  if (k < 0 || blocks < 1 || d < 2 || d > kMaxDim)
    throw std::invalid_argument("enumerate_micrographs: bad signature");
  if (k > 2 * blocks)
    throw std::invalid_argument(
        "enumerate_micrographs: more sinks than derivation arrows");
  MicroGraph g;
  g.d = d;
  g.m = k;
  g.b = blocks;
  g.lr.assign(blocks, {0, 0});
  const int V = g.vertices();

  std::set<MicroGraph> shapes;
  std::vector<int> tgt(2 * blocks, 0);
  std::vector<int> indeg(k);
  for (;;) {
    std::fill(indeg.begin(), indeg.end(), 0);
    for (int a = 0; a < 2 * blocks; ++a)
      if (tgt[a] < k) indeg[tgt[a]]++;
    bool ok = true;
    for (int s = 0; s < k; ++s)
      if (indeg[s] != 1) ok = false;
    if (ok) {
      for (int l = 0; l < blocks; ++l)
        g.lr[l] = {(uint8_t)tgt[2 * l], (uint8_t)tgt[2 * l + 1]};
      if (!connected_only || weakly_connected(g))
        shapes.insert(mg_canonical(g).g);
    }
    int a = 2 * blocks - 1;
    while (a >= 0 && tgt[a] == V - 1) tgt[a--] = 0;
    if (a < 0) break;
    tgt[a]++;
  }
  return {shapes.begin(), shapes.end()};
}

}  // namespace nambu
