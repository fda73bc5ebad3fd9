#include "nambuflow/graph_complex.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nambu {

namespace {

// All insertions of b into the vertices of a, accumulated with coefficient c.
void insert_all(const UndirectedGraph& a, const UndirectedGraph& b, const Rat& c,
                GraphSumBuilder& out) {
  const int na = a.n, nb = b.n;
  const int ka = (int)a.e.size();
  for (int v = 0; v < na; ++v) {
    // slot_of[i][end]: position among v's edge ends, or -1.
    std::vector<std::array<int, 2>> slot_of(ka, {-1, -1});
    int deg = 0;
    for (int i = 0; i < ka; ++i) {
      if (a.e[i].first == v) slot_of[i][0] = deg++;
      if (a.e[i].second == v) slot_of[i][1] = deg++;
    }
    std::vector<int> phi(deg, 0);
    for (;;) {
      UndirectedGraph g;
      g.n = na - 1 + nb;
      g.e.reserve(a.e.size() + b.e.size());
      for (int i = 0; i < ka; ++i) {
        auto end = [&](int which) {
          int u = which ? a.e[i].second : a.e[i].first;
          return slot_of[i][which] >= 0 ? na - 1 + phi[slot_of[i][which]]
                                        : (u < v ? u : u - 1);
        };
        int x = end(0), y = end(1);
        if (x > y) std::swap(x, y);
        g.e.push_back({(uint8_t)x, (uint8_t)y});
      }
      for (auto [x, y] : b.e)
        g.e.push_back({(uint8_t)(na - 1 + x), (uint8_t)(na - 1 + y)});
      out.add(g, c);

      int s = 0;
      while (s < deg && ++phi[s] == nb) phi[s++] = 0;
      if (s == deg) break;
    }
  }
}

}  // namespace

GraphSum gc_insert(const GraphSum& a, const GraphSum& b) {
  GraphSumBuilder out;
  for (const auto& [ga, ca] : a)
    for (const auto& [gb, cb] : b) insert_all(ga, gb, ca * cb, out);
  return out.take();
}

GraphSum gc_bracket(const GraphSum& a, const GraphSum& b) {
  GraphSumBuilder out;
  for (const auto& [ga, ca] : a)
    for (const auto& [gb, cb] : b) {
      insert_all(ga, gb, ca * cb, out);
      Rat s = (ga.e.size() * gb.e.size()) % 2 ? Rat(1) : Rat(-1);
      insert_all(gb, ga, s * ca * cb, out);
    }
  return out.take();
}

GraphSum gc_diff(const GraphSum& g) {
  GraphSum stick = {{gc_stick(), Rat(1)}};
  return gc_bracket(stick, g);
}

CocycleReport is_cocycle(const GraphSum& g) {
  GraphSum r = gc_diff(g);
  return {r.empty(), std::move(r)};
}

UndirectedGraph wheel_graph(int spokes) {
  UndirectedGraph g;
  g.n = spokes + 1;
  for (int i = 1; i <= spokes; ++i) g.e.push_back({0, (uint8_t)i});
  for (int i = 1; i <= spokes; ++i) {
    int j = i % spokes + 1;
    g.e.push_back({(uint8_t)std::min(i, j), (uint8_t)std::max(i, j)});
  }
  return g;
}

GraphSum derive_wheel5_cocycle() {
  std::vector<std::pair<uint8_t, uint8_t>> all;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) all.push_back({(uint8_t)a, (uint8_t)b});
  std::set<UndirectedGraph> cls;
  for (uint32_t m = 0; m < (1u << 15); ++m) {
    if (std::popcount(m) != 10) continue;
    UndirectedGraph g;
    g.n = 6;
    for (int i = 0; i < 15; ++i)
      if (m >> i & 1) g.e.push_back(all[i]);
    auto c = ug_canonical(g);
    if (c.sign) cls.insert(c.g);
  }

  const UndirectedGraph w5 = ug_canonical(wheel_graph(5)).g;
  GraphSum dw = gc_diff({{w5, Rat(1)}});
  GraphSum found;
  for (const auto& x : cls) {
    if (x == w5) continue;
    GraphSum dx = gc_diff({{x, Rat(1)}});
    if (dx.size() != dw.size() || dw.empty()) continue;
    bool prop = true;
    Rat r = 0;
    for (size_t i = 0; i < dw.size() && prop; ++i) {
      if (!(dx[i].first == dw[i].first)) {
        prop = false;
        break;
      }
      Rat ri = dw[i].second / dx[i].second;
      if (i == 0)
        r = ri;
      else if (ri != r)
        prop = false;
    }
    if (!prop) continue;
    if (!found.empty()) throw std::runtime_error("5-wheel companion is not unique");
    GraphSumBuilder b;
    b.add(w5, Rat(1));
    b.add(x, -r);
    found = b.take();
  }
  if (found.size() != 2) throw std::runtime_error("5-wheel cocycle search failed");
  if (!is_cocycle(found).ok) throw std::runtime_error("derived combination is not closed");
  return found;
}

}  // namespace nambu
