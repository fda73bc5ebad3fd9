#include "nambuflow/graphs.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nambu {

void ug_validate(const UndirectedGraph& g) {
  if (g.n < 0) throw std::runtime_error("graph: negative vertex count");
  for (auto [a, b] : g.e) {
    if (a >= g.n || b >= g.n) throw std::runtime_error("graph: edge endpoint out of range");
    if (a == b) throw std::runtime_error("graph: self-loop edge");
    if (a > b) throw std::runtime_error("graph: edge endpoints not sorted");
  }
}

void kg_validate(const KontsevichGraph& g) {
  if (g.m < 0) throw std::runtime_error("graph: negative sink count");
  int nv = g.vertices();
  for (auto [l, r] : g.w)
    if (l >= nv || r >= nv) throw std::runtime_error("graph: target out of range");
}

void mg_validate(const MicroGraph& g) {
  if (g.d < 2) throw std::runtime_error("micrograph: dimension < 2");
  if (g.d > kMaxDim) throw std::runtime_error("micrograph: dimension too large");
  if (g.m < 0 || g.b < 0 || (int)g.lr.size() != g.b)
    throw std::runtime_error("micrograph: malformed block list");
  int nv = g.vertices();
  for (auto [l, r] : g.lr)
    if (l >= nv || r >= nv) throw std::runtime_error("micrograph: target out of range");
}

int tadpole_count(const KontsevichGraph& g) {
  int c = 0;
  for (int i = 0; i < g.wedges(); ++i) {
    int self = g.m + g.t() + i;
    if (g.w[i].first == self) ++c;
    if (g.w[i].second == self) ++c;
  }
  return c;
}

int tadpole_count(const MicroGraph& g) {
  int c = 0;
  for (int l = 0; l < g.b; ++l) {
    if (g.lr[l].first == g.head(l)) ++c;
    if (g.lr[l].second == g.head(l)) ++c;
  }
  return c;
}

bool mg_double_edge(const MicroGraph& g) {
  for (int l = 0; l < g.b; ++l) {
    auto [L, R] = g.lr[l];
    if (L == R) return true;
    if (g.cas_owner(L) == l || g.cas_owner(R) == l) return true;
  }
  return false;
}

// shared merge: sort by graph, sum coefficients, drop zeros
template <typename G>
static std::vector<std::pair<G, Rat>> merge_terms(std::vector<std::pair<G, Rat>>& v) {
  std::sort(v.begin(), v.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::pair<G, Rat>> out;
  for (size_t i = 0; i < v.size();) {
    size_t j = i + 1;
    Rat c = v[i].second;
    while (j < v.size() && v[j].first == v[i].first) c += v[j++].second;
    if (!rat_zero(c)) out.emplace_back(std::move(v[i].first), std::move(c));
    i = j;
  }
  return out;
}

void GraphSumBuilder::add(const UndirectedGraph& g, const Rat& c) {
  auto cf = ug_canonical(g);
  if (cf.sign == 0 || rat_zero(c)) return;
  acc.emplace_back(std::move(cf.g), c * cf.sign);
}
GraphSum GraphSumBuilder::take() { return merge_terms(acc); }

void KSumBuilder::add(const KontsevichGraph& g, const Rat& c) {
  auto cf = kg_canonical(g);
  if (cf.sign == 0 || rat_zero(c)) return;
  acc.emplace_back(std::move(cf.g), c * cf.sign);
}
KSum KSumBuilder::take() { return merge_terms(acc); }

void MSumBuilder::add(const MicroGraph& g, const Rat& c) {
  auto cf = mg_canonical(g);
  if (cf.sign == 0 || rat_zero(c)) return;
  acc.emplace_back(std::move(cf.g), c * cf.sign);
}
MSum MSumBuilder::take() { return merge_terms(acc); }

template <typename S>
static S sum_add(const S& a, const S& b) {
  S v = a;
  v.insert(v.end(), b.begin(), b.end());
  return merge_terms(v);
}
template <typename S>
static S sum_scale(const S& a, const Rat& c) {
  S v;
  if (rat_zero(c)) return v;
  for (auto& [g, x] : a) v.emplace_back(g, x * c);
  return v;
}

GraphSum gs_add(const GraphSum& a, const GraphSum& b) { return sum_add(a, b); }
GraphSum gs_scale(const GraphSum& a, const Rat& c) { return sum_scale(a, c); }
KSum ks_add(const KSum& a, const KSum& b) { return sum_add(a, b); }
KSum ks_scale(const KSum& a, const Rat& c) { return sum_scale(a, c); }
MSum ms_add(const MSum& a, const MSum& b) { return sum_add(a, b); }
MSum ms_scale(const MSum& a, const Rat& c) { return sum_scale(a, c); }

std::string ug_str(const UndirectedGraph& g) {
  std::ostringstream os;
  os << "ug " << g.n << " ;";
  for (size_t i = 0; i < g.e.size(); ++i)
    os << (i ? ";" : " ") << "(" << (int)g.e[i].first << "," << (int)g.e[i].second << ")";
  return os.str();
}

std::string kg_str(const KontsevichGraph& g) {
  std::ostringstream os;
  os << g.m << " " << g.wedges() << " ;";
  if (g.t()) {
    os << " [";
    for (int i = 0; i < g.t(); ++i) os << (i ? "," : "") << symbol_name(g.term[i]);
    os << "] ;";
  }
  for (size_t i = 0; i < g.w.size(); ++i)
    os << (i ? ";" : " ") << "(" << (int)g.w[i].first << "," << (int)g.w[i].second << ")";
  return os.str();
}

std::string mg_str(const MicroGraph& g) {
  std::ostringstream os;
  os << "micro " << g.d << " " << g.m << " " << g.b << " ;";
  if (g.t()) {
    os << " [";
    for (int i = 0; i < g.t(); ++i) os << (i ? "," : "") << symbol_name(g.term[i]);
    os << "] ;";
  }
  for (int l = 0; l < g.b; ++l) {
    os << (l ? ";" : " ") << "[" << (int)g.lr[l].first << "," << (int)g.lr[l].second;
    for (int i = 1; i <= g.d - 2; ++i) os << "," << g.cas(l, i);
    os << "]";
  }
  return os.str();
}

}  // namespace nambu
