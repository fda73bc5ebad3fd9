#include "nambuflow/orientation.hpp"

#include <stdexcept>
#include <vector>

namespace nambu {

// Calibration: the evaluation map sends the one-wedge graph to the bi-vector
// P itself, and at this scale the tetrahedron flow obeys the trivialisation
// identity [[P, X_sunflower]] = Q in the plane exactly when the raw
// multiplicities 8:24 are divided by 8, giving the integral weights 1 and 3.
// The one-vertex graph orients to 1/8 * (0,1)-wedge.
const Rat kOrientNorm = Rat(1, 8);

namespace {

int seq_parity(const std::vector<int>& seq) {
  int inv = 0;
  for (size_t a = 0; a < seq.size(); ++a)
    for (size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++inv;
  return inv & 1 ? -1 : 1;
}

// Directed arrows of one vertex under a portrait: (global position, target).
struct Arrow {
  int pos;
  int target;  // internal vertex id in the directed layout
};

void orient_terms(const UndirectedGraph& g, const Rat& coeff, KSumBuilder& out,
                  long long& raw) {
  const int n = g.n, k = (int)g.e.size();
  const int m = 2;
  for (uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> outdeg(n, 0);
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      int tail = (mask >> i & 1) ? g.e[i].second : g.e[i].first;
      if (++outdeg[tail] > 2) ok = false;
    }
    if (!ok) continue;
    std::vector<int> slots;  // vertices with free arrow slots, with multiplicity
    for (int v = 0; v < n; ++v)
      for (int s = outdeg[v]; s < 2; ++s) slots.push_back(v);
    // two sink assignments (slots[0] -> sink a, slots[1] -> sink b) when the
    // free slots sit on different vertices; a vertex attacking both sinks
    // admits only one assignment (swapping its two arrows flips the wedge
    // sign and the arrow-order parity at once, so it is the same term, not
    // a second one)
    const int nflip = slots[0] == slots[1] ? 1 : 2;
    for (int flip = 0; flip < nflip; ++flip) {
      std::vector<std::vector<Arrow>> at(n);
      for (int i = 0; i < k; ++i) {
        int tail = (mask >> i & 1) ? g.e[i].second : g.e[i].first;
        int head = (mask >> i & 1) ? g.e[i].first : g.e[i].second;
        at[tail].push_back({i, m + head});
      }
      // arrow into sink 0 occupies global position k, into sink 1 position k+1
      at[slots[0]].push_back({k + flip, flip});
      at[slots[1]].push_back({k + 1 - flip, 1 - flip});
      KontsevichGraph dg;
      dg.m = m;
      std::vector<int> seq;
      seq.reserve(k + 2);
      for (int v = 0; v < n; ++v) {
        Arrow a = at[v][0], b = at[v][1];
        if (a.pos > b.pos) std::swap(a, b);
        dg.w.push_back({(uint8_t)a.target, (uint8_t)b.target});
        seq.push_back(a.pos);
        seq.push_back(b.pos);
      }
      out.add(dg, coeff * seq_parity(seq) * kOrientNorm);
      ++raw;
    }
  }
}

}  // namespace

OrientResult orient(const GraphSum& gamma) {
  OrientResult res;
  res.raw_terms = 0;
  KSumBuilder out;
  for (const auto& [g, c] : gamma) {
    if (2 * g.n - (int)g.e.size() != 2)
      throw std::invalid_argument("orient: graph deficiency 2n - k must equal 2");
    orient_terms(g, c, out, res.raw_terms);
  }
  res.q = out.take();
  return res;
}

KSum orient_marked(const GraphSum& gamma, Symbol content) {
  KSumBuilder out;
  for (const auto& [g, c] : gamma) {
    const int n = g.n, k = (int)g.e.size();
    if (k != 2 * (n - 1))
      throw std::invalid_argument("orient_marked: need #edges == 2(n-1)");
    for (int w = 0; w < n; ++w) {
      // internal ids: terminal w -> 0, other vertices keep order after it
      auto vid = [&](int v) { return v == w ? 0 : (v < w ? v + 1 : v); };
      for (uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> outdeg(n, 0);
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
          int tail = (mask >> i & 1) ? g.e[i].second : g.e[i].first;
          if (tail == w || ++outdeg[tail] > 2) ok = false;
        }
        if (!ok) continue;
        std::vector<std::vector<Arrow>> at(n);
        for (int i = 0; i < k; ++i) {
          int tail = (mask >> i & 1) ? g.e[i].second : g.e[i].first;
          int head = (mask >> i & 1) ? g.e[i].first : g.e[i].second;
          at[tail].push_back({i, vid(head)});
        }
        KontsevichGraph dg;
        dg.m = 0;
        dg.term = {content};
        std::vector<int> seq;
        seq.reserve(k);
        bool full = true;
        for (int v = 0; v < n && full; ++v) {
          if (v == w) continue;
          if (at[v].size() != 2) {
            full = false;
            break;
          }
        }
        if (!full) continue;  // some wedge is not saturated
        for (int v = 0; v < n; ++v) {
          if (v == w) continue;
          Arrow a = at[v][0], b = at[v][1];
          if (a.pos > b.pos) std::swap(a, b);
          dg.w.push_back({(uint8_t)a.target, (uint8_t)b.target});
          seq.push_back(a.pos);
          seq.push_back(b.pos);
        }
        out.add(dg, c * seq_parity(seq));
      }
    }
  }
  return out.take();
}

}  // namespace nambu
