#include "nambuflow/graphs_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "nambuflow/rational.hpp"

namespace nambu {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what, const std::string& text) {
  throw std::runtime_error("graph parse: " + what + " in \"" + text + "\"");
}

// ',' and ';' are interchangeable with whitespace; '()[]' carry structure.
struct Cur {
  const std::string& s;
  size_t i = 0;
  explicit Cur(const std::string& t) : s(t) {}
  void ws() {
    while (i < s.size() &&
           (std::isspace((unsigned char)s[i]) || s[i] == ',' || s[i] == ';'))
      ++i;
  }
  bool done() {
    ws();
    return i >= s.size();
  }
  bool peek(char c) {
    ws();
    return i < s.size() && s[i] == c;
  }
  bool tryc(char c) {
    if (!peek(c)) return false;
    ++i;
    return true;
  }
  void expect(char c) {
    if (!tryc(c)) fail(std::string("expected '") + c + "'", s);
  }
  int num() {
    ws();
    if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail("expected a number", s);
    int v = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
    return v;
  }
  std::string word() {
    ws();
    size_t b = i;
    while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
    if (b == i) fail("expected a name", s);
    return s.substr(b, i - b);
  }
};

std::vector<Symbol> read_symbols(Cur& c) {
  std::vector<Symbol> out;
  c.expect('[');
  while (!c.tryc(']')) out.push_back(symbol_from_name(c.word()));
  return out;
}

// A '[' opening a symbol list (terminals) rather than a numeric tuple.
bool symbols_ahead(Cur& c) {
  c.ws();
  if (c.i >= c.s.size() || c.s[c.i] != '[') return false;
  size_t j = c.i + 1;
  while (j < c.s.size() &&
         (std::isspace((unsigned char)c.s[j]) || c.s[j] == ',' || c.s[j] == ';'))
    ++j;
  return j < c.s.size() && std::isalpha((unsigned char)c.s[j]);
}

// All integers in reading order; brackets and parens are decoration here.
std::vector<int> read_all_numbers(Cur& c) {
  std::vector<int> xs;
  while (!c.done()) {
    if (c.tryc('(') || c.tryc(')') || c.tryc('[') || c.tryc(']')) continue;
    xs.push_back(c.num());
  }
  return xs;
}

int seq_parity(const std::vector<int>& seq) {
  int inv = 0;
  for (size_t a = 0; a < seq.size(); ++a)
    for (size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++inv;
  return inv & 1 ? -1 : 1;
}

}  // namespace

UndirectedGraph ug_parse(const std::string& text) {
  Cur c(text);
  if (c.word() != "ug") fail("expected 'ug'", text);
  UndirectedGraph g;
  g.n = c.num();
  while (!c.done()) {
    c.expect('(');
    int a = c.num(), b = c.num();
    c.expect(')');
    if (a > b) std::swap(a, b);
    g.e.push_back({(uint8_t)a, (uint8_t)b});
  }
  ug_validate(g);
  return g;
}

KontsevichGraph kg_parse(const std::string& text) {
  Cur c(text);
  KontsevichGraph g;
  g.m = c.num();
  int n = c.num();
  if (symbols_ahead(c)) g.term = read_symbols(c);
  while (!c.done()) {
    c.expect('(');
    int l = c.num(), r = c.num();
    c.expect(')');
    g.w.push_back({(uint8_t)l, (uint8_t)r});
  }
  if ((int)g.w.size() != n) fail("wedge count does not match header", text);
  kg_validate(g);
  return g;
}

MicroGraph mg_parse(const std::string& text) {
  Cur c(text);
  if (c.word() != "micro") fail("expected 'micro'", text);
  MicroGraph g;
  g.d = c.num();
  g.m = c.num();
  g.b = c.num();
  if (symbols_ahead(c)) g.term = read_symbols(c);
  for (int l = 0; l < g.b; ++l) {
    c.expect('[');
    std::vector<int> tup;
    while (!c.tryc(']')) tup.push_back(c.num());
    if ((int)tup.size() != g.d) fail("tuple arity does not match d", text);
    for (int i = 1; i <= g.d - 2; ++i)
      if (tup[1 + i] != g.cas(l, i)) fail("tuple is not in normalized layout", text);
    g.lr.push_back({(uint8_t)tup[0], (uint8_t)tup[1]});
  }
  if (!c.done()) fail("trailing input", text);
  mg_validate(g);
  return g;
}

KontsevichGraph parse_kontsevich(const std::string& text, int sinks, int terminals) {
  Cur c(text);
  std::vector<int> xs = read_all_numbers(c);
  if (xs.size() % 2) fail("odd number of targets", text);
  int w = (int)xs.size() / 2;
  int base = (sinks == 0 && terminals > 0) ? 1 : 0;
  int total = sinks + terminals + w;
  KontsevichGraph g;
  g.m = sinks;
  g.term.assign(terminals, kRho);
  for (int j = 0; j < w; ++j) {
    int l = xs[2 * j] - base, r = xs[2 * j + 1] - base;
    if (l < 0 || l >= total || r < 0 || r >= total) fail("target out of range", text);
    g.w.push_back({(uint8_t)l, (uint8_t)r});
  }
  kg_validate(g);
  return g;
}

MicroGraph parse_micrograph(const std::string& text, int d, const MicroRoles& roles,
                            int* sign_out) {
  if (d < 2 || d > kMaxDim) fail("dimension out of range", text);
  int b = (int)roles.lc.size();
  Cur c(text);
  std::vector<int> xs = read_all_numbers(c);
  if ((int)xs.size() != b * d) fail("expected one d-tuple of targets per block", text);

  int m = (int)roles.sinks.size();
  int t = (int)roles.terminals.size();
  std::map<int, int> vid;  // label -> internal id, Casimir copies excluded
  auto put = [&](int lab, int id) {
    if (roles.casimirs.count(lab) || !vid.emplace(lab, id).second)
      fail("label has two roles", text);
  };
  {
    std::vector<int> ss = roles.sinks;
    std::sort(ss.begin(), ss.end());
    for (int j = 0; j < m; ++j) put(ss[j], j);
  }
  std::vector<Symbol> term;
  {
    int j = 0;
    for (auto& [lab, sym] : roles.terminals) {
      put(lab, m + j++);
      term.push_back(sym);
    }
  }
  for (int l = 0; l < b; ++l) put(roles.lc[l], m + t + l);
  for (int x : xs)
    if (!vid.count(x) && !roles.casimirs.count(x)) fail("target with no declared role", text);

  // copies[i]: labels of the a_i copies, ascending.
  std::vector<std::vector<int>> copies(std::max(0, d - 1));
  for (auto& [lab, idx] : roles.casimirs) {
    if (idx < 1 || idx > d - 2) fail("Casimir index out of range", text);
    copies[idx].push_back(lab);
  }
  for (int i = 1; i <= d - 2; ++i)
    if ((int)copies[i].size() != b) fail("need exactly one a_i copy per block", text);

  auto group_has = [&](int l, int lab) {
    for (int p = 0; p < d; ++p)
      if (xs[l * d + p] == lab) return true;
    return false;
  };

  // Ownership: per index class, bijections copy -> block such that the block
  // has an arrow onto the copy (that arrow is the Casimir arrow).
  std::vector<std::vector<std::vector<int>>> class_asgn(std::max(0, d - 1));
  for (int i = 1; i <= d - 2; ++i) {
    std::vector<int> pb(b);
    std::iota(pb.begin(), pb.end(), 0);
    do {
      bool ok = true;
      for (int k = 0; k < b && ok; ++k) ok = group_has(pb[k], copies[i][k]);
      if (ok) class_asgn[i].push_back(pb);
    } while (std::next_permutation(pb.begin(), pb.end()));
    if (class_asgn[i].empty())
      fail("targets do not decompose into Casimir ownership", text);
  }

  struct Reading {
    MicroGraph g;
    int sign;
  };
  std::vector<Reading> first;  // singleton once found
  Canonical<MicroGraph> first_canon;
  bool have = false;

  std::vector<int> odo(std::max(0, d - 1), 0);  // odometer over index classes
  for (;;) {
    // cmap: copy label -> internal id under this ownership.
    std::map<int, int> cmap;
    MicroGraph proto;
    proto.d = d;
    proto.m = m;
    proto.term = term;
    proto.b = b;
    for (int i = 1; i <= d - 2; ++i) {
      const std::vector<int>& own = class_asgn[i][odo[i]];
      for (int k = 0; k < b; ++k) cmap[copies[i][k]] = proto.cas(own[k], i);
    }
    auto internal_id = [&](int lab) {
      auto it = vid.find(lab);
      return it != vid.end() ? it->second : cmap.at(lab);
    };

    // Per block, every way to point the Casimir arrows at the owned copies;
    // the two leftover positions are (L, R) in written order.
    std::vector<std::vector<std::pair<std::pair<uint8_t, uint8_t>, int>>> bl(b);
    for (int l = 0; l < b; ++l) {
      std::vector<int> oc(std::max(0, d - 1));
      for (int i = 1; i <= d - 2; ++i) {
        const std::vector<int>& own = class_asgn[i][odo[i]];
        for (int k = 0; k < b; ++k)
          if (own[k] == l) oc[i] = copies[i][k];
      }
      std::vector<int> pos(std::max(0, d - 1));
      std::vector<char> used(d, 0);
      std::function<void(int)> rec = [&](int i) {
        if (i > d - 2) {
          std::vector<int> seq;
          for (int p = 0; p < d; ++p)
            if (!used[p]) seq.push_back(p);
          int L = internal_id(xs[l * d + seq[0]]);
          int R = internal_id(xs[l * d + seq[1]]);
          for (int k = 1; k <= d - 2; ++k) seq.push_back(pos[k]);
          bl[l].push_back({{(uint8_t)L, (uint8_t)R}, seq_parity(seq)});
          return;
        }
        for (int p = 0; p < d; ++p)
          if (!used[p] && xs[l * d + p] == oc[i]) {
            used[p] = 1;
            pos[i] = p;
            rec(i + 1);
            used[p] = 0;
          }
      };
      rec(1);
      if (bl[l].empty()) fail("targets do not decompose into Casimir ownership", text);
    }

    std::vector<int> ch(b, 0);
    for (;;) {
      MicroGraph g = proto;
      int sign = 1;
      for (int l = 0; l < b; ++l) {
        g.lr.push_back(bl[l][ch[l]].first);
        sign *= bl[l][ch[l]].second;
      }
      mg_validate(g);
      Canonical<MicroGraph> cn = mg_canonical(g);
      cn.sign *= sign;
      if (!have) {
        first.push_back({g, sign});
        first_canon = cn;
        have = true;
      } else if (!(first_canon.sign == 0 && cn.sign == 0) &&
                 !(first_canon.sign == cn.sign && first_canon.g == cn.g)) {
        fail("ambiguous Casimir ownership", text);
      }
      int l = 0;
      while (l < b && ++ch[l] == (int)bl[l].size()) ch[l++] = 0;
      if (l == b) break;
    }

    int i = 1;
    while (i <= d - 2 && ++odo[i] == (int)class_asgn[i].size()) odo[i++] = 0;
    if (i > d - 2) break;
  }

  if (!have) fail("targets do not decompose into Casimir ownership", text);
  if (sign_out) *sign_out = first[0].sign;
  return first[0].g;
}

namespace {

json term_common(const Rat& c) {
  json t;
  t["coefficient"] = rat_str(c);
  return t;
}

Rat term_coeff(const json& t) { return rat_parse(t.at("coefficient").get<std::string>()); }

json sym_list(const std::vector<Symbol>& term) {
  json a = json::array();
  for (Symbol s : term) a.push_back(symbol_name(s));
  return a;
}

std::vector<Symbol> sym_parse(const json& a) {
  std::vector<Symbol> out;
  for (auto& s : a) out.push_back(symbol_from_name(s.get<std::string>()));
  return out;
}

json parse_sum_doc(const std::string& text, const char* species) {
  json j = json::parse(text);
  if (j.at("species") != species)
    throw std::runtime_error(std::string("expected species \"") + species + "\", got " +
                             j.at("species").dump());
  return j;
}

}  // namespace

std::string gs_to_json(const GraphSum& s) {
  json j;
  j["species"] = "undirected";
  j["terms"] = json::array();
  for (auto& [g, c] : s) {
    json t = term_common(c);
    t["n"] = g.n;
    json groups = json::array();
    for (auto [a, b] : g.e) groups.push_back(json::array({a, b}));
    t["groups"] = groups;
    j["terms"].push_back(t);
  }
  return j.dump(1);
}

GraphSum gs_from_json(const std::string& text) {
  json j = parse_sum_doc(text, "undirected");
  GraphSumBuilder b;
  for (auto& t : j.at("terms")) {
    UndirectedGraph g;
    g.n = t.at("n").get<int>();
    for (auto& e : t.at("groups"))
      g.e.push_back({(uint8_t)e.at(0).get<int>(), (uint8_t)e.at(1).get<int>()});
    ug_validate(g);
    b.add(g, term_coeff(t));
  }
  return b.take();
}

std::string ks_to_json(const KSum& s) {
  json j;
  j["species"] = "kontsevich";
  j["terms"] = json::array();
  for (auto& [g, c] : s) {
    json t = term_common(c);
    t["sinks"] = g.m;
    if (g.t()) t["terminals"] = sym_list(g.term);
    json groups = json::array();
    for (auto [l, r] : g.w) groups.push_back(json::array({l, r}));
    t["groups"] = groups;
    j["terms"].push_back(t);
  }
  return j.dump(1);
}

KSum ks_from_json(const std::string& text) {
  json j = parse_sum_doc(text, "kontsevich");
  KSumBuilder b;
  for (auto& t : j.at("terms")) {
    KontsevichGraph g;
    g.m = t.at("sinks").get<int>();
    if (t.count("terminals")) g.term = sym_parse(t.at("terminals"));
    for (auto& e : t.at("groups"))
      g.w.push_back({(uint8_t)e.at(0).get<int>(), (uint8_t)e.at(1).get<int>()});
    kg_validate(g);
    b.add(g, term_coeff(t));
  }
  return b.take();
}

std::string ms_to_json(const MSum& s) {
  json j;
  j["species"] = "micro";
  j["terms"] = json::array();
  for (auto& [g, c] : s) {
    json t = term_common(c);
    t["d"] = g.d;
    t["sinks"] = g.m;
    if (g.t()) t["terminals"] = sym_list(g.term);
    json groups = json::array();
    for (int l = 0; l < g.b; ++l) {
      json tup = json::array({g.lr[l].first, g.lr[l].second});
      for (int i = 1; i <= g.d - 2; ++i) tup.push_back(g.cas(l, i));
      groups.push_back(tup);
    }
    t["groups"] = groups;
    j["terms"].push_back(t);
  }
  return j.dump(1);
}

MSum ms_from_json(const std::string& text) {
  json j = parse_sum_doc(text, "micro");
  MSumBuilder b;
  for (auto& t : j.at("terms")) {
    MicroGraph g;
    g.d = t.at("d").get<int>();
    g.m = t.at("sinks").get<int>();
    if (t.count("terminals")) g.term = sym_parse(t.at("terminals"));
    g.b = (int)t.at("groups").size();
    int l = 0;
    for (auto& tup : t.at("groups")) {
      if ((int)tup.size() != g.d)
        throw std::runtime_error("micro tuple arity does not match d");
      for (int i = 1; i <= g.d - 2; ++i)
        if (tup.at(1 + i).get<int>() != g.cas(l, i))
          throw std::runtime_error("micro tuple is not in normalized layout");
      g.lr.push_back({(uint8_t)tup.at(0).get<int>(), (uint8_t)tup.at(1).get<int>()});
      ++l;
    }
    mg_validate(g);
    b.add(g, term_coeff(t));
  }
  return b.take();
}

}  // namespace nambu
