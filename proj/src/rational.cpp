#include "nambuflow/rational.hpp"

#include <stdexcept>

namespace nambu {

std::string rat_str(const Rat& q) {
  Rat c(q);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto digits = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
  if (!digits(num) || !digits(den) || den.front() == '-')
    throw std::invalid_argument("bad rational: " + std::string(s));
  Rat q(std::string(num) + "/" + std::string(den));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
  q.canonicalize();
  return q;
}

}  // namespace nambu
