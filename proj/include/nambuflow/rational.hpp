#pragma once
#include <gmpxx.h>
#include <string>
#include <string_view>

namespace nambu {

using Rat = mpq_class;

// Lowest terms, "p" or "p/q" with q > 1.
std::string rat_str(const Rat& q);

// Accepts "p" and "p/q"; throws std::invalid_argument on anything else.
Rat rat_parse(std::string_view s);

inline bool rat_zero(const Rat& q) { return sgn(q) == 0; }

}  // namespace nambu
