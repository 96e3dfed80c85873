#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ngg {

// Exact rational scalar. Every probability and matrix entry in this library
// is an mpq value; nothing is ever rounded or compared with a tolerance.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
// malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Emits the canonical form with an explicit denominator, e.g. "1/6", "3/1".
std::string rat_to_string(const Rat& r);

}  // namespace ngg
