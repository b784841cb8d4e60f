#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grappa {

using Rat = mpq_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts "p/q" with q > 0 or a bare integer string, both with an optional
// leading sign on p. Anything else throws ParseError("malformed rational").
Rat parse_rat(const std::string& text);

// Canonical form "p/q" with q >= 1 and gcd(p, q) = 1.
std::string rat_to_string(const Rat& x);

inline Rat rat_of(long n, long d = 1) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

uint64_t fnv1a(const std::string& data, uint64_t seed = 1469598103934665603ull);

}  // namespace grappa
