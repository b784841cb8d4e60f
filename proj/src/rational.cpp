#include "grappa/rational.hpp"

#include <cctype>

namespace grappa {

namespace {

bool is_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(const std::string& raw) {
  const auto fail = [] { throw ParseError("malformed rational"); };
  std::string text = raw;
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  size_t start = 0;
  if (!text.empty() && text[0] == '-') start = 1;
  const size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_digits(text, start, text.size())) fail();
    return Rat(text);
  }
  if (!is_digits(text, start, slash)) fail();
  if (!is_digits(text, slash + 1, text.size())) fail();
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0) fail();
  if (r.get_den() == 0) fail();
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& x) {
  Rat r(x);
  r.canonicalize();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

uint64_t fnv1a(const std::string& data, uint64_t seed) {
  uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace grappa
