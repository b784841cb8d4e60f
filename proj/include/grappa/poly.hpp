#pragma once

#include <vector>

#include "grappa/rational.hpp"

namespace grappa {

// Polynomial in one variable, coefficients constant-first, kept trimmed.
struct Poly {
  std::vector<Rat> c;

  Poly() = default;
  explicit Poly(Rat constant);
  explicit Poly(std::vector<Rat> coeffs);

  static Poly monomial(const Rat& coeff, int degree);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Rat coeff(int k) const;
  Rat eval(const Rat& s) const;

  Poly derivative() const;
  // Antiderivative with value 0 at 0.
  Poly antiderivative() const;
  Rat integral(const Rat& a, const Rat& b) const;
  // p(l - s).
  Poly flip(const Rat& l) const;
  // p(s + t) as a polynomial in s.
  Poly shift(const Rat& t) const;

  void trim();
};

Poly operator+(const Poly& x, const Poly& y);
Poly operator-(const Poly& x, const Poly& y);
Poly operator*(const Poly& x, const Poly& y);
Poly operator*(const Rat& c, const Poly& x);
bool operator==(const Poly& x, const Poly& y);

}  // namespace grappa
