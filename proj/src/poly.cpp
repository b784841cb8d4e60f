#include "grappa/poly.hpp"

namespace grappa {

Poly::Poly(Rat constant) {
  if (constant != 0) c.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rat& coeff, int degree) {
  Poly p;
  if (coeff == 0) return p;
  p.c.assign(degree + 1, Rat(0));
  p.c[degree] = coeff;
  return p;
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c.size())) return Rat(0);
  return c[k];
}

Rat Poly::eval(const Rat& s) const {
  Rat v(0);
  for (size_t i = c.size(); i-- > 0;) v = v * s + c[i];
  return v;
}

Poly Poly::derivative() const {
  Poly d;
  for (size_t i = 1; i < c.size(); ++i) d.c.push_back(Rat(static_cast<long>(i)) * c[i]);
  d.trim();
  return d;
}

Poly Poly::antiderivative() const {
  if (c.empty()) return Poly();
  Poly a;
  a.c.assign(c.size() + 1, Rat(0));
  for (size_t i = 0; i < c.size(); ++i) a.c[i + 1] = c[i] / Rat(static_cast<long>(i + 1));
  a.trim();
  return a;
}

Rat Poly::integral(const Rat& a, const Rat& b) const {
  const Poly f = antiderivative();
  return f.eval(b) - f.eval(a);
}

Poly Poly::flip(const Rat& l) const {
  // Evaluate at l - s via Horner on the reversed argument.
  Poly acc;
  const Poly arg(std::vector<Rat>{l, Rat(-1)});
  for (size_t i = c.size(); i-- > 0;) {
    acc = acc * arg;
    acc = acc + Poly(c[i]);
  }
  return acc;
}

Poly Poly::shift(const Rat& t) const {
  Poly acc;
  const Poly arg(std::vector<Rat>{t, Rat(1)});
  for (size_t i = c.size(); i-- > 0;) {
    acc = acc * arg;
    acc = acc + Poly(c[i]);
  }
  return acc;
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly operator+(const Poly& x, const Poly& y) {
  Poly z;
  z.c.assign(std::max(x.c.size(), y.c.size()), Rat(0));
  for (size_t i = 0; i < x.c.size(); ++i) z.c[i] += x.c[i];
  for (size_t i = 0; i < y.c.size(); ++i) z.c[i] += y.c[i];
  z.trim();
  return z;
}

Poly operator-(const Poly& x, const Poly& y) {
  Poly z;
  z.c.assign(std::max(x.c.size(), y.c.size()), Rat(0));
  for (size_t i = 0; i < x.c.size(); ++i) z.c[i] += x.c[i];
  for (size_t i = 0; i < y.c.size(); ++i) z.c[i] -= y.c[i];
  z.trim();
  return z;
}

Poly operator*(const Poly& x, const Poly& y) {
  if (x.c.empty() || y.c.empty()) return Poly();
  Poly z;
  z.c.assign(x.c.size() + y.c.size() - 1, Rat(0));
  for (size_t i = 0; i < x.c.size(); ++i) {
    if (x.c[i] == 0) continue;
    for (size_t j = 0; j < y.c.size(); ++j) z.c[i + j] += x.c[i] * y.c[j];
  }
  z.trim();
  return z;
}

Poly operator*(const Rat& c, const Poly& x) {
  if (c == 0) return Poly();
  Poly z = x;
  for (auto& v : z.c) v *= c;
  return z;
}

bool operator==(const Poly& x, const Poly& y) { return x.c == y.c; }

}  // namespace grappa
