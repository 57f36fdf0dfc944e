#include "qcyc/laurent.hpp"

#include <sstream>

#include "qcyc/errors.hpp"

namespace qcyc {

LaurentPoly LaurentPoly::constant(Rational c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(int exponent, Rational c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::q_integer(int m, int d) {
  LaurentPoly p;
  const int sign = m < 0 ? -1 : 1;
  const int k = m < 0 ? -m : m;
  for (int t = 0; t < k; ++t) p.add_term(d * (k - 1 - 2 * t), sign);
  return p;
}

Rational LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(int exponent, Rational c) {
  if (c.numerator() == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.numerator() == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw NonExactDivision("division by the zero Laurent polynomial");
  LaurentPoly rem = a;
  LaurentPoly quot;
  const int lead_b = b.max_degree();
  const Rational lead_c = b.terms_.rbegin()->second;
  const int span_b = lead_b - b.min_degree();
  while (!rem.is_zero() && rem.max_degree() - rem.min_degree() >= span_b) {
    const int e = rem.max_degree() - lead_b;
    const Rational c = rem.terms_.rbegin()->second / lead_c;
    quot.add_term(e, c);
    rem -= monomial(e, c) * b;
  }
  if (!rem.is_zero()) {
    throw NonExactDivision(a.to_string() + " is not divisible by " + b.to_string());
  }
  return quot;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c.numerator() < 0 ? " - " : " + ");
    else if (c.numerator() < 0) os << "-";
    first = false;
    const Rational mag = c.numerator() < 0 ? -c : c;
    const bool unit = mag.numerator() == 1 && mag.denominator() == 1;
    if (!unit || e == 0) {
      os << mag.numerator();
      if (mag.denominator() != 1) os << "/" << mag.denominator();
    }
    if (e != 0) {
      if (!unit) os << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace qcyc
