#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <string>

namespace qcyc {

using Rational = boost::rational<std::int64_t>;

/// Laurent polynomial in q with exact rational coefficients. Zero
/// coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(Rational c);
  static LaurentPoly monomial(int exponent, Rational c = 1);
  /// q-integer [m]_{q^d} = (q^{dm} - q^{-dm}) / (q^d - q^{-d}); [-m] = -[m].
  static LaurentPoly q_integer(int m, int d = 1);

  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int exponent) const;
  const std::map<int, Rational>& terms() const { return terms_; }
  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly{} - a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// Exact quotient a / b; throws NonExactDivision when b does not divide a.
  static LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(int exponent, Rational c);
  std::map<int, Rational> terms_;
};

}  // namespace qcyc
