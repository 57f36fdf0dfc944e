#include "doctest.h"
#include "qcyc/errors.hpp"
#include "qcyc/laurent.hpp"

using namespace qcyc;

namespace {

LaurentPoly q(int e, Rational c = 1) { return LaurentPoly::monomial(e, c); }

}  // namespace

TEST_CASE("q-integers") {
  CHECK(LaurentPoly::q_integer(1) == q(0));
  CHECK(LaurentPoly::q_integer(2) == q(1) + q(-1));
  CHECK(LaurentPoly::q_integer(3, 2) == q(4) + q(0) + q(-4));
  CHECK(LaurentPoly::q_integer(-2) == -(q(1) + q(-1)));
  CHECK(LaurentPoly::q_integer(0).is_zero());
}

TEST_CASE("arithmetic") {
  const LaurentPoly a = q(1) + q(-1);
  CHECK(a * a == q(2) + q(0, 2) + q(-2));
  CHECK((a - a).is_zero());
  CHECK((a * q(3)).min_degree() == 2);
  CHECK((a * q(3)).max_degree() == 4);
  CHECK(LaurentPoly::constant(Rational(1, 2)).coefficient(0) == Rational(1, 2));
  CHECK(a.coefficient(5) == Rational(0));
  CHECK(q(2, -3).to_string() == "-3*q^2");
}

TEST_CASE("exact division") {
  // [4]/[2] = q^2 + q^-2
  CHECK(LaurentPoly::divide_exact(LaurentPoly::q_integer(4), LaurentPoly::q_integer(2)) == q(2) + q(-2));
  CHECK(LaurentPoly::divide_exact(LaurentPoly::q_integer(-2), LaurentPoly::q_integer(2)) == q(0, -1));
  CHECK(LaurentPoly::divide_exact(LaurentPoly{}, LaurentPoly::q_integer(3)).is_zero());
  CHECK_THROWS_AS(LaurentPoly::divide_exact(LaurentPoly::q_integer(3), LaurentPoly::q_integer(2)),
                  NonExactDivision);
  CHECK_THROWS(LaurentPoly::divide_exact(q(1), LaurentPoly{}));
  for (int m = 1; m <= 6; ++m) {
    for (int k = 1; k <= 4; ++k) {
      // [mk] / [m] = [k]_{q^m}
      CHECK(LaurentPoly::divide_exact(LaurentPoly::q_integer(m * k), LaurentPoly::q_integer(m)) ==
            LaurentPoly::q_integer(k, m));
    }
  }
}
