#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "momentrange/errors.hpp"
#include "momentrange/linear_algebra.hpp"
#include "momentrange/polynomial.hpp"
#include "momentrange/rational.hpp"
#include "../support/oracles.hpp"

using namespace momentrange;
using momentrange::testing::RationalGen;

TEST_CASE("rational canonical form and arithmetic") {
  const Rational r(6, -8);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 4);
  CHECK(r.str() == "-3/4");
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(-7, 3).abs() == Rational(7, 3));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational::pow2(-3) == Rational(1, 8));
  CHECK(Rational::pow2(4) == Rational(16));
  CHECK(Rational(3, 7) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Rational(0).inverse(), Error);
}

TEST_CASE("rational literals") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("+6/8") == Rational(3, 4));
  CHECK(Rational::parse("0.1") == Rational(1, 10));
  CHECK(Rational::parse("-2.125") == Rational(-17, 8));
  CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");

  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1."), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  try {
    Rational::parse("12x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("rational decimal rendering") {
  CHECK(Rational(11259, 214).decimal() == "52.6121495327");
  CHECK(Rational(1, 2).decimal() == "0.5");
  CHECK(Rational(-24).decimal() == "-24");
}

TEST_CASE("rational addition is exactly invertible") {
  RationalGen gen(11);
  for (int i = 0; i < 200; ++i) {
    const Rational a = gen.next(1000000, 999999);
    const Rational b = gen.next(1000000, 999999);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
}

TEST_CASE("polynomial basics") {
  const Polynomial cube = Polynomial::monomial(Rational(1), 3);
  CHECK(cube.derivative() == Polynomial({Rational(0), Rational(0), Rational(3)}));
  CHECK(Polynomial::constant(Rational(5)).derivative().is_zero());
  CHECK(Polynomial({Rational(0), Rational(2), Rational(-2)})(Rational(1, 2)) == Rational(1, 2));
  CHECK(Polynomial({Rational(1), Rational(0), Rational(0)}).degree() == 0);
  CHECK(Polynomial().degree() == -1);
  CHECK(Polynomial({Rational(27), Rational(-192), Rational(210)}).str() == "27 - 192*x + 210*x^2");
  CHECK(Polynomial({Rational(0), Rational(1)}).reflected() == Polynomial({Rational(1), Rational(-1)}));
}

TEST_CASE("poly_moment_integral") {
  const Polynomial x2 = Polynomial::monomial(Rational(1), 2);
  CHECK(poly_moment_integral(x2, 1, Rational(0), Rational(1)) == Rational(1, 4));
  CHECK(poly_moment_integral(Polynomial({Rational(-1), Rational(2)}), 0, Rational(0), Rational(1)) == Rational(0));
  CHECK(poly_moment_integral(Polynomial::constant(Rational(1)), 1, Rational(0), Rational(1, 2)) == Rational(1, 8));

  RationalGen gen(5);
  for (int i = 0; i < 50; ++i) {
    const Polynomial p = gen.polynomial(6);
    const std::size_t k = gen.index(0, 5);
    const Rational t = gen.inside(Rational(0), Rational(1));
    CHECK(poly_moment_integral(p, k, Rational(0), t) + poly_moment_integral(p, k, t, Rational(1)) ==
          poly_moment_integral(p, k, Rational(0), Rational(1)));
  }
}

TEST_CASE("derivative is linear") {
  RationalGen gen(6);
  for (int i = 0; i < 50; ++i) {
    const Polynomial p = gen.polynomial(7);
    const Polynomial q = gen.polynomial(7);
    CHECK((p + q).derivative() == p.derivative() + q.derivative());
  }
}

TEST_CASE("polynomial division and gcd") {
  // (x - 1)^2 (x + 2) and (x - 1)(x + 3)
  const Polynomial a = Polynomial({Rational(-1), Rational(1)}) * Polynomial({Rational(-1), Rational(1)}) *
                       Polynomial({Rational(2), Rational(1)});
  const Polynomial b = Polynomial({Rational(-1), Rational(1)}) * Polynomial({Rational(3), Rational(1)});
  CHECK(poly_gcd(a, b) == Polynomial({Rational(-1), Rational(1)}));
  Polynomial rem;
  const Polynomial q = poly_divide(a, b, &rem);
  CHECK(q * b + rem == a);
  CHECK(rem.degree() < b.degree());
}

TEST_CASE("solve_linear_exact") {
  SUBCASE("identity") {
    const auto x = solve_linear_exact(LinearSystem(Matrix::identity(2), {Rational(3), Rational(5)}));
    CHECK(x == std::vector<Rational>{Rational(3), Rational(5)});
  }
  SUBCASE("Hilbert 3x3") {
    const auto x = solve_linear_exact(LinearSystem(Matrix::hilbert(3), {Rational(1), Rational(2), Rational(3)}));
    CHECK(x == std::vector<Rational>{Rational(27), Rational(-192), Rational(210)});
  }
  SUBCASE("equal rows are singular") {
    const Matrix m{{Rational(1), Rational(2)}, {Rational(1), Rational(2)}};
    CHECK_THROWS_AS(solve_linear_exact(LinearSystem(m, {Rational(1), Rational(1)})), SingularSystem);
  }
  SUBCASE("zero leading pivot needs a row swap") {
    const Matrix m{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    CHECK(solve_linear_exact(LinearSystem(m, {Rational(4), Rational(9)})) ==
          std::vector<Rational>{Rational(9), Rational(4)});
  }
  CHECK_THROWS_AS(LinearSystem(Matrix(2, 3), {Rational(1), Rational(2)}), Error);
}

TEST_CASE("determinant_exact") {
  CHECK(determinant_exact(Matrix::hilbert(3)) == Rational(1, 2160));
  CHECK(momentrange::testing::cofactor_determinant(Matrix::hilbert(3)) == Rational(1, 2160));
  CHECK(determinant_exact(Matrix::identity(5)) == Rational(1));
  const Matrix repeated{{Rational(1), Rational(2), Rational(3)},
                        {Rational(4), Rational(5), Rational(6)},
                        {Rational(1), Rational(2), Rational(3)}};
  CHECK(determinant_exact(repeated) == Rational(0));
  const Matrix swap{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  CHECK(determinant_exact(swap) == Rational(-1));
}

TEST_CASE("random systems: determinant against cofactors, solve by substitution") {
  RationalGen gen(2024);
  int nonsingular = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = gen.index(1, 6);
    Matrix m(n, n);
    std::vector<Rational> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      rhs[i] = gen.next();
      // Small integer entries make singular draws likely enough to exercise both paths.
      for (std::size_t j = 0; j < n; ++j) m(i, j) = trial % 3 == 0 ? Rational(static_cast<long>(gen.index(0, 2))) : gen.next();
    }
    const Rational det = determinant_exact(m);
    CHECK(det == momentrange::testing::cofactor_determinant(m));
    if (det.is_zero()) {
      CHECK_THROWS_AS(solve_linear_exact(LinearSystem(m, rhs)), SingularSystem);
    } else {
      ++nonsingular;
      CHECK(m * solve_linear_exact(LinearSystem(m, rhs)) == rhs);
    }
  }
  CHECK(nonsingular > 60);
}

TEST_CASE("rank_exact") {
  const Matrix m{{Rational(1), Rational(2), Rational(3)},
                 {Rational(2), Rational(4), Rational(6)},
                 {Rational(0), Rational(1), Rational(1)}};
  CHECK(rank_exact(m) == 2);
  CHECK(rank_exact(Matrix(3, 2)) == 0);
  CHECK(rank_exact(Matrix::hilbert(4)) == 4);
}
