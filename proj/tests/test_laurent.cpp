#include <doctest.h>

#include <climits>
#include <random>

#include "transknot/laurent.hpp"

using namespace transknot;
using P = LaurentPolynomial;

namespace {

P random_poly(std::mt19937_64& rng) {
  std::map<int, long long> c;
  const int n = std::uniform_int_distribution<int>(0, 5)(rng);
  for (int i = 0; i < n; ++i) c[std::uniform_int_distribution<int>(-4, 4)(rng)] = std::uniform_int_distribution<int>(-9, 9)(rng);
  return P::from_coefficients(c);
}

}  // namespace

TEST_CASE("printing") {
  const P t = P::t();
  CHECK(to_string(t - 1 + P::monomial(1, -1)) == "t - 1 + t^-1");
  CHECK(to_string(P::monomial(-1, 1) + 3 - P::monomial(1, -1)) == "-t + 3 - t^-1");
  CHECK(to_string(P()) == "0");
  CHECK(to_string(P(-7)) == "-7");
  CHECK(to_string(P::monomial(2, 3)) == "2t^3");
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 500; ++i) {
    const P a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == P());
    CHECK((a * b).at_one() == a.at_one() * b.at_one());
    CHECK((a * b).at_minus_one() == a.at_minus_one() * b.at_minus_one());
    CHECK((a * b).mirrored() == a.mirrored() * b.mirrored());
    if (!b.is_zero()) CHECK((a * b).divide_exact(b) == a);
  }
}

TEST_CASE("exact division") {
  const P t = P::t();
  const P cyclo = 1 + t + t * t;
  CHECK((t * t * t - 1).divide_exact(t - 1) == cyclo);
  CHECK_THROWS_AS((t * t + 1).divide_exact(t - 1), std::domain_error);
  CHECK_THROWS_AS(P(3).divide_exact(P(2)), std::domain_error);
  CHECK_THROWS_AS(t.divide_exact(P()), std::domain_error);
  CHECK(P::monomial(4, -3).divide_exact(P::monomial(2, 5)) == P::monomial(2, -8));
}

TEST_CASE("evaluation") {
  const P p = P::t() - 1 + P::monomial(1, -1);
  CHECK(p.at_one() == 1);
  CHECK(p.at_minus_one() == -3);
  const auto v = p.evaluate({0, 1});
  CHECK(v.real() == doctest::Approx(-1));
  CHECK(v.imag() == doctest::Approx(0).epsilon(1e-12));
}

TEST_CASE("overflow is reported") {
  const P big(LLONG_MAX);
  CHECK_THROWS_AS(big + 1, std::overflow_error);
  CHECK_THROWS_AS(big * 2, std::overflow_error);
  CHECK_THROWS_AS(-P(LLONG_MIN), std::overflow_error);
}

TEST_CASE("matrix determinant") {
  const P t = P::t();
  LaurentMatrix m(2);
  m.at(0, 0) = t;
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  m.at(1, 1) = t;
  CHECK(m.determinant() == t * t - 1);
  LaurentMatrix z(3);
  z.at(1, 0) = 1;
  z.at(0, 1) = 1;
  z.at(2, 2) = t;
  CHECK(z.determinant() == -t);
  CHECK(LaurentMatrix::identity(4).determinant() == P(1));
  CHECK(LaurentMatrix(0).determinant() == P(1));
  CHECK((LaurentMatrix::identity(2) * m) == m);
  CHECK(m.at_one() == std::vector<std::vector<long long>>{{1, 1}, {1, 1}});
}
