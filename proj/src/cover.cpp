#include "transknot/cover.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace transknot {

namespace {

void require_knot(const BraidWord& braid, const char* what) {
  const int components = closure_components(braid);
  if (components != 1) {
    throw BraidError(std::string(what) + " needs a knot; closure has " + std::to_string(components) +
                     " components");
  }
}

// Column entries (row offset from the generator's column, value) for one letter.
LaurentMatrix generator_matrix(int size, int letter) {
  LaurentMatrix m = LaurentMatrix::identity(size);
  const int c = std::abs(letter) - 1;
  const bool positive = letter > 0;
  if (c - 1 >= 0) m.at(c - 1, c) = positive ? LaurentPolynomial::t() : LaurentPolynomial(1);
  m.at(c, c) = positive ? LaurentPolynomial::monomial(-1, 1) : LaurentPolynomial::monomial(-1, -1);
  if (c + 1 < size) m.at(c + 1, c) = positive ? LaurentPolynomial(1) : LaurentPolynomial::monomial(1, -1);
  return m;
}

}  // namespace

LaurentMatrix burau_reduced(const BraidWord& braid) {
  if (braid.strands() < 2) throw BraidError("reduced Burau representation needs at least 2 strands");
  const int size = braid.strands() - 1;
  LaurentMatrix m = LaurentMatrix::identity(size);
  for (int k : braid.letters()) m = m * generator_matrix(size, k);
  return m;
}

std::vector<std::vector<std::complex<double>>> burau_reduced_at(const BraidWord& braid,
                                                                std::complex<double> t) {
  if (braid.strands() < 2) throw BraidError("reduced Burau representation needs at least 2 strands");
  const int size = braid.strands() - 1;
  using Matrix = std::vector<std::vector<std::complex<double>>>;
  Matrix m(size, std::vector<std::complex<double>>(size));
  for (int i = 0; i < size; ++i) m[i][i] = 1;
  for (int k : braid.letters()) {
    // Right multiplication by a generator only rewrites column c.
    const int c = std::abs(k) - 1;
    std::vector<std::complex<double>> column(size);
    for (int i = 0; i < size; ++i) {
      std::complex<double> v = 0;
      if (k > 0) {
        if (c - 1 >= 0) v += m[i][c - 1] * t;
        v += m[i][c] * (-t);
        if (c + 1 < size) v += m[i][c + 1];
      } else {
        if (c - 1 >= 0) v += m[i][c - 1];
        v += m[i][c] * (-1.0 / t);
        if (c + 1 < size) v += m[i][c + 1] / t;
      }
      column[i] = v;
    }
    for (int i = 0; i < size; ++i) m[i][c] = column[i];
  }
  return m;
}

LaurentPolynomial normalize_alexander(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  const long long span = static_cast<long long>(p.max_exponent()) + p.min_exponent();
  if (span % 2 != 0) throw std::domain_error("polynomial " + to_string(p) + " cannot be made symmetric");
  LaurentPolynomial out = p.shifted(static_cast<int>(-span / 2));
  if (out.at_one() < 0) out = -out;
  return out;
}

LaurentPolynomial alexander_polynomial(const BraidWord& braid) {
  require_knot(braid, "Alexander polynomial");
  const int n = braid.strands();
  if (n == 1) return 1;

  const LaurentMatrix b = burau_reduced(braid);
  const LaurentPolynomial det = (b - LaurentMatrix::identity(n - 1)).determinant();
  LaurentPolynomial cyclotomic;
  for (int k = 0; k < n; ++k) cyclotomic += LaurentPolynomial::monomial(1, k);
  LaurentPolynomial delta = normalize_alexander(det.divide_exact(cyclotomic));
  if (delta.at_one() != 1 || delta != delta.mirrored()) {
    throw std::logic_error("Alexander polynomial normalization failed: " + to_string(delta));
  }
  return delta;
}

namespace {

__extension__ using Int = __int128;

Int checked(Int v) {
  constexpr Int limit = static_cast<Int>(1) << 120;
  if (v > limit || v < -limit) throw std::overflow_error("cover homology order overflow");
  return v;
}

// Bareiss determinant over the integers.
Int integer_determinant(std::vector<std::vector<Int>> m) {
  const int size = static_cast<int>(m.size());
  if (size == 0) return 1;
  Int previous = 1;
  bool negate = false;
  for (int k = 0; k < size - 1; ++k) {
    if (m[k][k] == 0) {
      int r = k + 1;
      while (r < size && m[r][k] == 0) ++r;
      if (r == size) return 0;
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        m[i][j] = checked(checked(m[k][k] * m[i][j]) - checked(m[i][k] * m[k][j])) / previous;
      }
      m[i][k] = 0;
    }
    previous = m[k][k];
  }
  return negate ? -m[size - 1][size - 1] : m[size - 1][size - 1];
}

std::vector<std::vector<Int>> multiply(const std::vector<std::vector<Int>>& a,
                                       const std::vector<std::vector<Int>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<Int>> out(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] = checked(out[i][j] + checked(a[i][k] * b[k][j]));
    }
  }
  return out;
}

// Delta evaluated at the companion matrix of 1 + t + ... + t^(n-1). That
// matrix has order n, so negative powers reduce mod n.
Int exact_order(const LaurentPolynomial& delta, int n) {
  const int size = n - 1;
  std::vector<std::vector<Int>> companion(size, std::vector<Int>(size, 0));
  for (int i = 0; i + 1 < size; ++i) companion[i + 1][i] = 1;
  for (int i = 0; i < size; ++i) companion[i][size - 1] = -1;

  std::vector<std::vector<std::vector<Int>>> powers(n);
  powers[0].assign(size, std::vector<Int>(size, 0));
  for (int i = 0; i < size; ++i) powers[0][i][i] = 1;
  for (int k = 1; k < n; ++k) powers[k] = multiply(powers[k - 1], companion);

  std::vector<std::vector<Int>> value(size, std::vector<Int>(size, 0));
  for (auto [e, c] : delta.terms()) {
    const auto& p = powers[((e % n) + n) % n];
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) value[i][j] = checked(value[i][j] + checked(static_cast<Int>(c) * p[i][j]));
    }
  }
  const Int det = integer_determinant(std::move(value));
  return det < 0 ? -det : det;
}

using Real = boost::multiprecision::cpp_bin_float_50;

std::string decimal(Int v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  std::string digits;
  for (; v != 0; v /= 10) digits.insert(digits.begin(), static_cast<char>('0' + std::abs(static_cast<int>(v % 10))));
  return negative ? "-" + digits : digits;
}

Real float_order(const LaurentPolynomial& delta, int n) {
  const Real pi = boost::math::constants::pi<Real>();
  Real product = 1;
  for (int j = 1; j < n; ++j) {
    Real re = 0, im = 0;
    for (auto [e, c] : delta.terms()) {
      const Real angle = 2 * pi * j * e / n;
      re += Real(c) * cos(angle);
      im += Real(c) * sin(angle);
    }
    product *= sqrt(re * re + im * im);
  }
  return product;
}

}  // namespace

std::uint64_t cyclic_cover_homology_order(const LaurentPolynomial& alexander, int n) {
  if (n < 2) throw std::invalid_argument("cover degree must be at least 2");
  if (n > 4096) throw std::invalid_argument("cover degree too large (at most 4096)");
  if (alexander.is_zero()) return 0;

  const Int exact = exact_order(alexander, n);
  const Real approx = float_order(alexander, n);
  const Real rounded = round(approx);
  const Real scale = approx > 1 ? approx : Real(1);
  if (abs(approx - rounded) / scale >= Real("1e-20") || rounded != Real(decimal(exact))) {
    throw std::logic_error("Fox formula: exact and floating evaluations disagree");
  }
  if (exact > static_cast<Int>(UINT64_MAX)) throw std::overflow_error("cover homology order exceeds 64 bits");
  return static_cast<std::uint64_t>(exact);
}

std::uint64_t cyclic_cover_homology_order(const BraidWord& braid, int n) {
  require_knot(braid, "cyclic cover homology");
  if (n < 2) throw std::invalid_argument("cover degree must be at least 2");
  return cyclic_cover_homology_order(alexander_polynomial(braid), n);
}

}  // namespace transknot
