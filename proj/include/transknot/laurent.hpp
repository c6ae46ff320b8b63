#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace transknot {

// Integer Laurent polynomial in t. Coefficient arithmetic is checked and
// throws std::overflow_error rather than wrapping.
class LaurentPolynomial {
 public:
  using Coefficient = long long;

  LaurentPolynomial() = default;
  LaurentPolynomial(Coefficient constant);  // NOLINT: integers promote
  static LaurentPolynomial monomial(Coefficient c, int exponent);
  static LaurentPolynomial t() { return monomial(1, 1); }
  static LaurentPolynomial from_coefficients(const std::map<int, Coefficient>& coefficients);

  bool is_zero() const noexcept { return terms_.empty(); }
  // Only meaningful when nonzero.
  int min_exponent() const;
  int max_exponent() const;
  Coefficient coefficient(int exponent) const;
  const std::map<int, Coefficient>& terms() const noexcept { return terms_; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  // Multiplies by t^k.
  LaurentPolynomial shifted(int k) const;
  // p(1/t)
  LaurentPolynomial mirrored() const;

  // Exact quotient in Z[t, 1/t]; throws std::domain_error if b does not
  // divide *this.
  LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

  Coefficient at_one() const;
  Coefficient at_minus_one() const;
  std::complex<double> evaluate(std::complex<double> t) const;

  bool operator==(const LaurentPolynomial&) const = default;

 private:
  void set(int exponent, Coefficient c);

  std::map<int, Coefficient> terms_;  // no zero coefficients stored
};

// "t - 1 + t^-1", highest exponent first; "0" for zero.
std::string to_string(const LaurentPolynomial& p);

// Square matrix over Z[t, 1/t].
class LaurentMatrix {
 public:
  explicit LaurentMatrix(int size = 0) : size_(size), entries_(static_cast<std::size_t>(size) * size) {}
  static LaurentMatrix identity(int size);

  int size() const noexcept { return size_; }
  LaurentPolynomial& at(int row, int col) { return entries_[index(row, col)]; }
  const LaurentPolynomial& at(int row, int col) const { return entries_[index(row, col)]; }

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
  bool operator==(const LaurentMatrix&) const = default;

  // Fraction-free (Bareiss) elimination with exact Laurent division.
  LaurentPolynomial determinant() const;

  std::vector<std::vector<std::complex<double>>> evaluate(std::complex<double> t) const;
  // Entries at t = 1 (all integers).
  std::vector<std::vector<long long>> at_one() const;

 private:
  std::size_t index(int row, int col) const;

  int size_;
  std::vector<LaurentPolynomial> entries_;
};

}  // namespace transknot
