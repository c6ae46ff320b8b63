#include "transknot/laurent.hpp"

#include <stdexcept>

namespace transknot {

namespace {

using Coefficient = LaurentPolynomial::Coefficient;

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Laurent coefficient overflow");
  return out;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Laurent coefficient overflow");
  return out;
}

Coefficient checked_neg(Coefficient a) { return checked_mul(a, -1); }

int checked_exponent(long long e) {
  if (e > (1 << 28) || e < -(1 << 28)) throw std::overflow_error("Laurent exponent overflow");
  return static_cast<int>(e);
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(Coefficient constant) { set(0, constant); }

LaurentPolynomial LaurentPolynomial::monomial(Coefficient c, int exponent) {
  LaurentPolynomial p;
  p.set(exponent, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::from_coefficients(const std::map<int, Coefficient>& coefficients) {
  LaurentPolynomial p;
  for (auto [e, c] : coefficients) p.set(e, c);
  return p;
}

void LaurentPolynomial::set(int exponent, Coefficient c) {
  if (c == 0) {
    terms_.erase(exponent);
  } else {
    terms_[exponent] = c;
  }
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

LaurentPolynomial::Coefficient LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (auto [e, c] : other.terms_) set(e, checked_add(coefficient(e), c));
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (auto [e, c] : other.terms_) set(e, checked_add(coefficient(e), checked_neg(c)));
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out;
  for (auto [e, c] : terms_) out.terms_[e] = checked_neg(c);
  return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (auto [ea, ca] : a.terms_) {
    for (auto [eb, cb] : b.terms_) {
      const int e = checked_exponent(static_cast<long long>(ea) + eb);
      out.set(e, checked_add(out.coefficient(e), checked_mul(ca, cb)));
    }
  }
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial out;
  for (auto [e, c] : terms_) out.terms_[checked_exponent(static_cast<long long>(e) + k)] = c;
  return out;
}

LaurentPolynomial LaurentPolynomial::mirrored() const {
  LaurentPolynomial out;
  for (auto [e, c] : terms_) out.terms_[-e] = c;
  return out;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  // Strip the unit t^k from both sides; divisor then has a nonzero constant
  // term, so divisibility in Z[t, 1/t] is divisibility in Z[t].
  const int shift = min_exponent() - divisor.min_exponent();
  LaurentPolynomial rem = shifted(-min_exponent());
  const LaurentPolynomial den = divisor.shifted(-divisor.min_exponent());
  const int den_deg = den.max_exponent();
  const Coefficient lead = den.coefficient(den_deg);

  LaurentPolynomial quotient;
  while (!rem.is_zero()) {
    const int deg = rem.max_exponent();
    if (deg < den_deg) throw std::domain_error("polynomial division is not exact");
    const Coefficient c = rem.coefficient(deg);
    if (c % lead != 0) throw std::domain_error("polynomial division is not exact over the integers");
    const LaurentPolynomial term = monomial(c / lead, deg - den_deg);
    quotient += term;
    rem -= term * den;
  }
  return quotient.shifted(shift);
}

LaurentPolynomial::Coefficient LaurentPolynomial::at_one() const {
  Coefficient sum = 0;
  for (auto [e, c] : terms_) sum = checked_add(sum, c);
  return sum;
}

LaurentPolynomial::Coefficient LaurentPolynomial::at_minus_one() const {
  Coefficient sum = 0;
  for (auto [e, c] : terms_) sum = checked_add(sum, (e % 2 == 0) ? c : checked_neg(c));
  return sum;
}

std::complex<double> LaurentPolynomial::evaluate(std::complex<double> t) const {
  std::complex<double> sum = 0;
  for (auto [e, c] : terms_) sum += static_cast<double>(c) * std::pow(t, e);
  return sum;
}

std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto [e, c] = *it;
    const bool negative = c < 0;
    const unsigned long long mag = negative ? 0ULL - static_cast<unsigned long long>(c)
                                            : static_cast<unsigned long long>(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t LaurentMatrix::index(int row, int col) const {
  if (row < 0 || col < 0 || row >= size_ || col >= size_) throw std::out_of_range("matrix index");
  return static_cast<std::size_t>(row) * size_ + col;
}

LaurentMatrix LaurentMatrix::identity(int size) {
  LaurentMatrix m(size);
  for (int i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("matrix size mismatch");
  LaurentMatrix out(a.size_);
  for (int i = 0; i < a.size_; ++i) {
    for (int k = 0; k < a.size_; ++k) {
      const auto& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.size_; ++j) {
        if (!b.at(k, j).is_zero()) out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("matrix size mismatch");
  LaurentMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

LaurentPolynomial LaurentMatrix::determinant() const {
  if (size_ == 0) return 1;
  LaurentMatrix m = *this;
  LaurentPolynomial previous = 1;
  bool negate = false;
  for (int k = 0; k < size_ - 1; ++k) {
    if (m.at(k, k).is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < size_; ++r) {
        if (!m.at(r, k).is_zero()) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return {};
      for (int c = 0; c < size_; ++c) std::swap(m.at(k, c), m.at(swap_row, c));
      negate = !negate;
    }
    for (int i = k + 1; i < size_; ++i) {
      for (int j = k + 1; j < size_; ++j) {
        const LaurentPolynomial num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num.divide_exact(previous);
      }
      m.at(i, k) = LaurentPolynomial();
    }
    previous = m.at(k, k);
  }
  LaurentPolynomial det = m.at(size_ - 1, size_ - 1);
  return negate ? -det : det;
}

std::vector<std::vector<std::complex<double>>> LaurentMatrix::evaluate(std::complex<double> t) const {
  std::vector<std::vector<std::complex<double>>> out(size_, std::vector<std::complex<double>>(size_));
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) out[i][j] = at(i, j).evaluate(t);
  }
  return out;
}

std::vector<std::vector<long long>> LaurentMatrix::at_one() const {
  std::vector<std::vector<long long>> out(size_, std::vector<long long>(size_));
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) out[i][j] = at(i, j).at_one();
  }
  return out;
}

}  // namespace transknot
