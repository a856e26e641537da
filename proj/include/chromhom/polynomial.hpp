#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace chromhom {

using BigInt = mpz_class;

/// Laurent polynomial in one variable with exact integer coefficients.
/// Only nonzero terms are stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  static LaurentPolynomial constant(const BigInt& c);
  static LaurentPolynomial monomial(int exponent, const BigInt& c = 1);

  const std::map<int, BigInt>& terms() const noexcept { return terms_; }
  BigInt coefficient(int exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(int exponent, const BigInt& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
    return lhs += rhs;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  LaurentPolynomial pow(unsigned exponent) const;

  /// "q + q^2", "1 - 2q^-1", "0".
  std::string to_string(char var = 'q') const;

 private:
  std::map<int, BigInt> terms_;
};

/// Ordinary integer polynomial, coefficients indexed by power. Trailing zeros
/// are trimmed so that equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coefficients);

  static Polynomial monomial(unsigned exponent, const BigInt& c = 1);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt coefficient(unsigned exponent) const;
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  void add_term(unsigned exponent, const BigInt& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  BigInt evaluate(const BigInt& x) const;
  /// Composition p(q) where q is a Laurent polynomial.
  LaurentPolynomial compose(const LaurentPolynomial& q) const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

}  // namespace chromhom
