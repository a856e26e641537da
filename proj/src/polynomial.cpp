#include "chromhom/polynomial.hpp"

#include <sstream>

namespace chromhom {

namespace {

void append_term(std::ostringstream& out, bool first, const BigInt& c, int exponent, char var) {
  BigInt magnitude = abs(c);
  if (first) {
    if (sgn(c) < 0) out << "-";
  } else {
    out << (sgn(c) < 0 ? " - " : " + ");
  }
  if (exponent == 0) {
    out << magnitude.get_str();
    return;
  }
  if (magnitude != 1) out << magnitude.get_str();
  out << var;
  if (exponent != 1) out << '^' << exponent;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(const BigInt& c) { return monomial(0, c); }

LaurentPolynomial LaurentPolynomial::monomial(int exponent, const BigInt& c) {
  LaurentPolynomial p;
  p.add_term(exponent, c);
  return p;
}

BigInt LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPolynomial::add_term(int exponent, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
  LaurentPolynomial out;
  for (const auto& [e1, c1] : lhs.terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const {
  LaurentPolynomial result = constant(1);
  LaurentPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string LaurentPolynomial::to_string(char var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_term(out, first, c, e, var);
    first = false;
  }
  return out.str();
}

Polynomial::Polynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::monomial(unsigned exponent, const BigInt& c) {
  Polynomial p;
  p.add_term(exponent, c);
  return p;
}

BigInt Polynomial::coefficient(unsigned exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : BigInt(0);
}

void Polynomial::add_term(unsigned exponent, const BigInt& c) {
  if (c == 0) return;
  if (exponent >= coeffs_.size()) coeffs_.resize(exponent + 1);
  coeffs_[exponent] += c;
  trim();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

BigInt Polynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

LaurentPolynomial Polynomial::compose(const LaurentPolynomial& q) const {
  LaurentPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * q + LaurentPolynomial::constant(*it);
  return acc;
}

std::string Polynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t e = coeffs_.size(); e-- > 0;) {
    if (coeffs_[e] == 0) continue;
    append_term(out, first, coeffs_[e], static_cast<int>(e), var);
    first = false;
  }
  return out.str();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace chromhom
