#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "detseq/exact.hpp"

namespace detseq {

/// Univariate polynomial over Scalar. coeffs()[i] is the coefficient of z^i;
/// trailing zeros are never stored, so the zero polynomial has no coefficients.
class UniPolynomial {
 public:
  UniPolynomial() = default;
  explicit UniPolynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPolynomial monomial(long degree, const Scalar& coeff = 1) {
    std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1);
    c.back() = coeff;
    return UniPolynomial(std::move(c));
  }

  const std::vector<Scalar>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == Scalar(1); }

  Scalar coeff(long i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<std::size_t>(i)];
  }

  Scalar operator()(const Scalar& z) const {
    Scalar acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  friend UniPolynomial operator+(const UniPolynomial& a, const UniPolynomial& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPolynomial(std::move(c));
  }

  friend UniPolynomial operator-(const UniPolynomial& a, const UniPolynomial& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UniPolynomial(std::move(c));
  }

  friend UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPolynomial(std::move(c));
  }

  friend bool operator==(const UniPolynomial&, const UniPolynomial&) = default;

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
      const Scalar& a = c_[static_cast<std::size_t>(i)];
      if (a.is_zero()) continue;
      if (!out.empty()) out += a.sign() < 0 ? " - " : " + ";
      else if (a.sign() < 0) out += "-";
      const Scalar mag = abs(a);
      if (i == 0 || mag != Scalar(1)) out += mag.to_string();
      if (i > 0) out += (i == 1) ? "z" : "z^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

/// Euclidean division: returns (quotient, remainder) with deg(remainder) < deg(divisor).
inline std::pair<UniPolynomial, UniPolynomial> divmod(const UniPolynomial& dividend,
                                                      const UniPolynomial& divisor) {
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Scalar> rem = dividend.coeffs();
  const long dd = divisor.degree();
  if (dividend.degree() < dd) return {UniPolynomial{}, dividend};
  std::vector<Scalar> quot(static_cast<std::size_t>(dividend.degree() - dd) + 1);
  const Scalar lead = divisor.leading();
  for (long k = dividend.degree() - dd; k >= 0; --k) {
    const Scalar factor = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = factor;
    if (factor.is_zero()) continue;
    for (long j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= factor * divisor.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {UniPolynomial(std::move(quot)), UniPolynomial(std::move(rem))};
}

inline bool divides(const UniPolynomial& divisor, const UniPolynomial& dividend) {
  return divmod(dividend, divisor).second.is_zero();
}

}  // namespace detseq
