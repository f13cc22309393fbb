#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "detseq/error.hpp"

namespace detseq {

using Integer = mpz_class;

/// Exact rational number. Always canonical: lowest terms, positive
/// denominator. Division by zero raises ErrorKind::DivisionByZero instead of
/// trapping inside GMP.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : q_(v) {}            // NOLINT(google-explicit-constructor)
  Scalar(long v) : q_(v) {}           // NOLINT(google-explicit-constructor)
  Scalar(unsigned long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long long v) : q_(Integer(std::to_string(v))) {}  // NOLINT
  Scalar(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)

  Scalar(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  static Scalar from_mpq(mpq_class q) {
    q.canonicalize();
    Scalar s;
    s.q_ = std::move(q);
    return s;
  }

  /// Parses "p" or "p/q" with optional leading sign on p.
  static Scalar parse(std::string_view text) {
    auto fail = [&] {
      throw Error(ErrorKind::ParseError, "not a rational literal: '" + std::string(text) + "'");
    };
    auto valid_int = [](std::string_view s) {
      std::size_t i = 0;
      if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
      }
      return true;
    };
    auto strip_plus = [](std::string_view s) {
      return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      if (!valid_int(text)) fail();
      return Scalar(Integer(std::string(strip_plus(text))));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') fail();
    return Scalar(Integer(std::string(strip_plus(num))), Integer(std::string(den)));
  }

  const mpq_class& raw() const { return q_; }
  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  Integer to_integer() const {
    if (!is_integer()) throw Error(ErrorKind::NotAnInteger, to_string());
    return q_.get_num();
  }

  /// Canonical "p/q" form; the denominator is omitted when it is 1.
  std::string to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Scalar operator-() const { return from_mpq(-q_); }

  Scalar& operator+=(const Scalar& o) {
    q_ += o.q_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    q_ -= o.q_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    q_ *= o.q_;
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division of " + to_string() + " by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  mpq_class q_{0};
};

inline Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

/// Integer power; negative exponents invert (0 to a negative power is an error).
inline Scalar pow(const Scalar& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw Error(ErrorKind::DivisionByZero, "0 raised to a negative power");
    return Scalar(1) / pow(base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Scalar(num, den);
}

inline Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline Integer factorial(long n) {
  if (n < 0) throw Error(ErrorKind::DomainError, "factorial of negative integer");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

enum class BinomialConvention {
  Standard,
  /// Standard, plus C(-1,-1) = 1 (and C(-1,0) = 1, C(k,-1) = 0 for k >= 0).
  Extended,
};

/// Binomial coefficient for arbitrary integers. For n < 0 and k >= 0 the
/// usual generalization C(n,k) = (-1)^k C(k-n-1,k) applies.
inline Integer binomial(long n, long k, BinomialConvention convention = BinomialConvention::Standard) {
  if (convention == BinomialConvention::Extended) {
    if (n < -1 && k < -1) {
      throw Error(ErrorKind::UndefinedBinomial,
                  "C(" + std::to_string(n) + "," + std::to_string(k) + ") has no extended value");
    }
    if (n == -1 && k == -1) return 1;
  }
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

/// Exact square root: returns r >= 0 with r*r == v.
inline Integer integer_sqrt_exact(const Integer& v) {
  if (v < 0) throw Error(ErrorKind::NegativeInput, v.get_str() + " is negative");
  Integer root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t());
  if (rem != 0) throw Error(ErrorKind::NotAPerfectSquare, v.get_str() + " is not a perfect square");
  return root;
}

inline Integer integer_sqrt_exact(const Scalar& v) {
  if (v.sign() < 0) throw Error(ErrorKind::NegativeInput, v.to_string() + " is negative");
  return integer_sqrt_exact(v.to_integer());
}

}  // namespace detseq
