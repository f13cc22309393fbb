#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "detseq/determinants.hpp"
#include "detseq/exact.hpp"
#include "detseq/matrices.hpp"
#include "detseq/sequences.hpp"

namespace detseq {

namespace oracle {

/// det of C(i+j+s+t, i+s): prod_{k<s} C(n+k+t,t)/C(k+t,t).
struct Thm11 {
  long s = 0;
  long t = 0;
};

/// det of 1/C(i+s+j+t, i+s).
struct Thm13 {
  long s = 0;
  long t = 0;
};

/// (alpha_0 beta_0)^n for the rank-one driven Pascal rule.
struct Prop14 {
  SequenceSpec alpha;
  SequenceSpec beta;
};

/// (1+x)^{C(n-1,2)} (x+rho+sigma-rho sigma)^{n-1}.
struct Thm15 {
  Scalar rho;
  Scalar sigma;
  Scalar x;
};

/// Order 2n: (1+x)^{2(n-1)^2} (rho+x)^{2n-2}.
struct KrattB {
  Scalar rho;
  Scalar x;
};

/// Order 2n, alpha = (0,1,1,1,...): determinant 1.
struct Prop51Ones {};

/// Order 2n, alpha = (0,1,2,3,...): determinant 1.
struct Prop51Naturals {};

/// alpha = (1,A,A^2,...), beta = (1,B,B^2,...): (A+B-AB)^{n-1}.
struct Ex32Geometric {
  Scalar A;
  Scalar B;
};

/// Order 2n, alpha_k = (A^k - B^k)/(A - B): (A-AB+B)^{2(n-1)}. B = 0 gives (0,1,A,A^2,...).
struct Ex54SymplecticGeometric {
  Scalar A;
  Scalar B;
};

/// 2^{C(n,2)}.
struct Remark52A {
  long k = 0;
};

/// 2^{C(n,2)} prod_{i<n} (k+2i-1) / n!.
struct Remark52B {
  long k = 0;
};

/// Square root of det T_k(2n): prod_{t=1}^{k-1} C(2n+2t,t)/C(2t,t).
struct Thm53Sqrt {
  long k = 0;
};

/// gamma = (1,x,x^2,...): (-u1 l1 + (1-u1 l2-u2 l1) x - u2 l2 x^2)^{n-1} x^{C(n-1,2)}.
struct Prop82Diagonal {
  Scalar u1, u2, l1, l2, x;
};

/// Entries a^{|i-j|}: (1-a^2)^{n-1}.
struct PowerDistance {
  Scalar a;
};

/// u2 = 0: gamma_0 prod_{j=1}^{n-1} (gamma_j - u1 (l1 gamma_{j-1} + l2 gamma_j)).
struct DiagonalDegenerateU2 {
  SequenceSpec gamma;
  Scalar u1, l1, l2;
};

}  // namespace oracle

using OracleFamily =
    std::variant<oracle::Thm11, oracle::Thm13, oracle::Prop14, oracle::Thm15, oracle::KrattB, oracle::Prop51Ones,
                 oracle::Prop51Naturals, oracle::Ex32Geometric, oracle::Ex54SymplecticGeometric, oracle::Remark52A,
                 oracle::Remark52B, oracle::Thm53Sqrt, oracle::Prop82Diagonal, oracle::PowerDistance,
                 oracle::DiagonalDegenerateU2>;

inline std::string_view oracle_name(const OracleFamily& f) {
  struct Names {
    std::string_view operator()(const oracle::Thm11&) const { return "thm11"; }
    std::string_view operator()(const oracle::Thm13&) const { return "thm13"; }
    std::string_view operator()(const oracle::Prop14&) const { return "prop14"; }
    std::string_view operator()(const oracle::Thm15&) const { return "thm15"; }
    std::string_view operator()(const oracle::KrattB&) const { return "krattB"; }
    std::string_view operator()(const oracle::Prop51Ones&) const { return "prop51_ones"; }
    std::string_view operator()(const oracle::Prop51Naturals&) const { return "prop51_naturals"; }
    std::string_view operator()(const oracle::Ex32Geometric&) const { return "ex32_geometric"; }
    std::string_view operator()(const oracle::Ex54SymplecticGeometric&) const { return "ex54_symplectic_geometric"; }
    std::string_view operator()(const oracle::Remark52A&) const { return "remark52_A"; }
    std::string_view operator()(const oracle::Remark52B&) const { return "remark52_B"; }
    std::string_view operator()(const oracle::Thm53Sqrt&) const { return "thm53_sqrt"; }
    std::string_view operator()(const oracle::Prop82Diagonal&) const { return "prop82_diagonal"; }
    std::string_view operator()(const oracle::PowerDistance&) const { return "power_distance"; }
    std::string_view operator()(const oracle::DiagonalDegenerateU2&) const { return "diagonal_degenerate_u2"; }
  };
  return std::visit(Names{}, f);
}

namespace detail {

inline Scalar binom_s(long n, long k) { return Scalar(binomial(n, k, BinomialConvention::Extended)); }

inline long half_choose(long n) { return n * (n - 1) / 2; }

inline SequenceSpec zero_then_ones() { return SequenceSpec::linear_recurrence({Scalar(1)}, {Scalar(0), Scalar(1)}); }

inline SequenceSpec naturals() { return SequenceSpec::linear_recurrence({Scalar(2), Scalar(-1)}, {Scalar(0), Scalar(1)}); }

/// alpha_k = (A^k - B^k)/(A - B), i.e. alpha_k = (A+B) alpha_{k-1} - AB alpha_{k-2} from (0, 1).
inline SequenceSpec lucas_u(const Scalar& A, const Scalar& B) {
  return SequenceSpec::linear_recurrence({A + B, -(A * B)}, {Scalar(0), Scalar(1)});
}

struct OracleEval {
  long n;

  Scalar operator()(const oracle::Thm11& f) const {
    require_st(f.s, f.t);
    Scalar v = 1;
    for (long k = 0; k < f.s; ++k) v *= binom_s(n + k + f.t, f.t) / binom_s(k + f.t, f.t);
    return v;
  }

  Scalar operator()(const oracle::Thm13& f) const {
    require_st(f.s, f.t);
    Scalar denom = 1;
    for (long k = 0; k < n; ++k) denom *= binom_s(2 * k + f.s + f.t, k + f.s) * binom_s(2 * k - 1 + f.s + f.t, k);
    const Scalar sign = half_choose(n) % 2 ? Scalar(-1) : Scalar(1);
    return sign / denom;
  }

  Scalar operator()(const oracle::Prop14& f) const {
    return pow(generate(f.alpha, 1)[0] * generate(f.beta, 1)[0], n);
  }

  Scalar operator()(const oracle::Thm15& f) const {
    return pow(Scalar(1) + f.x, half_choose(n - 1)) * pow(f.x + f.rho + f.sigma - f.rho * f.sigma, n - 1);
  }

  Scalar operator()(const oracle::KrattB& f) const {
    return pow(Scalar(1) + f.x, 2 * (n - 1) * (n - 1)) * pow(f.rho + f.x, 2 * n - 2);
  }

  Scalar operator()(const oracle::Prop51Ones&) const { return 1; }
  Scalar operator()(const oracle::Prop51Naturals&) const { return 1; }

  Scalar operator()(const oracle::Ex32Geometric& f) const { return pow(f.A + f.B - f.A * f.B, n - 1); }

  Scalar operator()(const oracle::Ex54SymplecticGeometric& f) const {
    return pow(f.A - f.A * f.B + f.B, 2 * (n - 1));
  }

  Scalar operator()(const oracle::Remark52A&) const { return pow(Scalar(2), half_choose(n)); }

  Scalar operator()(const oracle::Remark52B& f) const {
    Scalar v = pow(Scalar(2), half_choose(n));
    for (long i = 0; i < n; ++i) v *= Scalar(f.k + 2 * i - 1);
    return v / Scalar(factorial(n));
  }

  Scalar operator()(const oracle::Thm53Sqrt& f) const {
    if (f.k < 0) throw Error(ErrorKind::DomainError, "k must be nonnegative");
    Scalar v = 1;
    for (long t = 1; t <= f.k - 1; ++t) v *= binom_s(2 * n + 2 * t, t) / binom_s(2 * t, t);
    return v;
  }

  Scalar operator()(const oracle::Prop82Diagonal& f) const {
    const Scalar base = -(f.u1 * f.l1) + (Scalar(1) - f.u1 * f.l2 - f.u2 * f.l1) * f.x - f.u2 * f.l2 * f.x * f.x;
    return pow(base, n - 1) * pow(f.x, half_choose(n - 1));
  }

  Scalar operator()(const oracle::PowerDistance& f) const { return pow(Scalar(1) - f.a * f.a, n - 1); }

  Scalar operator()(const oracle::DiagonalDegenerateU2& f) const {
    const auto g = generate(f.gamma, static_cast<std::size_t>(n));
    Scalar v = g[0];
    for (std::size_t j = 1; j < g.size(); ++j) v *= g[j] - f.u1 * (f.l1 * g[j - 1] + f.l2 * g[j]);
    return v;
  }

  static void require_st(long s, long t) {
    if (s < 0 || t < 0) throw Error(ErrorKind::DomainError, "s and t must be nonnegative");
  }
};

}  // namespace detail

/// Closed-form value for parameter n. For the families marked "order 2n"
/// (krattB, prop51_*, ex54_symplectic_geometric, thm53_sqrt) n is half the
/// matrix order.
inline Scalar oracle_det(const OracleFamily& family, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::DomainError, "n must be positive");
  return std::visit(detail::OracleEval{static_cast<long>(n)}, family);
}

/// The builder spec whose determinant the oracle predicts, the matrix order
/// for parameter n, and whether the oracle predicts the square root.
struct Counterpart {
  MatrixSpec spec;
  std::size_t order = 0;
  bool square_root = false;
};

inline Counterpart builder_counterpart(const OracleFamily& family, std::size_t n) {
  struct Visitor {
    std::size_t n;
    Counterpart operator()(const oracle::Thm11& f) const { return {mat::PascalShifted{f.s, f.t}, n}; }
    Counterpart operator()(const oracle::Thm13& f) const { return {mat::InverseBinomial{f.s, f.t}, n}; }
    Counterpart operator()(const oracle::Prop14& f) const { return {mat::Rank1Driven{f.alpha, f.beta}, n}; }
    Counterpart operator()(const oracle::Thm15& f) const { return {mat::KrattenthalerA{f.rho, f.sigma, f.x}, n}; }
    Counterpart operator()(const oracle::KrattB& f) const { return {mat::KrattenthalerB{f.rho, f.x}, 2 * n}; }
    Counterpart operator()(const oracle::Prop51Ones&) const {
      const auto a = detail::zero_then_ones();
      return {mat::GeneralizedPascal{a, negated(a)}, 2 * n};
    }
    Counterpart operator()(const oracle::Prop51Naturals&) const {
      const auto a = detail::naturals();
      return {mat::GeneralizedPascal{a, negated(a)}, 2 * n};
    }
    Counterpart operator()(const oracle::Ex32Geometric& f) const {
      return {mat::GeneralizedPascal{SequenceSpec::geometric(1, f.A), SequenceSpec::geometric(1, f.B)}, n};
    }
    Counterpart operator()(const oracle::Ex54SymplecticGeometric& f) const {
      const auto a = detail::lucas_u(f.A, f.B);
      return {mat::GeneralizedPascal{a, negated(a)}, 2 * n};
    }
    Counterpart operator()(const oracle::Remark52A& f) const { return {mat::TemperleyA{f.k}, n}; }
    Counterpart operator()(const oracle::Remark52B& f) const { return {mat::TemperleyB{f.k}, n}; }
    Counterpart operator()(const oracle::Thm53Sqrt& f) const { return {mat::SymplecticBlock{f.k}, 2 * n, true}; }
    Counterpart operator()(const oracle::Prop82Diagonal& f) const {
      return {mat::DiagonalConstruction{SequenceSpec::geometric(1, f.x), f.u1, f.u2, f.l1, f.l2}, n};
    }
    Counterpart operator()(const oracle::PowerDistance& f) const { return {mat::PowerDistance{f.a}, n}; }
    Counterpart operator()(const oracle::DiagonalDegenerateU2& f) const {
      return {mat::DiagonalConstruction{f.gamma, f.u1, Scalar(0), f.l1, f.l2}, n};
    }
  };
  if (n == 0) throw Error(ErrorKind::DomainError, "n must be positive");
  return std::visit(Visitor{n}, family);
}

/// Engine value for the counterpart: det, or the antisymmetric square root.
inline Scalar engine_value(const Counterpart& c) {
  const auto m = build(c.spec, c.order);
  if (c.square_root) return Scalar(sqrt_det_antisymmetric(m));
  return det(m);
}

// ---------------------------------------------------------------------------
// Relational identities

namespace identity {

/// p(i,j) of P_{alpha,beta} against the binomial closed form.
struct PijClosedForm {
  SequenceSpec alpha;
  SequenceSpec beta;
};

/// det(P_{0,0}(n) + Q(n)) = det(C_Q(n) + Id_n), constant once n > min degree.
struct Prop12 {
  std::vector<mat::GridCoefficient> grid;
};

/// Gram matrix of order n with upper limit n+k-1 has det D_{n,n}(k).
struct Gram {
  long k = 0;
};

/// Rank-one driven entries against the double binomial sum.
struct Prop14Entries {
  SequenceSpec alpha;
  SequenceSpec beta;
};

/// Entries of P_{(0,1,1,...),-(0,1,1,...)} against C(i+j-1,j) - C(i+j-1,j-1).
struct Remark52Entries {};

/// det of the interleaved and duplicated even constructions agree at order 2n.
struct Interleave51 {
  SequenceSpec beta;
};

/// det D~(n) = (lambda/mu)^{C(n,2)} det D(n).
struct Prop81Scaling {
  SequenceSpec gamma;
  Scalar u1, u2, l1, l2;
  Scalar lambda, mu;
};

/// Square roots at order 2n: r_B(n) = 2^{n-1} r_C(n).
struct Ex55Ratio {};

/// det((i+j+k)!) = prod_{i<n} i! (i+k)!.
struct Thm11FactorialForm {
  long k = 0;
};

}  // namespace identity

using IdentityParams =
    std::variant<identity::PijClosedForm, identity::Prop12, identity::Gram, identity::Prop14Entries,
                 identity::Remark52Entries, identity::Interleave51, identity::Prop81Scaling, identity::Ex55Ratio,
                 identity::Thm11FactorialForm>;

inline std::string_view identity_name(const IdentityParams& p) {
  struct Names {
    std::string_view operator()(const identity::PijClosedForm&) const { return "p_ij_closed_form"; }
    std::string_view operator()(const identity::Prop12&) const { return "prop12"; }
    std::string_view operator()(const identity::Gram&) const { return "gram"; }
    std::string_view operator()(const identity::Prop14Entries&) const { return "prop14_entries"; }
    std::string_view operator()(const identity::Remark52Entries&) const { return "remark52_entries"; }
    std::string_view operator()(const identity::Interleave51&) const { return "interleave51"; }
    std::string_view operator()(const identity::Prop81Scaling&) const { return "prop81_scaling"; }
    std::string_view operator()(const identity::Ex55Ratio&) const { return "ex55_ratio"; }
    std::string_view operator()(const identity::Thm11FactorialForm&) const { return "thm11_factorial_form"; }
  };
  return std::visit(Names{}, p);
}

struct IdentityFailure {
  std::size_t n = 0;
  Scalar lhs;
  Scalar rhs;
};

struct IdentityReport {
  std::string id;
  bool holds = true;
  std::optional<IdentityFailure> first_failure;
};

namespace detail {

/// First (lhs, rhs) mismatch between two matrices, if any.
inline std::optional<std::pair<Scalar, Scalar>> first_entry_mismatch(const DenseMatrix& a, const DenseMatrix& b) {
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) {
      if (a(i, j) != b(i, j)) return std::make_pair(a(i, j), b(i, j));
    }
  }
  return std::nullopt;
}

struct IdentityCheck {
  std::size_t n;

  using Result = std::optional<std::pair<Scalar, Scalar>>;

  static Result compare(Scalar lhs, Scalar rhs) {
    if (lhs == rhs) return std::nullopt;
    return std::make_pair(std::move(lhs), std::move(rhs));
  }

  Result operator()(const identity::PijClosedForm& p) const {
    const auto built = build(MatrixSpec{mat::GeneralizedPascal{p.alpha, p.beta}}, n);
    const auto a = generate(p.alpha, n);
    const auto b = generate(p.beta, n);
    DenseMatrix closed(n);
    for (long i = 0; i < static_cast<long>(n); ++i) {
      for (long j = 0; j < static_cast<long>(n); ++j) {
        Scalar v = a[0] * binom_s(i + j, i);
        for (long s = 1; s <= i; ++s) {
          v += (a[static_cast<std::size_t>(s)] - a[static_cast<std::size_t>(s - 1)]) * binom_s(i - s + j, j);
        }
        for (long t = 1; t <= j; ++t) {
          v += (b[static_cast<std::size_t>(t)] - b[static_cast<std::size_t>(t - 1)]) * binom_s(i + j - t, i);
        }
        closed(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
      }
    }
    return first_entry_mismatch(built, closed);
  }

  Result operator()(const identity::Prop12& p) const {
    const auto lhs = det(build(MatrixSpec{mat::PerturbedPascal{p.grid}}, n));
    DenseMatrix c = DenseMatrix::identity(n);
    for (const auto& g : p.grid) {
      if (g.s >= 0 && g.t >= 0 && static_cast<std::size_t>(g.s) < n && static_cast<std::size_t>(g.t) < n) {
        c(static_cast<std::size_t>(g.s), static_cast<std::size_t>(g.t)) += g.value;
      }
    }
    if (auto r = compare(lhs, det(c))) return r;
    // Stabilization: the value at n equals the value at n-1 once n-1 > min degree.
    long deg_x = -1, deg_y = -1;
    for (const auto& g : p.grid) {
      if (g.value.is_zero()) continue;
      deg_x = std::max(deg_x, g.s);
      deg_y = std::max(deg_y, g.t);
    }
    const long mu = std::max(0L, std::min(deg_x, deg_y));
    if (static_cast<long>(n) >= mu + 2) return compare(lhs, det(build(MatrixSpec{mat::PerturbedPascal{p.grid}}, n - 1)));
    return std::nullopt;
  }

  Result operator()(const identity::Gram& g) const {
    const auto lhs = det(build(MatrixSpec{mat::GramBinomial{g.k}}, n));
    const long order = static_cast<long>(n);
    if (g.k < 0) throw Error(ErrorKind::DomainError, "k must be nonnegative");
    return compare(lhs, OracleEval{g.k}(oracle::Thm11{order, order}));
  }

  Result operator()(const identity::Prop14Entries& p) const {
    const auto built = build(MatrixSpec{mat::Rank1Driven{p.alpha, p.beta}}, n);
    const auto a = generate(p.alpha, n);
    const auto b = generate(p.beta, n);
    DenseMatrix closed(n);
    for (long i = 0; i < static_cast<long>(n); ++i) {
      for (long j = 0; j < static_cast<long>(n); ++j) {
        Scalar v = 0;
        for (long s = 0; s <= i; ++s) {
          for (long t = 0; t <= j; ++t) {
            v += a[static_cast<std::size_t>(i - s)] * b[static_cast<std::size_t>(j - t)] * binom_s(s + t, s);
          }
        }
        closed(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
      }
    }
    return first_entry_mismatch(built, closed);
  }

  Result operator()(const identity::Remark52Entries&) const {
    const auto a = zero_then_ones();
    const auto built = build(MatrixSpec{mat::GeneralizedPascal{a, negated(a)}}, n);
    DenseMatrix closed(n);
    for (long i = 0; i < static_cast<long>(n); ++i) {
      for (long j = 0; j < static_cast<long>(n); ++j) {
        closed(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
            binom_s(i + j - 1, j) - binom_s(i + j - 1, j - 1);
      }
    }
    return first_entry_mismatch(built, closed);
  }

  Result operator()(const identity::Interleave51& p) const {
    const auto inter = SequenceSpec::transformed(SequenceTransform::InterleaveEven, p.beta);
    const auto dup = SequenceSpec::transformed(SequenceTransform::DuplicateTerms, p.beta);
    return compare(det(build(MatrixSpec{mat::GeneralizedPascal{inter, negated(inter)}}, 2 * n)),
                   det(build(MatrixSpec{mat::GeneralizedPascal{dup, negated(dup)}}, 2 * n)));
  }

  Result operator()(const identity::Prop81Scaling& p) const {
    if (p.lambda.is_zero() || p.mu.is_zero()) throw Error(ErrorKind::DomainError, "lambda and mu must be invertible");
    const Scalar ratio = p.lambda / p.mu;
    auto g = generate(p.gamma, n);
    for (std::size_t k = 0; k < g.size(); ++k) g[k] *= pow(ratio, static_cast<long>(k));
    const mat::DiagonalConstruction scaled{SequenceSpec::explicit_terms(g), p.lambda * p.u1, p.mu * p.u2,
                                           p.l1 / p.mu, p.l2 / p.lambda};
    const auto lhs = det(build(MatrixSpec{scaled}, n));
    const auto base = det(build(MatrixSpec{mat::DiagonalConstruction{p.gamma, p.u1, p.u2, p.l1, p.l2}}, n));
    return compare(lhs, pow(ratio, half_choose(static_cast<long>(n))) * base);
  }

  Result operator()(const identity::Ex55Ratio&) const {
    const auto c = SequenceSpec::named(NamedSequence::CatalanShiftedSymplectic);
    const auto b = SequenceSpec::named(NamedSequence::BinomialShiftedSymplectic);
    const Scalar rc(sqrt_det_antisymmetric(build(MatrixSpec{mat::GeneralizedPascal{c, negated(c)}}, 2 * n)));
    const Scalar rb(sqrt_det_antisymmetric(build(MatrixSpec{mat::GeneralizedPascal{b, negated(b)}}, 2 * n)));
    return compare(rb, pow(Scalar(2), static_cast<long>(n) - 1) * rc);
  }

  Result operator()(const identity::Thm11FactorialForm& f) const {
    if (f.k < 0) throw Error(ErrorKind::DomainError, "k must be nonnegative");
    DenseMatrix a(n);
    for (long i = 0; i < static_cast<long>(n); ++i) {
      for (long j = 0; j < static_cast<long>(n); ++j) {
        a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Scalar(factorial(i + j + f.k));
      }
    }
    Scalar rhs = 1;
    for (long i = 0; i < static_cast<long>(n); ++i) rhs *= Scalar(Integer(factorial(i) * factorial(i + f.k)));
    return compare(det(a), rhs);
  }
};

}  // namespace detail

/// Checks the identity at every n in [n_min, n_max]; stops at the first failure.
inline IdentityReport verify_identity(const IdentityParams& params, std::size_t n_min, std::size_t n_max) {
  if (n_min == 0 || n_min > n_max) throw Error(ErrorKind::DomainError, "n range must satisfy 1 <= n_min <= n_max");
  IdentityReport report{std::string(identity_name(params)), true, std::nullopt};
  for (std::size_t n = n_min; n <= n_max; ++n) {
    if (auto mismatch = std::visit(detail::IdentityCheck{n}, params)) {
      report.holds = false;
      report.first_failure = IdentityFailure{n, std::move(mismatch->first), std::move(mismatch->second)};
      break;
    }
  }
  return report;
}

}  // namespace detseq
