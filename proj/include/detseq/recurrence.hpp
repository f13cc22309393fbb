#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "detseq/determinants.hpp"
#include "detseq/exact.hpp"
#include "detseq/matrices.hpp"
#include "detseq/polynomial.hpp"
#include "detseq/sequences.hpp"

namespace detseq {

/// w_n = sum_{i=1}^{d} coeffs[i-1] * w_{n - i*step} for every n >= valid_from.
/// Indices are 1-based: w_1 is the first supplied term.
struct RecursionReport {
  std::vector<Scalar> coeffs;
  std::size_t step = 1;
  std::size_t valid_from = 0;
  std::size_t verified_extra = 0;

  std::size_t order() const { return coeffs.size(); }

  /// z^d - sum D_i z^{d-i}
  UniPolynomial char_poly() const {
    const std::size_t d = coeffs.size();
    std::vector<Scalar> c(d + 1);
    c[d] = 1;
    for (std::size_t i = 1; i <= d; ++i) c[d - i] = -coeffs[i - 1];
    return UniPolynomial(std::move(c));
  }

  friend bool operator==(const RecursionReport&, const RecursionReport&) = default;
};

/// A report whose recursion is asserted from the first index where every referenced term exists.
inline RecursionReport make_report(std::vector<Scalar> coeffs, std::size_t step = 1, std::size_t valid_from = 0) {
  if (coeffs.empty()) throw Error(ErrorKind::DomainError, "recursion order must be positive");
  if (step == 0) throw Error(ErrorKind::DomainError, "recursion step must be positive");
  RecursionReport r;
  r.step = step;
  r.valid_from = valid_from == 0 ? coeffs.size() * step + 1 : valid_from;
  r.coeffs = std::move(coeffs);
  return r;
}

/// (d+1) x (d+1) matrix with H(r,c) = w_{r+c+1}.
inline DenseMatrix hankel(const std::vector<Scalar>& w, std::size_t d) {
  if (w.size() < 2 * d + 1) {
    throw Error(ErrorKind::InsufficientTerms, "Hankel matrix of order " + std::to_string(d + 1) + " needs " +
                                                  std::to_string(2 * d + 1) + " terms, got " + std::to_string(w.size()));
  }
  DenseMatrix h(d + 1);
  for (std::size_t r = 0; r <= d; ++r) {
    for (std::size_t c = 0; c <= d; ++c) h(r, c) = w[r + c];
  }
  return h;
}

/// First index n (1-based) where the recursion fails, if any.
inline std::optional<std::size_t> first_violation(const std::vector<Scalar>& w, const RecursionReport& report) {
  const std::size_t d = report.order();
  const std::size_t p = report.step;
  const std::size_t from = std::max(report.valid_from, d * p + 1);
  for (std::size_t n = from; n <= w.size(); ++n) {
    Scalar rhs = 0;
    for (std::size_t i = 1; i <= d; ++i) rhs += report.coeffs[i - 1] * w[n - i * p - 1];
    if (rhs != w[n - 1]) return n;
  }
  return std::nullopt;
}

inline bool verify(const std::vector<Scalar>& w, const RecursionReport& report) {
  return !first_violation(w, report).has_value();
}

namespace detail {

struct AffineSolution {
  bool consistent = false;
  /// rank of the coefficient block A and of the augmented matrix [A | b]
  std::size_t rank_a = 0;
  std::size_t rank_augmented = 0;
  /// A particular solution with every free variable set to zero.
  std::vector<Scalar> x;
};

/// Solves A x = b where each row is (A-row..., b-entry), by exact reduced row echelon form.
inline AffineSolution solve_affine(std::vector<std::vector<Scalar>> rows, std::size_t cols) {
  AffineSolution sol;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c <= cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Scalar inv = Scalar(1) / rows[r][c];
    for (std::size_t j = c; j <= cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Scalar f = rows[i][c];
      for (std::size_t j = c; j <= cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  sol.rank_augmented = r;
  sol.consistent = pivot_cols.empty() || pivot_cols.back() != cols;
  sol.rank_a = sol.consistent ? r : r - 1;
  if (sol.consistent) {
    sol.x.assign(cols, Scalar(0));
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) sol.x[pivot_cols[k]] = rows[k][cols];
  }
  return sol;
}

enum class OrderOutcome { Found, Nonsingular, Degenerate, TooFewTerms, VerifyFailed };

struct OrderAttempt {
  OrderOutcome outcome = OrderOutcome::Nonsingular;
  RecursionReport report;
};

/// Tests one recursion order on the window starting at w_start. For step p the
/// Hankel blocks of every residue class are stacked; classes that vanish on the
/// whole window contribute no rows.
inline OrderAttempt try_order(const std::vector<Scalar>& w, std::size_t step, std::size_t d, std::size_t start,
                              std::size_t min_verify) {
  OrderAttempt attempt;
  std::vector<std::vector<Scalar>> classes(step);
  for (std::size_t c = 0; c < step; ++c) {
    for (std::size_t n = start + c; n <= w.size(); n += step) classes[c].push_back(w[n - 1]);
    if (classes[c].size() < 2 * d + 1 + min_verify) {
      attempt.outcome = OrderOutcome::TooFewTerms;
      return attempt;
    }
  }
  std::vector<std::vector<Scalar>> rows;
  std::size_t extra = classes[0].size();
  for (const auto& u : classes) {
    extra = std::min(extra, u.size() - (2 * d + 1));
    bool all_zero = true;
    for (const auto& v : u) all_zero = all_zero && v.is_zero();
    if (all_zero) continue;
    for (std::size_t r = 0; r <= d; ++r) rows.emplace_back(u.begin() + static_cast<std::ptrdiff_t>(r),
                                                           u.begin() + static_cast<std::ptrdiff_t>(r + d + 1));
  }
  std::vector<Scalar> coeffs(d, Scalar(0));
  if (!rows.empty()) {
    const auto sol = solve_affine(std::move(rows), d);
    if (!sol.consistent) {
      // Full rank means no kernel at all; otherwise every kernel vector has last coordinate 0.
      attempt.outcome = sol.rank_augmented == d + 1 ? OrderOutcome::Nonsingular : OrderOutcome::Degenerate;
      return attempt;
    }
    // Solution is (D_d, ..., D_1).
    for (std::size_t i = 1; i <= d; ++i) coeffs[i - 1] = sol.x[d - i];
  }
  attempt.report = make_report(std::move(coeffs), step, start + d * step);
  attempt.report.verified_extra = extra;
  attempt.outcome = verify(w, attempt.report) ? OrderOutcome::Found : OrderOutcome::VerifyFailed;
  return attempt;
}

}  // namespace detail

/// Minimal-order linear recursion (in steps of `step`) of w from w_start on.
/// Escalates d = 1..d_max; the Hankel kernel is normalized to last coordinate -1
/// and the resulting recursion must hold on every remaining supplied term.
inline RecursionReport detect(const std::vector<Scalar>& w, std::size_t step, std::size_t d_max,
                              std::size_t min_verify = 0, std::size_t start = 1) {
  if (step == 0 || d_max == 0 || start == 0) throw Error(ErrorKind::DomainError, "step, d_max and start must be positive");
  bool degenerate = false;
  for (std::size_t d = 1; d <= d_max; ++d) {
    auto attempt = detail::try_order(w, step, d, start, min_verify);
    switch (attempt.outcome) {
      case detail::OrderOutcome::Found:
        return attempt.report;
      case detail::OrderOutcome::Degenerate:
        degenerate = true;
        break;
      case detail::OrderOutcome::TooFewTerms:
        if (d == 1) {
          throw Error(ErrorKind::InsufficientTerms, std::to_string(w.size()) + " terms cannot support detection with step " +
                                                        std::to_string(step));
        }
        d = d_max;  // stop escalating
        break;
      case detail::OrderOutcome::Nonsingular:
      case detail::OrderOutcome::VerifyFailed:
        break;
    }
  }
  if (degenerate) {
    throw Error(ErrorKind::DegenerateKernel, "singular Hankel matrix whose kernel has last coordinate 0");
  }
  throw Error(ErrorKind::NoRecursionFound, "no recursion of order <= " + std::to_string(d_max));
}

/// Closed-form (D_1, D_2) for two order-2 recurrences with common first term.
inline std::pair<Scalar, Scalar> theorem31_coeffs(const Scalar& g0, const Scalar& a1, const Scalar& b1,
                                                  const Scalar& A1, const Scalar& A2, const Scalar& B1,
                                                  const Scalar& B2) {
  const Scalar d1 = -(A1 * b1 + B1 * a1 - Scalar(2) * (a1 + b1) + g0 * (A1 * B2 + A2 * B1 - (A2 + B2) + A2 * B2));
  const Scalar d2 = -(A2 * g0 + a1 + (Scalar(1) - A1 - A2) * b1) * (B2 * g0 + b1 + (Scalar(1) - B1 - B2) * a1);
  return {d1, d2};
}

/// D_{d-i}^2 == q^{d-2i} D_i^2 for 0 <= i <= d, with D_0 = -1.
inline bool symmetry_check(const RecursionReport& report, const Scalar& q) {
  const long d = static_cast<long>(report.order());
  auto coeff = [&](long i) { return i == 0 ? Scalar(-1) : report.coeffs[static_cast<std::size_t>(i - 1)]; };
  for (long i = 0; i <= d; ++i) {
    const long e = d - 2 * i;
    if (q.is_zero() && e < 0) return false;
    const Scalar lhs = coeff(d - i) * coeff(d - i);
    const Scalar rhs = pow(q, e) * coeff(i) * coeff(i);
    if (lhs != rhs) return false;
  }
  return true;
}

inline constexpr std::size_t kSymmetricOrderTable[] = {1, 2, 5, 14, 41, 122};

struct HarnessReport {
  std::optional<RecursionReport> report;
  std::vector<Scalar> dets;
  std::size_t order_alpha = 0;
  std::size_t order_beta = 0;
  /// C(a+b-2, a-1)
  std::size_t generic_order = 0;
  bool symmetric = false;
  /// Tabulated order for alpha = beta (a <= 6) and the (3^{a-1}+1)/2 guess.
  std::optional<std::size_t> symmetric_table_order;
  std::size_t symmetric_guess = 0;
  /// Set when no recursion was found within the budget.
  bool open_instance = false;
  std::string note;

  bool matches_generic() const { return report && report->order() == generic_order; }
  bool matches_symmetric_table() const {
    return report && symmetric_table_order && report->order() == *symmetric_table_order;
  }
};

/// Guess d, compute the determinants, look for a Hankel kernel and verify
/// the remaining terms, escalating d up to d_guess.
inline HarnessReport conjecture33_harness(const SequenceSpec& alpha, const SequenceSpec& beta, std::size_t d_guess,
                                          std::size_t n_budget, std::size_t min_verify = 2, std::size_t jobs = 1) {
  const auto* ra = std::get_if<seq::LinearRecurrence>(&alpha.variant());
  const auto* rb = std::get_if<seq::LinearRecurrence>(&beta.variant());
  if (!ra || !rb) throw Error(ErrorKind::MalformedSpec, "harness expects two linear_recurrence sequences");

  HarnessReport out;
  out.order_alpha = ra->coeffs.size();
  out.order_beta = rb->coeffs.size();
  out.generic_order =
      binomial(static_cast<long>(out.order_alpha + out.order_beta) - 2, static_cast<long>(out.order_alpha) - 1).get_ui();
  out.symmetric = generate(alpha, n_budget) == generate(beta, n_budget);
  if (out.symmetric) {
    if (out.order_alpha <= std::size(kSymmetricOrderTable)) {
      out.symmetric_table_order = kSymmetricOrderTable[out.order_alpha - 1];
    }
    out.symmetric_guess = Integer((pow(Integer(3), out.order_alpha - 1) + 1) / 2).get_ui();
  }

  out.dets = det_sequence(MatrixSpec{mat::GeneralizedPascal{alpha, beta}}, n_budget, jobs).terms();
  try {
    out.report = detect(out.dets, 1, d_guess, min_verify);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoRecursionFound && e.kind() != ErrorKind::DegenerateKernel &&
        e.kind() != ErrorKind::InsufficientTerms) {
      throw;
    }
    out.open_instance = true;
    out.note = e.what();
  }
  return out;
}

}  // namespace detseq
