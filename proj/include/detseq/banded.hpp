#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "detseq/determinants.hpp"
#include "detseq/error.hpp"
#include "detseq/exact.hpp"
#include "detseq/matrices.hpp"
#include "detseq/recurrence.hpp"
#include "detseq/sequences.hpp"

namespace detseq {

/// Six-state transfer matrix for the constant pentadiagonal case; a..e are the
/// band values at offsets -2..2.
inline DenseMatrix transfer_matrix_22(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
                                      const Scalar& e) {
  const Scalar z = 0;
  return DenseMatrix::from_rows({
      {c, -b, a, z, z, z},
      {d, z, z, -b, a, z},
      {z, d, z, -c, z, a},
      {e, z, z, z, z, z},
      {z, e, z, z, z, z},
      {z, z, z, e, z, z},
  });
}

/// C(s+t, s): the number of boundary states after repeated last-row expansion.
inline std::size_t recursion_order_bound(long s, long t) {
  if (s < 0 || t < 0 || s + t < 1) throw Error(ErrorKind::DomainError, "need s, t >= 0 and s + t >= 1");
  return binomial(s + t, s).get_ui();
}

/// Smallest budget that lets detection reach the proven bound with five spare
/// terms per residue class, after the perturbation has been passed.
inline std::size_t banded_budget(const BandedPeriodicSpec& spec) {
  const std::size_t p = static_cast<std::size_t>(spec.p);
  const std::size_t bound = spec.s + spec.t == 0 ? 1 : recursion_order_bound(spec.s, spec.t);
  return spec.support + p * (2 * bound + 1 + 5 + 2);
}

namespace detail {

/// Runs detect from start = 1, moving the window forward by one period whenever
/// the early terms do not yet follow a recursion.
inline RecursionReport detect_moving_start(const std::vector<Scalar>& w, std::size_t step, std::size_t d_max,
                                           std::size_t min_verify) {
  for (std::size_t start = 1;; start += step) {
    try {
      return detect(w, step, d_max, min_verify, start);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InsufficientTerms) {
        throw Error(ErrorKind::NoRecursionFound, "no recursion of order <= " + std::to_string(d_max) + " within " +
                                                     std::to_string(w.size()) + " terms");
      }
      if (e.kind() != ErrorKind::NoRecursionFound && e.kind() != ErrorKind::DegenerateKernel) throw;
    }
  }
}

}  // namespace detail

/// Recursion det A(n) = sum C_i det A(n - i p) of order at most C(s+t, s).
inline RecursionReport detect_banded_recursion(const BandedPeriodicSpec& spec, std::size_t n_budget,
                                               std::size_t jobs = 1) {
  spec.validate();
  const std::size_t bound = spec.s + spec.t == 0 ? 1 : recursion_order_bound(spec.s, spec.t);
  const auto w = det_sequence(FamilySpec{spec}, n_budget, jobs).terms();
  return detail::detect_moving_start(w, static_cast<std::size_t>(spec.p), bound, 5);
}

struct DiagonalRecursionReport {
  RecursionReport report;
  /// Set when a geometric diagonal (1, x, x^2, ...) was rescaled to a constant
  /// one; the recursion then describes x^{-C(n,2)} det D(n).
  std::optional<Scalar> rescaled_by;
  /// Squared symmetry C_{d-i}^2 = rho^{d-2i} C_i^2, when a candidate rho is given.
  std::optional<bool> symmetric;
};

/// Determinants of the diagonal construction that detection actually runs on.
/// A geometric gamma with ratio x != 0 is traded for the constant gamma_0 with
/// parameters (u1, x u2, l1 / x, l2); the determinants change by x^{-C(n,2)}.
struct DiagonalView {
  mat::DiagonalConstruction spec;
  std::size_t period = 1;
  std::optional<Scalar> rescaled_by;
};

inline DiagonalView diagonal_view(const SequenceSpec& gamma, const Scalar& u1, const Scalar& u2, const Scalar& l1,
                                  const Scalar& l2) {
  if (const auto* p = std::get_if<seq::Periodic>(&gamma.variant())) {
    return {mat::DiagonalConstruction{gamma, u1, u2, l1, l2}, p->period.size(), std::nullopt};
  }
  if (const auto* g = std::get_if<seq::Geometric>(&gamma.variant())) {
    if (g->ratio.is_zero()) throw Error(ErrorKind::DomainError, "geometric diagonal needs a nonzero ratio");
    const Scalar& x = g->ratio;
    return {mat::DiagonalConstruction{SequenceSpec::constant(g->first), u1, x * u2, l1 / x, l2}, 1, x};
  }
  throw Error(ErrorKind::MalformedSpec, "diagonal recursion detection needs a periodic or geometric gamma");
}

/// Recursion d(n) = sum C_i d(n - i p) for a p-periodic diagonal. d_max starts
/// at d_start and doubles up to d_limit while no recursion is found.
inline DiagonalRecursionReport detect_diagonal_recursion(const SequenceSpec& gamma, const Scalar& u1, const Scalar& u2,
                                                         const Scalar& l1, const Scalar& l2, std::size_t n_budget,
                                                         std::optional<Scalar> rho = std::nullopt,
                                                         std::size_t min_verify = 6, std::size_t jobs = 1) {
  const auto view = diagonal_view(gamma, u1, u2, l1, l2);
  const auto w = det_sequence(FamilySpec{MatrixSpec{view.spec}}, n_budget, jobs).terms();
  const std::size_t d_limit = std::max<std::size_t>(1, (n_budget / view.period) / 2);
  std::size_t d_max = std::min<std::size_t>(4, d_limit);
  for (;;) {
    try {
      DiagonalRecursionReport out{detail::detect_moving_start(w, view.period, d_max, min_verify), view.rescaled_by,
                                  std::nullopt};
      if (rho) out.symmetric = symmetry_check(out.report, *rho);
      return out;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoRecursionFound || d_max >= d_limit) throw;
      d_max = std::min(2 * d_max, d_limit);
    }
  }
}

}  // namespace detseq
