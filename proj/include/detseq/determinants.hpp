#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "detseq/exact.hpp"
#include "detseq/matrices.hpp"
#include "detseq/polynomial.hpp"

namespace detseq {

namespace detail {

inline std::vector<Integer> integer_entries(const DenseMatrix& m) {
  std::vector<Integer> a;
  a.reserve(m.order() * m.order());
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (const auto& v : m.row(i)) a.push_back(v.numerator());
  }
  return a;
}

inline void divexact(Integer& x, const Integer& d) {
  mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

// Fraction-free (Bareiss) elimination. Pivot: first nonzero entry in the column.
inline Integer bareiss_det(std::vector<Integer> a, std::size_t n) {
  if (n == 0) return 1;
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };
  int sign = 1;
  Integer prev = 1;
  Integer tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && at(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(at(p, j), at(k, j));
      sign = -sign;
    }
    const Integer& pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Integer& lead = at(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& x = at(i, j);
        x *= pivot;
        tmp = lead * at(k, j);
        x -= tmp;
        divexact(x, prev);
      }
    }
    prev = pivot;
  }
  Integer d = at(n - 1, n - 1);
  return sign < 0 ? Integer(-d) : d;
}

inline Scalar gaussian_det(const DenseMatrix& m) {
  const std::size_t n = m.order();
  DenseMatrix a = m;
  Scalar det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(p, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Scalar factor = a(i, k) / a(k, k);
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return det;
}

inline Scalar cofactor_expand(const DenseMatrix& m, std::size_t row, std::vector<bool>& used) {
  const std::size_t n = m.order();
  if (row == n) return 1;
  Scalar acc = 0;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (used[c]) continue;
    if (!m(row, c).is_zero()) {
      used[c] = true;
      const Scalar minor = cofactor_expand(m, row + 1, used);
      used[c] = false;
      if (sign > 0) acc += m(row, c) * minor;
      else acc -= m(row, c) * minor;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace detail

/// Exact determinant. Integer matrices go through fraction-free elimination,
/// everything else through rational Gaussian elimination.
inline Scalar det(const DenseMatrix& m) {
  if (m.is_integer()) return Scalar(detail::bareiss_det(detail::integer_entries(m), m.order()));
  return detail::gaussian_det(m);
}

struct CondensationResult {
  Scalar value;
  /// Set when some interior connected minor vanished and that block was
  /// recomputed by elimination instead.
  bool used_fallback = false;
};

/// Dodgson condensation over connected minors.
inline CondensationResult det_condensation(const DenseMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return {Scalar(1), false};
  bool fallback = false;
  // prev: connected minors of size k-1, cur: size k, both indexed by top-left corner.
  std::vector<Scalar> prev(n * n, Scalar(1));
  std::vector<Scalar> cur(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cur[i * n + j] = m(i, j);
  }
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t width = n - k;  // number of (k+1)-blocks per row
    std::vector<Scalar> next(n * n);
    for (std::size_t i = 0; i < width; ++i) {
      for (std::size_t j = 0; j < width; ++j) {
        const Scalar& interior = prev[(i + 1) * n + (j + 1)];
        if (interior.is_zero()) {
          next[i * n + j] = det(m.block(i, j, k + 1));
          fallback = true;
          continue;
        }
        next[i * n + j] =
            (cur[i * n + j] * cur[(i + 1) * n + (j + 1)] - cur[i * n + (j + 1)] * cur[(i + 1) * n + j]) / interior;
      }
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {cur[0], fallback};
}

/// Brute-force Laplace expansion; a test oracle only.
inline Scalar det_oracle_cofactor(const DenseMatrix& m) {
  if (m.order() > 8) throw Error(ErrorKind::OrderTooLarge, "cofactor oracle is limited to order 8");
  std::vector<bool> used(m.order(), false);
  return detail::cofactor_expand(m, 0, used);
}

/// Exact rank over the rationals.
inline std::size_t rank(const DenseMatrix& m) {
  const std::size_t n = m.order();
  if (m.is_integer()) {
    auto a = detail::integer_entries(m);
    auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };
    std::size_t r = 0;
    Integer prev = 1;
    Integer tmp;
    for (std::size_t c = 0; c < n && r < n; ++c) {
      std::size_t p = r;
      while (p < n && at(p, c) == 0) ++p;
      if (p == n) continue;
      if (p != r) {
        for (std::size_t j = c; j < n; ++j) std::swap(at(p, j), at(r, j));
      }
      const Integer& pivot = at(r, c);
      for (std::size_t i = r + 1; i < n; ++i) {
        const Integer& lead = at(i, c);
        for (std::size_t j = c + 1; j < n; ++j) {
          Integer& x = at(i, j);
          x *= pivot;
          tmp = lead * at(r, j);
          x -= tmp;
          detail::divexact(x, prev);
        }
        at(i, c) = 0;
      }
      prev = pivot;
      ++r;
    }
    return r;
  }
  DenseMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) continue;
    if (p != r) {
      for (std::size_t j = c; j < n; ++j) std::swap(a(p, j), a(r, j));
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c) / a(r, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(r, j);
    }
    ++r;
  }
  return r;
}

/// Nonnegative r with r^2 = det(M) for an integral antisymmetric matrix of even order.
inline Integer sqrt_det_antisymmetric(const DenseMatrix& m) {
  if (!m.is_antisymmetric()) throw Error(ErrorKind::NotAntisymmetric, "matrix is not antisymmetric");
  if (m.order() % 2 != 0) throw Error(ErrorKind::OddOrder, "order " + std::to_string(m.order()) + " is odd");
  if (!m.is_integer()) throw Error(ErrorKind::NotAnInteger, "matrix has non-integer entries");
  return integer_sqrt_exact(det(m));
}

/// det(z Id - M) by the Faddeev-LeVerrier recursion.
inline UniPolynomial characteristic_polynomial(const DenseMatrix& m) {
  const std::size_t n = m.order();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  DenseMatrix acc(n);  // M_k
  for (std::size_t k = 1; k <= n; ++k) {
    DenseMatrix next = m * acc;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    acc = std::move(next);
    const DenseMatrix prod = m * acc;
    Scalar trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += prod(i, i);
    c[n - k] = -trace / Scalar(static_cast<long>(k));
  }
  return UniPolynomial(std::move(c));
}

struct DetSequence {
  FamilySpec family;
  /// (n, det) for n = 1..n_max.
  std::vector<std::pair<std::size_t, Scalar>> values;

  std::vector<Scalar> terms() const {
    std::vector<Scalar> out;
    out.reserve(values.size());
    for (const auto& [n, v] : values) out.push_back(v);
    return out;
  }
};

/// Runs f(0..count-1) on up to `jobs` worker threads; results land at their own index.
template <typename F>
auto parallel_map(std::size_t count, std::size_t jobs, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<R> out(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::min(jobs, count); ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            out[i] = f(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

inline std::size_t default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

inline DetSequence det_sequence(const FamilySpec& spec, std::size_t n_max, std::size_t jobs = 1) {
  if (n_max == 0) throw Error(ErrorKind::DomainError, "n_max must be positive");
  // Built per order: gram_binomial's entries depend on the order itself.
  auto dets = parallel_map(n_max, jobs, [&](std::size_t k) { return det(build(spec, k + 1)); });
  DetSequence seq{spec, {}};
  seq.values.reserve(n_max);
  for (std::size_t k = 0; k < n_max; ++k) seq.values.emplace_back(k + 1, std::move(dets[k]));
  return seq;
}

}  // namespace detseq
