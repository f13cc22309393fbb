#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "detseq/detseq.hpp"

namespace detseq::testing {

inline std::vector<Scalar> ints(std::initializer_list<long> values) {
  return {values.begin(), values.end()};
}

inline Scalar S(const char* text) { return Scalar::parse(text); }

inline DenseMatrix matrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Scalar>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return DenseMatrix::from_rows(r);
}

/// Leibniz formula over all permutations; shares no code with the library engines.
inline Scalar leibniz_det(const DenseMatrix& m) {
  const std::size_t n = m.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Scalar term = 1;
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m(i, perm[i]);
    if (inversions % 2) total -= term;
    else total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline DenseMatrix random_integer_matrix(std::mt19937& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  }
  return m;
}

inline long random_int(std::mt19937& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

#define EXPECT_DETSEQ_ERROR(stmt, expected_kind)                                   \
  do {                                                                             \
    try {                                                                          \
      stmt;                                                                        \
      ADD_FAILURE() << "expected " << ::detseq::to_string(expected_kind);          \
    } catch (const ::detseq::Error& e) {                                           \
      EXPECT_EQ(e.kind(), expected_kind) << e.what();                              \
    }                                                                              \
  } while (0)

}  // namespace detseq::testing
