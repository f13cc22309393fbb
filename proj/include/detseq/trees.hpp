#pragma once

#include <algorithm>
#include <cstddef>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "detseq/determinants.hpp"
#include "detseq/error.hpp"
#include "detseq/exact.hpp"
#include "detseq/matrices.hpp"
#include "detseq/sequences.hpp"

namespace detseq {

// ---------------------------------------------------------------------------
// Even symplectic unimodular tree

/// One row of the tree: prefix beta_0..beta_{m-1}, the even centers they were
/// chosen around (beta_i = center_i +- 1) and the center for the next term.
struct EvenTreePath {
  std::vector<Integer> prefix;
  std::vector<Integer> centers;
  Integer next_center;

  std::vector<int> choices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < prefix.size(); ++i) out.push_back(prefix[i] > centers[i] ? 1 : -1);
    return out;
  }

  bool operator==(const EvenTreePath&) const = default;
};

/// det P_{alpha,-alpha}(2n) for alpha = (0, beta_0, 0, beta_1, ...).
inline Scalar even_symplectic_det(const std::vector<Integer>& beta) {
  if (beta.empty()) return 1;
  std::vector<Scalar> b(beta.begin(), beta.end());
  const auto alpha = SequenceSpec::explicit_terms(interleave_even(b));
  return det(build(MatrixSpec{mat::GeneralizedPascal{alpha, negated(alpha)}}, 2 * beta.size()));
}

/// The unique even x with det 0 at x and det 1 at x +- 1, one order higher.
/// D(x) = (a x + b)^2 is fitted from x = -1, 0, 1; the answer is -ab.
inline Integer next_even_beta(const std::vector<Integer>& prefix) {
  if (even_symplectic_det(prefix) != Scalar(1)) {
    throw Error(ErrorKind::InvariantViolated, "prefix determinant is not 1");
  }
  auto at = [&](const Integer& x) {
    auto ext = prefix;
    ext.push_back(x);
    return even_symplectic_det(ext);
  };
  const Scalar dm = at(-1), d0 = at(0), dp = at(1);
  const Scalar quad = (dp + dm) / Scalar(2) - d0;
  const Scalar lin = (dp - dm) / Scalar(2);
  if (quad != Scalar(1) || lin * lin != Scalar(4) * quad * d0) {
    throw Error(ErrorKind::QuadraticFitFailed, "D(x) is not (x + b)^2 up to sign: " + quad.to_string() + " x^2 + " +
                                                   lin.to_string() + " x + " + d0.to_string());
  }
  const Scalar center = -lin / Scalar(2);
  if (!center.is_integer() || center.to_integer() % 2 != 0) {
    throw Error(ErrorKind::QuadraticFitFailed, "center " + center.to_string() + " is not an even integer");
  }
  const Integer c = center.to_integer();
  if (at(c) != Scalar(0) || at(c + 1) != Scalar(1) || at(c - 1) != Scalar(1)) {
    throw Error(ErrorKind::QuadraticFitFailed, "determinants around center " + c.get_str() + " are not 0, 1, 1");
  }
  return c;
}

/// All rows with `depth` columns: depth - 1 chosen terms and the next center.
/// beta_0 is root_sign; later terms take +1 before -1. Shared prefixes are
/// expanded once.
inline std::vector<EvenTreePath> enumerate_even_tree(std::size_t depth, int root_sign = 1) {
  if (depth == 0) throw Error(ErrorKind::DomainError, "depth must be positive");
  if (root_sign != 1 && root_sign != -1) throw Error(ErrorKind::DomainError, "root sign must be +1 or -1");
  std::map<std::vector<Integer>, Integer> memo;
  auto center_of = [&](const std::vector<Integer>& prefix) {
    auto it = memo.find(prefix);
    if (it == memo.end()) it = memo.emplace(prefix, next_even_beta(prefix)).first;
    return it->second;
  };
  std::vector<EvenTreePath> level{EvenTreePath{{}, {}, center_of({})}};
  for (std::size_t len = 1; len < depth; ++len) {
    std::vector<EvenTreePath> next;
    for (const auto& node : level) {
      const std::vector<int> signs = len == 1 ? std::vector<int>{root_sign} : std::vector<int>{1, -1};
      for (int eps : signs) {
        EvenTreePath child = node;
        child.prefix.push_back(node.next_center + eps);
        child.centers.push_back(node.next_center);
        child.next_center = center_of(child.prefix);
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return level;
}

/// Text layout: one row per path, entries center_{+1}, center_{-1}, and the
/// final column center_{±}.
inline std::string format_even_tree(const std::vector<EvenTreePath>& rows) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    std::vector<std::string> line;
    const auto ch = row.choices();
    for (std::size_t i = 0; i < row.prefix.size(); ++i) {
      line.push_back(row.centers[i].get_str() + (ch[i] > 0 ? "_{+1}" : "_{-1}"));
    }
    line.push_back(row.next_center.get_str() + "_{±}");
    if (width.size() < line.size()) width.resize(line.size(), 0);
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    cells.push_back(std::move(line));
  }
  std::ostringstream os;
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) os << ' ';
      os << std::setw(static_cast<int>(width[i])) << line[i];
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Sympletric triangles P_{alpha, alpha~}, alpha~_i = (-1)^i alpha_i

inline std::vector<Scalar> sympletric_dets(const SequenceSpec& alpha, std::size_t n_max, std::size_t jobs = 1) {
  return det_sequence(MatrixSpec{mat::GeneralizedPascal{alpha, alternated(alpha)}}, n_max, jobs).terms();
}

/// 0 at order 1, then 1, 2, 4, ...
inline Scalar sympletric_target(std::size_t order) {
  return order == 1 ? Scalar(0) : pow(Scalar(2), static_cast<long>(order) - 2);
}

namespace detail {

inline Scalar sympletric_det(const std::vector<Integer>& alpha) {
  const auto a = SequenceSpec::explicit_terms(std::vector<Scalar>(alpha.begin(), alpha.end()));
  return det(build(MatrixSpec{mat::GeneralizedPascal{a, alternated(a)}}, alpha.size()));
}

}  // namespace detail

/// Every integer x such that prefix + (x) keeps the pattern one order higher,
/// in decreasing order. D(x) is interpolated from x = 0, 1, 2 and checked at 3.
inline std::vector<Integer> sympletric_extensions(const std::vector<Integer>& prefix) {
  if (prefix.size() < 3 || prefix[0] != 0 || prefix[1] != 1 || prefix[2] != 1) {
    throw Error(ErrorKind::PatternViolated, "prefix must start with 0, 1, 1");
  }
  for (std::size_t k = 1; k <= prefix.size(); ++k) {
    const std::vector<Integer> head(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(k));
    if (detail::sympletric_det(head) != sympletric_target(k)) {
      throw Error(ErrorKind::PatternViolated, "determinant at order " + std::to_string(k) + " breaks the pattern");
    }
  }
  auto at = [&](long x) {
    auto ext = prefix;
    ext.emplace_back(x);
    return detail::sympletric_det(ext);
  };
  const Scalar d0 = at(0), d1 = at(1), d2 = at(2), d3 = at(3);
  // D(x) = a x^2 + b x + c through x = 0, 1, 2
  const Scalar c = d0;
  const Scalar a = (d2 - Scalar(2) * d1 + d0) / Scalar(2);
  const Scalar b = d1 - d0 - a;
  if (a * Scalar(9) + b * Scalar(3) + c != d3) {
    throw Error(ErrorKind::DegreeAssertionFailed, "determinant is not quadratic in the appended term");
  }
  const Scalar target = sympletric_target(prefix.size() + 1);
  const Scalar c0 = c - target;
  std::vector<Integer> roots;
  auto keep = [&](const Scalar& r) {
    if (r.is_integer()) roots.push_back(r.to_integer());
  };
  if (a.is_zero()) {
    if (b.is_zero()) {
      if (c0.is_zero()) throw Error(ErrorKind::UnboundedExtensions, "every integer extends the prefix");
    } else {
      keep(-c0 / b);
    }
  } else {
    // Rational roots only: the discriminant must be a rational square.
    const Scalar disc = b * b - Scalar(4) * a * c0;
    if (disc.sign() >= 0) {
      const Integer num = disc.numerator(), den = disc.denominator();
      Integer rn, rd;
      if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        const Scalar root(rn, rd);
        keep((-b + root) / (Scalar(2) * a));
        if (!root.is_zero()) keep((-b - root) / (Scalar(2) * a));
      }
    }
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  for (const auto& r : roots) {
    if (at(r.get_si()) != target) throw Error(ErrorKind::DegreeAssertionFailed, "root " + r.get_str() + " fails recheck");
  }
  return roots;
}

}  // namespace detseq
