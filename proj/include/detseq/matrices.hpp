#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "detseq/exact.hpp"
#include "detseq/sequences.hpp"

namespace detseq {

/// Square matrix of exact scalars, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t order) : n_(order), a_(order * order) {}

  static DenseMatrix identity(std::size_t order) {
    DenseMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
    return m;
  }

  static DenseMatrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
    DenseMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw Error(ErrorKind::DomainError, "matrix rows must form a square");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t order() const { return n_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  std::span<const Scalar> row(std::size_t i) const { return {a_.data() + i * n_, n_}; }

  bool is_integer() const {
    for (const auto& v : a_) {
      if (!v.is_integer()) return false;
    }
    return true;
  }

  bool is_antisymmetric() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) {
        if ((*this)(i, j) != -(*this)(j, i)) return false;
      }
    }
    return true;
  }

  DenseMatrix transpose() const {
    DenseMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  /// Contiguous square block starting at (row0, col0).
  DenseMatrix block(std::size_t row0, std::size_t col0, std::size_t size) const {
    DenseMatrix b(size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
    }
    return b;
  }

  DenseMatrix leading(std::size_t size) const { return block(0, 0, size); }

  friend DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.n_ != y.n_) throw Error(ErrorKind::DomainError, "order mismatch in matrix sum");
    DenseMatrix r(x.n_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
    return r;
  }

  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.n_ != y.n_) throw Error(ErrorKind::DomainError, "order mismatch in matrix product");
    DenseMatrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i) {
      for (std::size_t k = 0; k < x.n_; ++k) {
        if (x(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < x.n_; ++j) r(i, j) += x(i, k) * y(k, j);
      }
    }
    return r;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> a_;
};

namespace mat {

/// Entries C(i+j+s+t, i+s): the block of the Pascal triangle at offset (s, t).
struct PascalShifted {
  long s = 0;
  long t = 0;
};

/// Entries 1 / C(i+s+j+t, i+s).
struct InverseBinomial {
  long s = 0;
  long t = 0;
};

/// First column alpha, first row beta, interior p(i,j) = p(i-1,j) + p(i,j-1).
struct GeneralizedPascal {
  SequenceSpec alpha;
  SequenceSpec beta;
};

/// One coefficient c_{s,t} of q(x,y) = sum c_{s,t} C(x,s) C(y,t).
struct GridCoefficient {
  long s = 0;
  long t = 0;
  Scalar value;
};

/// P_{0,0}(n) + Q(n) with Q(i,j) = q(i,j); the grid has finite explicit support.
struct PerturbedPascal {
  std::vector<GridCoefficient> grid;
};

/// g(i,j) = sum_{s=0}^{n+k-1} C(s,i) C(s,j) for a matrix of order n.
struct GramBinomial {
  long k = 0;
};

/// a(i,j) = a(i-1,j) + a(i,j-1) + alpha_i beta_j with zero outside the matrix.
struct Rank1Driven {
  SequenceSpec alpha;
  SequenceSpec beta;
};

/// a(i,0) = rho^i, a(0,j) = sigma^j, a(i,j) = a(i-1,j) + a(i,j-1) + x a(i-1,j-1).
struct KrattenthalerA {
  Scalar rho;
  Scalar sigma;
  Scalar x;
};

/// Antisymmetric: b(i,0) = -b(0,i) = rho^{i-1}, same interior rule as KrattenthalerA.
struct KrattenthalerB {
  Scalar rho;
  Scalar x;
};

/// a(i,j) = C(2i+2j+k, i) - C(2i+2j+k, i-1).
struct TemperleyA {
  long k = 0;
};

/// b(i,j) = C(2i+2j+k, i+1) - C(2i+2j+k, i).
struct TemperleyB {
  long k = 0;
};

/// Principal block of the (0,1,1,...) symplectic triangle starting at row/column k.
struct SymplecticBlock {
  long k = 0;
};

/// Prescribed diagonal gamma; d(i,j) = u1 d(i,j-1) + u2 d(i+1,j) above,
/// d(i,j) = l1 d(i-1,j) + l2 d(i,j+1) below.
struct DiagonalConstruction {
  SequenceSpec gamma;
  Scalar u1, u2, l1, l2;
};

/// Entries a^{|i-j|}.
struct PowerDistance {
  Scalar a;
};

}  // namespace mat

using MatrixSpec =
    std::variant<mat::PascalShifted, mat::InverseBinomial, mat::GeneralizedPascal, mat::PerturbedPascal,
                 mat::GramBinomial, mat::Rank1Driven, mat::KrattenthalerA, mat::KrattenthalerB, mat::TemperleyA,
                 mat::TemperleyB, mat::SymplecticBlock, mat::DiagonalConstruction, mat::PowerDistance>;

inline std::string_view family_name(const MatrixSpec& spec) {
  struct Names {
    std::string_view operator()(const mat::PascalShifted&) const { return "pascal_shifted"; }
    std::string_view operator()(const mat::InverseBinomial&) const { return "inverse_binomial"; }
    std::string_view operator()(const mat::GeneralizedPascal&) const { return "generalized_pascal"; }
    std::string_view operator()(const mat::PerturbedPascal&) const { return "perturbed_pascal"; }
    std::string_view operator()(const mat::GramBinomial&) const { return "gram_binomial"; }
    std::string_view operator()(const mat::Rank1Driven&) const { return "rank1_driven"; }
    std::string_view operator()(const mat::KrattenthalerA&) const { return "krattenthaler_A"; }
    std::string_view operator()(const mat::KrattenthalerB&) const { return "krattenthaler_B"; }
    std::string_view operator()(const mat::TemperleyA&) const { return "temperley_A"; }
    std::string_view operator()(const mat::TemperleyB&) const { return "temperley_B"; }
    std::string_view operator()(const mat::SymplecticBlock&) const { return "T_k"; }
    std::string_view operator()(const mat::DiagonalConstruction&) const { return "diagonal_construction"; }
    std::string_view operator()(const mat::PowerDistance&) const { return "power_distance"; }
  };
  return std::visit(Names{}, spec);
}

/// (s,t)-bounded, p-periodic band matrix plus a finite perturbation.
/// bands[o] holds the p values used on diagonal offset o = j - i, indexed by i mod p.
struct BandedPeriodicSpec {
  struct Entry {
    std::size_t i = 0;
    std::size_t j = 0;
    Scalar value;
  };

  long s = 0;
  long t = 0;
  long p = 1;
  std::map<long, std::vector<Scalar>> bands;
  std::vector<Entry> perturbation;
  /// Every perturbation index must be below this bound.
  std::size_t support = 0;

  void validate() const {
    if (s < 0 || t < 0) throw Error(ErrorKind::MalformedSpec, "band widths must be nonnegative");
    if (p < 1) throw Error(ErrorKind::MalformedSpec, "period must be at least 1");
    for (const auto& [offset, values] : bands) {
      if (offset < -s || offset > t) {
        throw Error(ErrorKind::MalformedSpec, "band offset " + std::to_string(offset) + " outside [-s, t]");
      }
      if (values.size() != static_cast<std::size_t>(p)) {
        throw Error(ErrorKind::MalformedSpec, "band offset " + std::to_string(offset) + " needs exactly p values");
      }
    }
    for (const auto& e : perturbation) {
      if (e.i >= support || e.j >= support) {
        throw Error(ErrorKind::DomainError, "perturbation entry (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                                                ") outside declared support " + std::to_string(support));
      }
    }
  }
};

using FamilySpec = std::variant<MatrixSpec, BandedPeriodicSpec>;

namespace detail {

/// Pascal rule fill with the first column and first row given.
inline DenseMatrix pascal_fill(const std::vector<Scalar>& first_col, const std::vector<Scalar>& first_row,
                               std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, 0) = first_col[i];
    m(0, i) = first_row[i];
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) m(i, j) = m(i - 1, j) + m(i, j - 1);
  }
  return m;
}

inline DenseMatrix ones_pascal(std::size_t n) {
  const std::vector<Scalar> ones(n, Scalar(1));
  return pascal_fill(ones, ones, n);
}

inline void require_nonnegative(long v, const char* what) {
  if (v < 0) throw Error(ErrorKind::DomainError, std::string(what) + " must be nonnegative");
}

struct Builder {
  std::size_t n;

  DenseMatrix operator()(const mat::PascalShifted& p) const {
    require_nonnegative(p.s, "s");
    require_nonnegative(p.t, "t");
    const auto big = ones_pascal(n + static_cast<std::size_t>(std::max(p.s, p.t)));
    return offset_block(big, static_cast<std::size_t>(p.s), static_cast<std::size_t>(p.t));
  }

  DenseMatrix operator()(const mat::InverseBinomial& p) const {
    auto m = (*this)(mat::PascalShifted{p.s, p.t});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(1) / m(i, j);
    }
    return m;
  }

  DenseMatrix operator()(const mat::GeneralizedPascal& g) const {
    auto alpha = generate(g.alpha, n);
    auto beta = generate(g.beta, n);
    if (alpha[0] != beta[0]) {
      throw Error(ErrorKind::SpecMismatch, "alpha_0 = " + alpha[0].to_string() + " differs from beta_0 = " +
                                               beta[0].to_string());
    }
    return pascal_fill(alpha, beta, n);
  }

  DenseMatrix operator()(const mat::PerturbedPascal& q) const {
    auto m = ones_pascal(n);
    for (const auto& c : q.grid) {
      if (c.s < 0 || c.t < 0) throw Error(ErrorKind::DomainError, "grid indices must be nonnegative");
      for (std::size_t i = 0; i < n; ++i) {
        const Integer bi = binomial(static_cast<long>(i), c.s);
        if (bi == 0) continue;
        for (std::size_t j = 0; j < n; ++j) m(i, j) += c.value * Scalar(bi * binomial(static_cast<long>(j), c.t));
      }
    }
    return m;
  }

  DenseMatrix operator()(const mat::GramBinomial& g) const {
    require_nonnegative(g.k, "k");
    // Row s of the Pascal table holds C(s, i); accumulate outer products.
    const std::size_t upper = n + static_cast<std::size_t>(g.k) - 1;
    DenseMatrix m(n);
    std::vector<Integer> row(n, 0);
    for (std::size_t s = 0; s <= upper; ++s) {
      for (std::size_t i = std::min(s, n - 1) + 1; i-- > 1;) row[i] += row[i - 1];
      row[0] = 1;
      for (std::size_t i = 0; i < n && i <= s; ++i) {
        for (std::size_t j = 0; j < n && j <= s; ++j) m(i, j) += Scalar(row[i] * row[j]);
      }
    }
    return m;
  }

  DenseMatrix operator()(const mat::Rank1Driven& r) const {
    const auto alpha = generate(r.alpha, n);
    const auto beta = generate(r.beta, n);
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Scalar v = alpha[i] * beta[j];
        if (i > 0) v += m(i - 1, j);
        if (j > 0) v += m(i, j - 1);
        m(i, j) = std::move(v);
      }
    }
    return m;
  }

  DenseMatrix operator()(const mat::KrattenthalerA& k) const {
    DenseMatrix m(n);
    Scalar rp = 1, sp = 1;
    for (std::size_t i = 0; i < n; ++i) {
      m(i, 0) = rp;
      m(0, i) = sp;
      rp *= k.rho;
      sp *= k.sigma;
    }
    m(0, 0) = 1;
    interior_fill(m, k.x);
    return m;
  }

  DenseMatrix operator()(const mat::KrattenthalerB& k) const {
    DenseMatrix m(n);
    Scalar rp = 1;
    for (std::size_t i = 1; i < n; ++i) {
      m(i, 0) = rp;
      m(0, i) = -rp;
      rp *= k.rho;
    }
    interior_fill(m, k.x);
    return m;
  }

  DenseMatrix operator()(const mat::TemperleyA& a) const {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const long top = 2 * static_cast<long>(i + j) + a.k;
        const long li = static_cast<long>(i);
        m(i, j) = Scalar(binomial(top, li, BinomialConvention::Extended) -
                         binomial(top, li - 1, BinomialConvention::Extended));
      }
    }
    return m;
  }

  DenseMatrix operator()(const mat::TemperleyB& b) const {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const long top = 2 * static_cast<long>(i + j) + b.k;
        const long li = static_cast<long>(i);
        m(i, j) = Scalar(binomial(top, li + 1, BinomialConvention::Extended) -
                         binomial(top, li, BinomialConvention::Extended));
      }
    }
    return m;
  }

  DenseMatrix operator()(const mat::SymplecticBlock& t) const {
    require_nonnegative(t.k, "k");
    const std::size_t size = n + static_cast<std::size_t>(t.k);
    std::vector<Scalar> alpha(size, Scalar(1));
    alpha[0] = 0;
    std::vector<Scalar> beta(size, Scalar(-1));
    beta[0] = 0;
    const auto big = pascal_fill(alpha, beta, size);
    return offset_block(big, static_cast<std::size_t>(t.k), static_cast<std::size_t>(t.k));
  }

  DenseMatrix operator()(const mat::DiagonalConstruction& d) const {
    const auto gamma = generate(d.gamma, n);
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = gamma[i];
    for (std::size_t offset = 1; offset < n; ++offset) {
      for (std::size_t i = 0; i + offset < n; ++i) {
        const std::size_t j = i + offset;
        m(i, j) = d.u1 * m(i, j - 1) + d.u2 * m(i + 1, j);
        m(j, i) = d.l1 * m(j - 1, i) + d.l2 * m(j, i + 1);
      }
    }
    return m;
  }

  DenseMatrix operator()(const mat::PowerDistance& p) const {
    DenseMatrix m(n);
    std::vector<Scalar> powers(n);
    Scalar acc = 1;
    for (std::size_t k = 0; k < n; ++k) {
      powers[k] = acc;
      acc *= p.a;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = powers[i > j ? i - j : j - i];
    }
    return m;
  }

 private:
  DenseMatrix offset_block(const DenseMatrix& big, std::size_t row0, std::size_t col0) const {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = big(row0 + i, col0 + j);
    }
    return m;
  }

  static void interior_fill(DenseMatrix& m, const Scalar& x) {
    for (std::size_t i = 1; i < m.order(); ++i) {
      for (std::size_t j = 1; j < m.order(); ++j) m(i, j) = m(i - 1, j) + m(i, j - 1) + x * m(i - 1, j - 1);
    }
  }
};

}  // namespace detail

/// The n x n truncation of the family described by `spec`.
inline DenseMatrix build(const MatrixSpec& spec, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::DomainError, "matrix order must be positive");
  return std::visit(detail::Builder{n}, spec);
}

inline DenseMatrix build_banded(const BandedPeriodicSpec& spec, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::DomainError, "matrix order must be positive");
  spec.validate();
  DenseMatrix m(n);
  const auto p = static_cast<std::size_t>(spec.p);
  for (const auto& [offset, values] : spec.bands) {
    for (std::size_t i = 0; i < n; ++i) {
      const long j = static_cast<long>(i) + offset;
      if (j < 0 || j >= static_cast<long>(n)) continue;
      m(i, static_cast<std::size_t>(j)) = values[i % p];
    }
  }
  for (const auto& e : spec.perturbation) {
    if (e.i < n && e.j < n) m(e.i, e.j) += e.value;
  }
  return m;
}

inline DenseMatrix build(const FamilySpec& spec, std::size_t n) {
  if (const auto* banded = std::get_if<BandedPeriodicSpec>(&spec)) return build_banded(*banded, n);
  return build(std::get<MatrixSpec>(spec), n);
}

}  // namespace detseq
