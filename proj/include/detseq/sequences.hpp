#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "detseq/exact.hpp"

namespace detseq {

enum class NamedSequence {
  Fibonacci,                  // 0, 1, 1, 2, 3, 5, 8, ...
  Catalan,                    // 1, 1, 2, 5, 14, 42, ...
  CentralBinomial,            // 1, 2, 6, 20, 70, ...
  CatalanShiftedSymplectic,   // 0, 1, 1, 2, 5, 14, 42, ...
  BinomialShiftedSymplectic,  // 0, 1, 2, 6, 20, 70, ...
};

constexpr std::string_view to_string(NamedSequence s) {
  switch (s) {
    case NamedSequence::Fibonacci: return "fibonacci";
    case NamedSequence::Catalan: return "catalan";
    case NamedSequence::CentralBinomial: return "central_binomial";
    case NamedSequence::CatalanShiftedSymplectic: return "catalan_shifted_symplectic";
    case NamedSequence::BinomialShiftedSymplectic: return "binomial_shifted_symplectic";
  }
  return "?";
}

inline NamedSequence parse_named_sequence(std::string_view name) {
  for (auto s : {NamedSequence::Fibonacci, NamedSequence::Catalan, NamedSequence::CentralBinomial,
                 NamedSequence::CatalanShiftedSymplectic, NamedSequence::BinomialShiftedSymplectic}) {
    if (to_string(s) == name) return s;
  }
  throw Error(ErrorKind::MalformedSpec, "unknown named sequence '" + std::string(name) + "'");
}

/// Term-wise transforms that can be layered over any sequence spec.
enum class SequenceTransform {
  Negate,          // -s_i
  AlternateSigns,  // (-1)^i s_i
  InterleaveEven,  // 0, s_0, 0, s_1, ...
  DuplicateTerms,  // 0, s_0, s_0, s_1, s_1, ...
};

constexpr std::string_view to_string(SequenceTransform t) {
  switch (t) {
    case SequenceTransform::Negate: return "negate";
    case SequenceTransform::AlternateSigns: return "alternate_signs";
    case SequenceTransform::InterleaveEven: return "interleave_even";
    case SequenceTransform::DuplicateTerms: return "duplicate_terms";
  }
  return "?";
}

inline SequenceTransform parse_sequence_transform(std::string_view name) {
  for (auto t : {SequenceTransform::Negate, SequenceTransform::AlternateSigns,
                 SequenceTransform::InterleaveEven, SequenceTransform::DuplicateTerms}) {
    if (to_string(t) == name) return t;
  }
  throw Error(ErrorKind::MalformedSpec, "unknown sequence transform '" + std::string(name) + "'");
}

class SequenceSpec;

namespace seq {

struct Explicit {
  std::vector<Scalar> terms;
};

/// s_n = sum_i coeffs[i-1] * s_{n-i} once the initial terms are exhausted.
struct LinearRecurrence {
  std::vector<Scalar> coeffs;
  std::vector<Scalar> initial;
};

struct Periodic {
  std::vector<Scalar> period;
};

struct Geometric {
  Scalar first;
  Scalar ratio;
};

struct Named {
  NamedSequence which;
};

struct Transformed {
  SequenceTransform op;
  std::shared_ptr<const SequenceSpec> base;
};

}  // namespace seq

/// Declarative description of an infinite sequence.
class SequenceSpec {
 public:
  using Variant = std::variant<seq::Explicit, seq::LinearRecurrence, seq::Periodic, seq::Geometric,
                               seq::Named, seq::Transformed>;

  template <typename T>
    requires std::is_constructible_v<Variant, T&&>
  SequenceSpec(T&& v) : v_(std::forward<T>(v)) {  // NOLINT(google-explicit-constructor)
    validate();
  }

  static SequenceSpec explicit_terms(std::vector<Scalar> terms) { return seq::Explicit{std::move(terms)}; }
  static SequenceSpec linear_recurrence(std::vector<Scalar> coeffs, std::vector<Scalar> initial) {
    return seq::LinearRecurrence{std::move(coeffs), std::move(initial)};
  }
  static SequenceSpec periodic(std::vector<Scalar> period) { return seq::Periodic{std::move(period)}; }
  static SequenceSpec constant(const Scalar& value) { return periodic({value}); }
  static SequenceSpec geometric(const Scalar& first, const Scalar& ratio) {
    return seq::Geometric{first, ratio};
  }
  static SequenceSpec named(NamedSequence which) { return seq::Named{which}; }
  static SequenceSpec transformed(SequenceTransform op, const SequenceSpec& base) {
    return seq::Transformed{op, std::make_shared<const SequenceSpec>(base)};
  }

  const Variant& variant() const { return v_; }

 private:
  void validate() const {
    if (const auto* lr = std::get_if<seq::LinearRecurrence>(&v_)) {
      if (lr->coeffs.empty()) throw Error(ErrorKind::MalformedSpec, "linear recurrence of order 0");
      if (lr->initial.size() < lr->coeffs.size()) {
        throw Error(ErrorKind::MalformedSpec, "linear recurrence of order " +
                                                  std::to_string(lr->coeffs.size()) + " needs at least that many initial terms");
      }
    } else if (const auto* p = std::get_if<seq::Periodic>(&v_)) {
      if (p->period.empty()) throw Error(ErrorKind::MalformedSpec, "empty period");
    } else if (const auto* t = std::get_if<seq::Transformed>(&v_)) {
      if (!t->base) throw Error(ErrorKind::MalformedSpec, "transform without a base sequence");
    }
  }

  Variant v_;
};

inline SequenceSpec negated(const SequenceSpec& s) { return SequenceSpec::transformed(SequenceTransform::Negate, s); }
inline SequenceSpec alternated(const SequenceSpec& s) {
  return SequenceSpec::transformed(SequenceTransform::AlternateSigns, s);
}

inline std::vector<Scalar> alternate_signs(std::vector<Scalar> terms) {
  for (std::size_t i = 1; i < terms.size(); i += 2) terms[i] = -terms[i];
  return terms;
}

inline std::vector<Scalar> interleave_even(const std::vector<Scalar>& beta) {
  std::vector<Scalar> out;
  out.reserve(2 * beta.size());
  for (const auto& b : beta) {
    out.emplace_back(0);
    out.push_back(b);
  }
  return out;
}

inline std::vector<Scalar> duplicate_terms(const std::vector<Scalar>& beta) {
  std::vector<Scalar> out;
  if (beta.empty()) return out;
  out.reserve(2 * beta.size());
  out.emplace_back(0);
  for (std::size_t i = 0; i < beta.size(); ++i) {
    out.push_back(beta[i]);
    if (i + 1 < beta.size()) out.push_back(beta[i]);
  }
  return out;
}

namespace detail {

inline std::vector<Scalar> generate_named(NamedSequence which, std::size_t count) {
  std::vector<Scalar> out;
  out.reserve(count);
  switch (which) {
    case NamedSequence::Fibonacci: {
      Integer a = 0, b = 1;
      for (std::size_t i = 0; i < count; ++i) {
        out.emplace_back(a);
        Integer next = a + b;
        a = b;
        b = next;
      }
      break;
    }
    case NamedSequence::Catalan:
    case NamedSequence::CatalanShiftedSymplectic: {
      std::size_t k0 = 0;
      if (which == NamedSequence::CatalanShiftedSymplectic && count > 0) {
        out.emplace_back(0);
        k0 = 1;
      }
      // C_{k+1} = C_k * 2(2k+1) / (k+2)
      Integer c = 1;
      for (std::size_t k = 0; k + k0 < count; ++k) {
        out.emplace_back(c);
        c = c * 2 * (2 * static_cast<long>(k) + 1);
        c /= static_cast<long>(k) + 2;
      }
      break;
    }
    case NamedSequence::CentralBinomial:
    case NamedSequence::BinomialShiftedSymplectic: {
      std::size_t k0 = 0;
      if (which == NamedSequence::BinomialShiftedSymplectic && count > 0) {
        out.emplace_back(0);
        k0 = 1;
      }
      for (std::size_t k = 0; k + k0 < count; ++k) {
        out.emplace_back(binomial(2 * static_cast<long>(k), static_cast<long>(k)));
      }
      break;
    }
  }
  return out;
}

}  // namespace detail

/// First `count` terms of the sequence. Explicit specs cannot be extended
/// past their stored prefix.
inline std::vector<Scalar> generate(const SequenceSpec& spec, std::size_t count) {
  struct Visitor {
    std::size_t count;

    std::vector<Scalar> operator()(const seq::Explicit& e) const {
      if (count > e.terms.size()) {
        throw Error(ErrorKind::InsufficientTerms, "explicit sequence has " + std::to_string(e.terms.size()) +
                                                      " terms, " + std::to_string(count) + " requested");
      }
      return {e.terms.begin(), e.terms.begin() + static_cast<std::ptrdiff_t>(count)};
    }

    std::vector<Scalar> operator()(const seq::LinearRecurrence& lr) const {
      std::vector<Scalar> out(lr.initial.begin(),
                              lr.initial.begin() + static_cast<std::ptrdiff_t>(std::min(count, lr.initial.size())));
      while (out.size() < count) {
        Scalar next = 0;
        const std::size_t n = out.size();
        for (std::size_t i = 1; i <= lr.coeffs.size(); ++i) next += lr.coeffs[i - 1] * out[n - i];
        out.push_back(std::move(next));
      }
      return out;
    }

    std::vector<Scalar> operator()(const seq::Periodic& p) const {
      std::vector<Scalar> out;
      out.reserve(count);
      for (std::size_t i = 0; i < count; ++i) out.push_back(p.period[i % p.period.size()]);
      return out;
    }

    std::vector<Scalar> operator()(const seq::Geometric& g) const {
      std::vector<Scalar> out;
      out.reserve(count);
      Scalar term = g.first;
      for (std::size_t i = 0; i < count; ++i) {
        out.push_back(term);
        term *= g.ratio;
      }
      return out;
    }

    std::vector<Scalar> operator()(const seq::Named& n) const { return detail::generate_named(n.which, count); }

    std::vector<Scalar> operator()(const seq::Transformed& t) const {
      switch (t.op) {
        case SequenceTransform::Negate: {
          auto out = generate(*t.base, count);
          for (auto& v : out) v = -v;
          return out;
        }
        case SequenceTransform::AlternateSigns:
          return alternate_signs(generate(*t.base, count));
        case SequenceTransform::InterleaveEven: {
          auto out = interleave_even(generate(*t.base, (count + 1) / 2));
          out.resize(count);
          return out;
        }
        case SequenceTransform::DuplicateTerms: {
          auto out = duplicate_terms(generate(*t.base, (count + 1) / 2));
          out.resize(count);
          return out;
        }
      }
      return {};
    }
  };
  return std::visit(Visitor{count}, spec.variant());
}

}  // namespace detseq
