#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "detseq/banded.hpp"
#include "detseq/determinants.hpp"
#include "detseq/error.hpp"
#include "detseq/exact.hpp"
#include "detseq/matrices.hpp"
#include "detseq/oracles.hpp"
#include "detseq/recurrence.hpp"
#include "detseq/sequences.hpp"
#include "detseq/trees.hpp"

namespace detseq {

// nlohmann::json keeps object keys sorted, so dumps are canonical.
using Json = nlohmann::json;

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Scalars

inline Json to_json(const Scalar& s) { return s.to_string(); }
inline Json to_json(const Integer& z) { return z.get_str(); }

inline Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
  throw Error(ErrorKind::MalformedSpec, "expected a scalar string or integer, got " + j.dump());
}

inline Json to_json(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

inline std::vector<Scalar> scalars_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::MalformedSpec, "expected an array of scalars, got " + j.dump());
  std::vector<Scalar> out;
  for (const auto& e : j) out.push_back(scalar_from_json(e));
  return out;
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::MalformedSpec, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline long long_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) throw Error(ErrorKind::MalformedSpec, std::string("field '") + key + "' must be an integer");
  return static_cast<long>(v.get<long long>());
}

inline long long_field_or(const Json& j, const char* key, long fallback) {
  return j.is_object() && j.contains(key) ? long_field(j, key) : fallback;
}

inline Scalar scalar_field(const Json& j, const char* key) { return scalar_from_json(field(j, key)); }

inline Scalar scalar_field_or(const Json& j, const char* key, const Scalar& fallback) {
  return j.is_object() && j.contains(key) ? scalar_from_json(j.at(key)) : fallback;
}

inline std::string string_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) throw Error(ErrorKind::MalformedSpec, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Sequences: {"kind": ..., payload}; a bare array is shorthand for explicit terms.

inline Json to_json(const SequenceSpec& spec) {
  struct Visitor {
    Json operator()(const seq::Explicit& e) const { return {{"kind", "explicit"}, {"terms", to_json(e.terms)}}; }
    Json operator()(const seq::LinearRecurrence& r) const {
      return {{"kind", "linear_recurrence"}, {"coeffs", to_json(r.coeffs)}, {"initial", to_json(r.initial)}};
    }
    Json operator()(const seq::Periodic& p) const { return {{"kind", "periodic"}, {"period", to_json(p.period)}}; }
    Json operator()(const seq::Geometric& g) const {
      return {{"kind", "geometric"}, {"first", to_json(g.first)}, {"ratio", to_json(g.ratio)}};
    }
    Json operator()(const seq::Named& n) const { return {{"kind", "named"}, {"name", std::string(to_string(n.which))}}; }
    Json operator()(const seq::Transformed& t) const {
      return {{"kind", "transformed"}, {"op", std::string(to_string(t.op))}, {"base", to_json(*t.base)}};
    }
  };
  return std::visit(Visitor{}, spec.variant());
}

inline SequenceSpec sequence_from_json(const Json& j) {
  if (j.is_array()) return SequenceSpec::explicit_terms(scalars_from_json(j));
  const std::string kind = detail::string_field(j, "kind");
  if (kind == "explicit") return SequenceSpec::explicit_terms(scalars_from_json(detail::field(j, "terms")));
  if (kind == "linear_recurrence") {
    return SequenceSpec::linear_recurrence(scalars_from_json(detail::field(j, "coeffs")),
                                           scalars_from_json(detail::field(j, "initial")));
  }
  if (kind == "periodic") return SequenceSpec::periodic(scalars_from_json(detail::field(j, "period")));
  if (kind == "constant") return SequenceSpec::constant(detail::scalar_field(j, "value"));
  if (kind == "geometric") return SequenceSpec::geometric(detail::scalar_field(j, "first"), detail::scalar_field(j, "ratio"));
  if (kind == "named") return SequenceSpec::named(parse_named_sequence(detail::string_field(j, "name")));
  if (kind == "transformed") {
    return SequenceSpec::transformed(parse_sequence_transform(detail::string_field(j, "op")),
                                     sequence_from_json(detail::field(j, "base")));
  }
  throw Error(ErrorKind::MalformedSpec, "unknown sequence kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Matrix families: {"family": name, parameters...}

inline Json to_json(const MatrixSpec& spec) {
  struct Visitor {
    Json operator()(const mat::PascalShifted& p) const { return {{"s", p.s}, {"t", p.t}}; }
    Json operator()(const mat::InverseBinomial& p) const { return {{"s", p.s}, {"t", p.t}}; }
    Json operator()(const mat::GeneralizedPascal& g) const { return {{"alpha", to_json(g.alpha)}, {"beta", to_json(g.beta)}}; }
    Json operator()(const mat::PerturbedPascal& q) const {
      Json grid = Json::array();
      for (const auto& c : q.grid) grid.push_back(Json::array({c.s, c.t, to_json(c.value)}));
      return {{"grid", grid}};
    }
    Json operator()(const mat::GramBinomial& g) const { return {{"k", g.k}}; }
    Json operator()(const mat::Rank1Driven& r) const { return {{"alpha", to_json(r.alpha)}, {"beta", to_json(r.beta)}}; }
    Json operator()(const mat::KrattenthalerA& k) const {
      return {{"rho", to_json(k.rho)}, {"sigma", to_json(k.sigma)}, {"x", to_json(k.x)}};
    }
    Json operator()(const mat::KrattenthalerB& k) const { return {{"rho", to_json(k.rho)}, {"x", to_json(k.x)}}; }
    Json operator()(const mat::TemperleyA& a) const { return {{"k", a.k}}; }
    Json operator()(const mat::TemperleyB& b) const { return {{"k", b.k}}; }
    Json operator()(const mat::SymplecticBlock& t) const { return {{"k", t.k}}; }
    Json operator()(const mat::DiagonalConstruction& d) const {
      return {{"gamma", to_json(d.gamma)}, {"u1", to_json(d.u1)}, {"u2", to_json(d.u2)},
              {"l1", to_json(d.l1)},       {"l2", to_json(d.l2)}};
    }
    Json operator()(const mat::PowerDistance& p) const { return {{"a", to_json(p.a)}}; }
  };
  Json out = std::visit(Visitor{}, spec);
  out["family"] = std::string(family_name(spec));
  return out;
}

inline Json to_json(const BandedPeriodicSpec& spec) {
  Json bands = Json::object();
  for (const auto& [offset, values] : spec.bands) bands[std::to_string(offset)] = to_json(values);
  Json pert = Json::array();
  for (const auto& e : spec.perturbation) pert.push_back(Json::array({e.i, e.j, to_json(e.value)}));
  return {{"family", "banded_periodic"}, {"s", spec.s}, {"t", spec.t}, {"p", spec.p},
          {"bands", bands},              {"perturbation", pert}, {"support", spec.support}};
}

inline Json to_json(const FamilySpec& spec) {
  return std::visit([](const auto& s) { return to_json(s); }, spec);
}

inline std::vector<mat::GridCoefficient> grid_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::MalformedSpec, "grid must be an array of [s, t, value]");
  std::vector<mat::GridCoefficient> grid;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw Error(ErrorKind::MalformedSpec, "grid entries are [s, t, value], got " + e.dump());
    }
    grid.push_back({static_cast<long>(e[0].get<long long>()), static_cast<long>(e[1].get<long long>()),
                    scalar_from_json(e[2])});
  }
  return grid;
}

inline BandedPeriodicSpec banded_from_json(const Json& j) {
  BandedPeriodicSpec spec;
  spec.s = detail::long_field(j, "s");
  spec.t = detail::long_field(j, "t");
  spec.p = detail::long_field_or(j, "p", 1);
  const auto& bands = detail::field(j, "bands");
  if (!bands.is_object()) throw Error(ErrorKind::MalformedSpec, "bands must map offsets to value lists");
  for (const auto& [key, values] : bands.items()) {
    long offset = 0;
    try {
      std::size_t used = 0;
      offset = std::stol(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw Error(ErrorKind::MalformedSpec, "band offset '" + key + "' is not an integer");
    }
    spec.bands[offset] = scalars_from_json(values);
  }
  std::size_t max_index = 0;
  if (j.contains("perturbation")) {
    for (const auto& e : j.at("perturbation")) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
        throw Error(ErrorKind::MalformedSpec, "perturbation entries are [i, j, value], got " + e.dump());
      }
      BandedPeriodicSpec::Entry entry{e[0].get<std::size_t>(), e[1].get<std::size_t>(), scalar_from_json(e[2])};
      max_index = std::max({max_index, entry.i + 1, entry.j + 1});
      spec.perturbation.push_back(std::move(entry));
    }
  }
  spec.support = j.contains("support") ? j.at("support").get<std::size_t>() : max_index;
  spec.validate();
  return spec;
}

inline MatrixSpec matrix_spec_from_json(const Json& j) {
  using namespace detail;
  const std::string family = string_field(j, "family");
  if (family == "pascal_shifted") return mat::PascalShifted{long_field_or(j, "s", 0), long_field_or(j, "t", 0)};
  if (family == "inverse_binomial") return mat::InverseBinomial{long_field_or(j, "s", 0), long_field_or(j, "t", 0)};
  if (family == "generalized_pascal") {
    return mat::GeneralizedPascal{sequence_from_json(field(j, "alpha")), sequence_from_json(field(j, "beta"))};
  }
  if (family == "perturbed_pascal") return mat::PerturbedPascal{grid_from_json(field(j, "grid"))};
  if (family == "gram_binomial") return mat::GramBinomial{long_field(j, "k")};
  if (family == "rank1_driven") {
    return mat::Rank1Driven{sequence_from_json(field(j, "alpha")), sequence_from_json(field(j, "beta"))};
  }
  if (family == "krattenthaler_A") {
    return mat::KrattenthalerA{scalar_field(j, "rho"), scalar_field(j, "sigma"), scalar_field(j, "x")};
  }
  if (family == "krattenthaler_B") return mat::KrattenthalerB{scalar_field(j, "rho"), scalar_field(j, "x")};
  if (family == "temperley_A") return mat::TemperleyA{long_field(j, "k")};
  if (family == "temperley_B") return mat::TemperleyB{long_field(j, "k")};
  if (family == "T_k") return mat::SymplecticBlock{long_field(j, "k")};
  if (family == "diagonal_construction") {
    return mat::DiagonalConstruction{sequence_from_json(field(j, "gamma")), scalar_field_or(j, "u1", 1),
                                     scalar_field_or(j, "u2", 1), scalar_field_or(j, "l1", 1),
                                     scalar_field_or(j, "l2", 1)};
  }
  if (family == "power_distance") return mat::PowerDistance{scalar_field(j, "a")};
  throw Error(ErrorKind::UnsupportedFamily, "unknown matrix family '" + family + "'");
}

inline FamilySpec family_from_json(const Json& j) {
  if (detail::string_field(j, "family") == "banded_periodic") return banded_from_json(j);
  return matrix_spec_from_json(j);
}

// ---------------------------------------------------------------------------
// Results

inline Json to_json(const DenseMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.order(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const DetSequence& seq) {
  Json values = Json::array();
  for (const auto& [n, v] : seq.values) values.push_back(Json::array({n, to_json(v)}));
  return {{"family", to_json(seq.family)}, {"values", values}};
}

inline Json to_json(const RecursionReport& r) {
  return {{"d", r.order()},
          {"coeffs", to_json(r.coeffs)},
          {"step", r.step},
          {"valid_from", r.valid_from},
          {"verified_extra", r.verified_extra}};
}

inline Json to_json(const IdentityReport& r) {
  Json out = {{"id", r.id}, {"holds", r.holds}, {"first_failure", nullptr}};
  if (r.first_failure) {
    out["first_failure"] = {{"n", r.first_failure->n}, {"lhs", to_json(r.first_failure->lhs)},
                            {"rhs", to_json(r.first_failure->rhs)}};
  }
  return out;
}

inline Json to_json(const EvenTreePath& p) {
  Json prefix = Json::array(), centers = Json::array();
  for (const auto& v : p.prefix) prefix.push_back(to_json(v));
  for (const auto& v : p.centers) centers.push_back(to_json(v));
  return {{"choices", p.choices()}, {"prefix", prefix}, {"centers", centers}, {"next_center", to_json(p.next_center)}};
}

inline Json to_json(const HarnessReport& h) {
  Json out = {{"report", h.report ? to_json(*h.report) : Json(nullptr)},
              {"dets", to_json(h.dets)},
              {"order_alpha", h.order_alpha},
              {"order_beta", h.order_beta},
              {"generic_order", h.generic_order},
              {"matches_generic", h.matches_generic()},
              {"symmetric", h.symmetric},
              {"open_instance", h.open_instance},
              {"note", h.note}};
  if (h.symmetric_table_order) {
    out["symmetric_table_order"] = *h.symmetric_table_order;
    out["symmetric_guess"] = h.symmetric_guess;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identity and oracle parameters

inline IdentityParams identity_from_json(std::string_view tag, const Json& p) {
  using namespace detail;
  if (tag == "p_ij_closed_form") {
    return identity::PijClosedForm{sequence_from_json(field(p, "alpha")), sequence_from_json(field(p, "beta"))};
  }
  if (tag == "prop12") return identity::Prop12{grid_from_json(field(p, "grid"))};
  if (tag == "gram") return identity::Gram{long_field(p, "k")};
  if (tag == "prop14_entries") {
    return identity::Prop14Entries{sequence_from_json(field(p, "alpha")), sequence_from_json(field(p, "beta"))};
  }
  if (tag == "remark52_entries") return identity::Remark52Entries{};
  if (tag == "interleave51") return identity::Interleave51{sequence_from_json(field(p, "beta"))};
  if (tag == "prop81_scaling") {
    return identity::Prop81Scaling{sequence_from_json(field(p, "gamma")), scalar_field_or(p, "u1", 1),
                                   scalar_field_or(p, "u2", 1),           scalar_field_or(p, "l1", 1),
                                   scalar_field_or(p, "l2", 1),           scalar_field(p, "lambda"),
                                   scalar_field(p, "mu")};
  }
  if (tag == "ex55_ratio") return identity::Ex55Ratio{};
  if (tag == "thm11_factorial_form") return identity::Thm11FactorialForm{long_field(p, "k")};
  throw Error(ErrorKind::MalformedSpec, "unknown identity '" + std::string(tag) + "'");
}

inline OracleFamily oracle_from_json(std::string_view name, const Json& p) {
  using namespace detail;
  if (name == "thm11") return oracle::Thm11{long_field(p, "s"), long_field(p, "t")};
  if (name == "thm13") return oracle::Thm13{long_field(p, "s"), long_field(p, "t")};
  if (name == "prop14") return oracle::Prop14{sequence_from_json(field(p, "alpha")), sequence_from_json(field(p, "beta"))};
  if (name == "thm15") return oracle::Thm15{scalar_field(p, "rho"), scalar_field(p, "sigma"), scalar_field(p, "x")};
  if (name == "krattB") return oracle::KrattB{scalar_field(p, "rho"), scalar_field(p, "x")};
  if (name == "prop51_ones") return oracle::Prop51Ones{};
  if (name == "prop51_naturals") return oracle::Prop51Naturals{};
  if (name == "ex32_geometric") return oracle::Ex32Geometric{scalar_field(p, "A"), scalar_field(p, "B")};
  if (name == "ex54_symplectic_geometric") {
    return oracle::Ex54SymplecticGeometric{scalar_field(p, "A"), scalar_field_or(p, "B", 0)};
  }
  if (name == "remark52_A") return oracle::Remark52A{long_field(p, "k")};
  if (name == "remark52_B") return oracle::Remark52B{long_field(p, "k")};
  if (name == "thm53_sqrt") return oracle::Thm53Sqrt{long_field(p, "k")};
  if (name == "prop82_diagonal") {
    return oracle::Prop82Diagonal{scalar_field_or(p, "u1", 1), scalar_field_or(p, "u2", 1), scalar_field_or(p, "l1", 1),
                                  scalar_field_or(p, "l2", 1), scalar_field(p, "x")};
  }
  if (name == "power_distance") return oracle::PowerDistance{scalar_field(p, "a")};
  if (name == "diagonal_degenerate_u2") {
    return oracle::DiagonalDegenerateU2{sequence_from_json(field(p, "gamma")), scalar_field_or(p, "u1", 1),
                                        scalar_field_or(p, "l1", 1), scalar_field_or(p, "l2", 1)};
  }
  throw Error(ErrorKind::UnsupportedFamily, "unknown oracle '" + std::string(name) + "'");
}

}  // namespace detseq
