#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "detseq/detseq.hpp"

using namespace detseq;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kMalformed = 2;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::MalformedSpec, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Inline JSON, @path, or a bare path to a JSON file.
Json load_json(const std::string& arg) {
  if (arg.empty()) throw Error(ErrorKind::MalformedSpec, "empty JSON argument");
  if (arg[0] == '@') return parse_json(read_file(arg.substr(1)));
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && std::string("{[\"-0123456789").find(arg[first]) != std::string::npos) {
    return parse_json(arg);
  }
  return parse_json(read_file(arg));
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InsufficientTerms:
    case ErrorKind::NoRecursionFound:
    case ErrorKind::DegenerateKernel:
    case ErrorKind::InvariantViolated:
    case ErrorKind::QuadraticFitFailed:
    case ErrorKind::PatternViolated:
    case ErrorKind::DegreeAssertionFailed:
    case ErrorKind::UnboundedExtensions:
      return kFailed;
    default:
      return kMalformed;
  }
}

// ---------------------------------------------------------------------------
// Golden fixtures

/// Products like -2^30*3^10*59^2; a bare integer or rational is allowed too.
Scalar eval_product(const std::string& text) {
  std::string body = text;
  Scalar sign = 1;
  if (!body.empty() && body[0] == '-') {
    sign = -1;
    body.erase(0, 1);
  }
  Scalar acc = 1;
  std::stringstream factors(body);
  std::string factor;
  while (std::getline(factors, factor, '*')) {
    const auto caret = factor.find('^');
    if (caret == std::string::npos) {
      acc *= Scalar::parse(factor);
    } else {
      acc *= pow(Scalar::parse(factor.substr(0, caret)), std::stol(factor.substr(caret + 1)));
    }
  }
  return sign * acc;
}

std::vector<std::vector<Scalar>> numeric_fixture(const std::filesystem::path& path) {
  std::vector<std::vector<Scalar>> rows;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::vector<Scalar> row;
    for (std::string f; fields >> f;) row.push_back(eval_product(f));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_rows(const std::vector<std::vector<Scalar>>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i].to_string();
    os << '\n';
  }
  return os.str();
}

int compare_numeric(const std::vector<std::vector<Scalar>>& got, const std::filesystem::path& fixture) {
  const auto want = numeric_fixture(fixture);
  std::cout << render_rows(got);
  int bad = 0;
  for (std::size_t r = 0; r < std::max(got.size(), want.size()); ++r) {
    if (r < got.size() && r < want.size() && got[r] == want[r]) continue;
    ++bad;
    std::cerr << "row " << r + 1 << ": expected "
              << (r < want.size() ? render_rows({want[r]}) : std::string("<missing>\n")) << "          got "
              << (r < got.size() ? render_rows({got[r]}) : std::string("<missing>\n"));
  }
  if (bad) std::cerr << bad << " mismatched rows against " << fixture.string() << '\n';
  return bad ? kFailed : kOk;
}

int compare_text(const std::string& got, const std::filesystem::path& fixture) {
  const std::string want = read_file(fixture);
  std::cout << got;
  if (got == want) return kOk;
  std::istringstream g(got), w(want);
  std::string gl, wl;
  for (std::size_t line = 1;; ++line) {
    const bool hg = static_cast<bool>(std::getline(g, gl));
    const bool hw = static_cast<bool>(std::getline(w, wl));
    if (!hg && !hw) break;
    if (hg != hw || gl != wl) {
      std::cerr << "line " << line << ": expected '" << (hw ? wl : "<missing>") << "' got '" << (hg ? gl : "<missing>")
                << "'\n";
    }
  }
  std::cerr << "output differs from " << fixture.string() << '\n';
  return kFailed;
}

std::vector<std::vector<Scalar>> table_central_binomial(std::size_t jobs) {
  const auto a = SequenceSpec::named(NamedSequence::CentralBinomial);
  const MatrixSpec spec{mat::GeneralizedPascal{a, a}};
  auto rows = parallel_map(36, jobs, [&](std::size_t k) {
    const auto m = build(spec, k + 1);
    return std::vector<Scalar>{Scalar(static_cast<long>(k + 1)), det(m), Scalar(static_cast<long>(rank(m)))};
  });
  return rows;
}

std::vector<std::vector<Scalar>> table_dk(std::size_t jobs) {
  return parallel_map(6, jobs, [](std::size_t n) {
    std::vector<Scalar> row{Scalar(static_cast<long>(n))};
    for (long k = 0; k <= 4; ++k) {
      row.push_back(n == 0 ? Scalar(1) : Scalar(sqrt_det_antisymmetric(build(MatrixSpec{mat::SymplecticBlock{k}}, 2 * n))));
    }
    return row;
  });
}

std::vector<std::vector<Scalar>> table_catalan_roots(std::size_t jobs) {
  const auto c = SequenceSpec::named(NamedSequence::CatalanShiftedSymplectic);
  const auto b = SequenceSpec::named(NamedSequence::BinomialShiftedSymplectic);
  return parallel_map(10, jobs, [&](std::size_t k) {
    const std::size_t order = 2 * (k + 1);
    return std::vector<Scalar>{Scalar(static_cast<long>(k + 1)),
                               Scalar(sqrt_det_antisymmetric(build(MatrixSpec{mat::GeneralizedPascal{c, negated(c)}}, order))),
                               Scalar(sqrt_det_antisymmetric(build(MatrixSpec{mat::GeneralizedPascal{b, negated(b)}}, order)))};
  });
}

/// Grows (0, 1, 1) four times, larger extension first, and prints the last
/// pair of extensions as center±radius.
std::string table_sympletric() {
  std::vector<std::vector<Integer>> level{{0, 1, 1}};
  for (int step = 0; step < 4; ++step) {
    std::vector<std::vector<Integer>> next;
    for (const auto& prefix : level) {
      for (const auto& x : sympletric_extensions(prefix)) {
        auto child = prefix;
        child.push_back(x);
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  std::ostringstream os;
  for (const auto& prefix : level) {
    const auto ext = sympletric_extensions(prefix);
    if (ext.size() != 2) {
      throw Error(ErrorKind::PatternViolated, "expected two extensions, found " + std::to_string(ext.size()));
    }
    for (const auto& v : prefix) os << v.get_str() << ' ';
    const Integer center = (ext[0] + ext[1]) / 2, radius = (ext[0] - ext[1]) / 2;
    os << center.get_str() << "±" << radius.get_str() << '\n';
  }
  return os.str();
}

int reproduce(const std::string& table, const std::filesystem::path& dir, std::size_t jobs) {
  const auto fixture = dir / (table + ".txt");
  if (table == "4.2") return compare_numeric(table_central_binomial(jobs), fixture);
  if (table == "D_k-table") return compare_numeric(table_dk(jobs), fixture);
  if (table == "5.5") return compare_numeric(table_catalan_roots(jobs), fixture);
  if (table == "5.1.3") return compare_text(format_even_tree(enumerate_even_tree(6, 1)), fixture);
  if (table == "6-table") return compare_text(table_sympletric(), fixture);
  throw Error(ErrorKind::MalformedSpec, "unknown table '" + table + "'");
}

// ---------------------------------------------------------------------------

std::vector<Scalar> terms_or_spec(const std::string& terms, const std::string& spec, std::size_t n_max,
                                  std::size_t jobs) {
  if (!terms.empty()) return scalars_from_json(load_json(terms));
  if (spec.empty()) throw Error(ErrorKind::MalformedSpec, "need --terms or --spec");
  return det_sequence(family_from_json(load_json(spec)), n_max, jobs).terms();
}

Json oracle_check(const OracleFamily& f, std::size_t n_min, std::size_t n_max, bool& holds) {
  Json out = {{"oracle", oracle_name(f)}, {"first_failure", nullptr}};
  holds = true;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    const Scalar lhs = oracle_det(f, n);
    const Scalar rhs = engine_value(builder_counterpart(f, n));
    if (lhs != rhs) {
      holds = false;
      out["first_failure"] = {{"n", n}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
      break;
    }
  }
  out["holds"] = holds;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact determinants of Pascal-type matrices"};
  app.require_subcommand(1);

  std::size_t jobs = 1;
  std::string spec, format = "json", terms;
  std::size_t n = 0, n_max = 0, n_min = 1;

  auto* build_cmd = app.add_subcommand("build", "Build one matrix");
  build_cmd->add_option("--spec", spec, "Family spec: inline JSON, @file or path")->required();
  build_cmd->add_option("-n", n, "Order")->required();
  build_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* seq_cmd = app.add_subcommand("det-seq", "Determinants for n = 1..n-max");
  seq_cmd->add_option("--spec", spec)->required();
  seq_cmd->add_option("--n-max", n_max)->required();
  seq_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* rank_cmd = app.add_subcommand("rank-seq", "Ranks for n = 1..n-max");
  rank_cmd->add_option("--spec", spec)->required();
  rank_cmd->add_option("--n-max", n_max)->required();
  rank_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  std::size_t step = 1, d_max = 8, min_verify = 2, start = 1;
  auto* detect_cmd = app.add_subcommand("detect", "Find the minimal linear recursion");
  detect_cmd->add_option("--terms", terms, "JSON array of terms");
  detect_cmd->add_option("--spec", spec);
  detect_cmd->add_option("--n-max", n_max);
  detect_cmd->add_option("--step", step);
  detect_cmd->add_option("--d-max", d_max);
  detect_cmd->add_option("--min-verify", min_verify);
  detect_cmd->add_option("--start", start);

  std::string identity, oracle, params = "{}", coeffs;
  std::size_t valid_from = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Check an identity, oracle or recursion exactly");
  auto* id_opt = verify_cmd->add_option("--identity", identity);
  auto* or_opt = verify_cmd->add_option("--oracle", oracle);
  auto* co_opt = verify_cmd->add_option("--coeffs", coeffs, "Recursion coefficients D_1..D_d as JSON");
  id_opt->excludes(or_opt)->excludes(co_opt);
  or_opt->excludes(co_opt);
  verify_cmd->add_option("--params", params);
  verify_cmd->add_option("--n-min", n_min);
  verify_cmd->add_option("--n-max", n_max);
  verify_cmd->add_option("--terms", terms);
  verify_cmd->add_option("--spec", spec);
  verify_cmd->add_option("--step", step);
  verify_cmd->add_option("--valid-from", valid_from);

  std::size_t depth = 0;
  int root = 1;
  auto* tree_cmd = app.add_subcommand("tree", "Even symplectic unimodular tree");
  tree_cmd->add_option("--depth", depth)->required();
  tree_cmd->add_option("--root", root)->check(CLI::IsMember({1, -1}));
  tree_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  std::string prefix;
  auto* symp_cmd = app.add_subcommand("sympletric", "Sympletric determinants or extensions");
  symp_cmd->add_option("--prefix", prefix, "JSON array; prints its integer extensions");
  symp_cmd->add_option("--spec", spec, "Sequence spec; prints det P_{alpha, alpha~}(n)");
  symp_cmd->add_option("--n-max", n_max);

  std::string table;
  std::string fixtures = DETSEQ_GOLDEN_DIR;
  auto* repro_cmd = app.add_subcommand("reproduce", "Regenerate a table and diff against its fixture");
  repro_cmd->add_option("table", table)->required()->check(CLI::IsMember({"4.2", "5.1.3", "6-table", "D_k-table", "5.5"}));
  repro_cmd->add_option("--fixtures", fixtures);

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    if (*build_cmd) {
      const auto m = build(family_from_json(load_json(spec)), n);
      if (format == "csv") {
        for (std::size_t i = 0; i < m.order(); ++i) {
          for (std::size_t j = 0; j < m.order(); ++j) std::cout << (j ? "," : "") << m(i, j).to_string();
          std::cout << '\n';
        }
      } else {
        emit(to_json(m));
      }
      return kOk;
    }
    if (*seq_cmd) {
      const auto s = det_sequence(family_from_json(load_json(spec)), n_max, jobs);
      if (format == "csv") {
        std::cout << "n,det\n";
        for (const auto& [k, v] : s.values) std::cout << k << ',' << v.to_string() << '\n';
      } else {
        emit(to_json(s));
      }
      return kOk;
    }
    if (*rank_cmd) {
      const auto family = family_from_json(load_json(spec));
      if (n_max == 0) throw Error(ErrorKind::DomainError, "n-max must be positive");
      const auto ranks = parallel_map(n_max, jobs, [&](std::size_t k) { return rank(build(family, k + 1)); });
      if (format == "csv") {
        std::cout << "n,rank\n";
        for (std::size_t k = 0; k < n_max; ++k) std::cout << k + 1 << ',' << ranks[k] << '\n';
      } else {
        Json values = Json::array();
        for (std::size_t k = 0; k < n_max; ++k) values.push_back({k + 1, ranks[k]});
        emit({{"family", to_json(family)}, {"ranks", values}});
      }
      return kOk;
    }
    if (*detect_cmd) {
      emit(to_json(detect(terms_or_spec(terms, spec, n_max, jobs), step, d_max, min_verify, start)));
      return kOk;
    }
    if (*verify_cmd) {
      if (n_max == 0) throw Error(ErrorKind::DomainError, "verify needs --n-max");
      bool holds = false;
      Json out;
      if (!identity.empty()) {
        const auto report = verify_identity(identity_from_json(identity, load_json(params)), n_min, n_max);
        holds = report.holds;
        out = to_json(report);
      } else if (!oracle.empty()) {
        if (n_min == 0 || n_min > n_max) throw Error(ErrorKind::DomainError, "need 1 <= n-min <= n-max");
        out = oracle_check(oracle_from_json(oracle, load_json(params)), n_min, n_max, holds);
      } else if (!coeffs.empty()) {
        const auto w = terms_or_spec(terms, spec, n_max, jobs);
        const auto report = make_report(scalars_from_json(load_json(coeffs)), step, valid_from);
        const auto bad = first_violation(w, report);
        holds = !bad;
        out = {{"recursion", to_json(report)}, {"holds", holds}, {"terms", w.size()}};
        out["first_failure"] = bad ? Json{{"n", *bad}} : Json(nullptr);
      } else {
        throw Error(ErrorKind::MalformedSpec, "verify needs --identity, --oracle or --coeffs");
      }
      emit(out);
      if (!holds) std::cerr << "verification failed\n";
      return holds ? kOk : kFailed;
    }
    if (*tree_cmd) {
      const auto rows = enumerate_even_tree(depth, root);
      if (format == "table") {
        std::cout << format_even_tree(rows);
      } else {
        Json out = Json::array();
        for (const auto& r : rows) out.push_back(to_json(r));
        emit(out);
      }
      return kOk;
    }
    if (*symp_cmd) {
      if (!prefix.empty()) {
        std::vector<Integer> p;
        for (const auto& v : scalars_from_json(load_json(prefix))) {
          if (!v.is_integer()) throw Error(ErrorKind::NotAnInteger, "prefix terms must be integers");
          p.push_back(v.to_integer());
        }
        Json out = Json::array();
        for (const auto& x : sympletric_extensions(p)) out.push_back(to_json(x));
        emit({{"prefix", to_json(std::vector<Scalar>(p.begin(), p.end()))}, {"extensions", out}});
        return kOk;
      }
      if (spec.empty()) throw Error(ErrorKind::MalformedSpec, "sympletric needs --prefix or --spec");
      const auto alpha = sequence_from_json(load_json(spec));
      const auto dets = sympletric_dets(alpha, n_max, jobs);
      Json values = Json::array();
      for (std::size_t k = 0; k < dets.size(); ++k) values.push_back({k + 1, to_json(dets[k])});
      emit({{"alpha", to_json(alpha)}, {"values", values}});
      return kOk;
    }
    if (*repro_cmd) return reproduce(table, fixtures, jobs);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kMalformed;
  }
  return kMalformed;
}
