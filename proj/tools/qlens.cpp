// qlens: path-count matrices of quantum lens space graphs, their
// unipotent equivalence, and class enumeration.
//
// Exit status: 0 success / equivalent, 1 not equivalent, 2 invalid input,
// 3 budget exceeded, 4 verification mismatch.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlens/classify.hpp"
#include "qlens/equivalence.hpp"
#include "qlens/error.hpp"
#include "qlens/invariants.hpp"
#include "qlens/io.hpp"
#include "qlens/lensgraph.hpp"
#include "qlens/numtheory.hpp"
#include "qlens/parallel.hpp"
#include "qlens/pathmatrix.hpp"

namespace {

using nlohmann::json;
using namespace qlens;

enum Exit : int {
  kOk = 0,
  kNotEquivalent = 1,
  kBadInput = 2,
  kBudget = 3,
  kMismatch = 4,
};

struct Config {
  unsigned jobs = default_jobs();
  std::uint64_t budget = kDefaultVectorBudget;
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 0;
};

std::vector<std::int64_t> parse_list(const std::string& text, const std::string& flag) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidParams, "--" + flag + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw Error(Errc::InvalidParams, "--" + flag + " must list at least one value");
  return out;
}

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(Errc::InvalidParams, "cannot open output file " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string plain_matrix(const PathMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "," : "") << to_decimal(m(i, j));
    out << ']';
  }
  out << "]";
  return out.str();
}

int cmd_matrix(const Config& cfg, std::int64_t r, const std::string& m) {
  LensParams params(r, parse_list(m, "m"));
  const PathMatrix mat = count_matrix(params);
  Sink sink(cfg.output);
  if (cfg.format == "csv") {
    sink.out() << matrix_to_csv(mat);
  } else if (cfg.format == "plain") {
    sink.out() << params.to_string() << ' ' << plain_matrix(mat) << '\n';
  } else {
    sink.out() << matrix_to_json(params, mat).dump() << '\n';
  }
  return kOk;
}

int cmd_equiv(const Config& cfg, std::int64_t r, const std::string& m1, const std::string& m2) {
  LensParams a(r, parse_list(m1, "m1"));
  LensParams b(r, parse_list(m2, "m2"));
  if (a.dimension() != b.dimension()) {
    throw Error(Errc::DimensionMismatch, "--m1 has " + std::to_string(a.dimension()) +
                                             " entries but --m2 has " +
                                             std::to_string(b.dimension()));
  }
  const EquivDecision d = decide_equiv(count_matrix(a), count_matrix(b));
  Sink sink(cfg.output);
  if (cfg.format == "plain") {
    if (const auto* ne = std::get_if<NotEquivalent>(&d)) {
      sink.out() << "not equivalent: " << ne->describe() << '\n';
    } else {
      const auto& w = std::get<Witness>(d);
      sink.out() << "equivalent\nU = " << plain_matrix(w.u) << "\nV = " << plain_matrix(w.v)
                 << '\n';
    }
  } else {
    json out = decision_to_json(d);
    out["m1"] = matrix_to_json(a, count_matrix(a))["m"];
    out["m2"] = matrix_to_json(b, count_matrix(b))["m"];
    out["r"] = r;
    sink.out() << out.dump() << '\n';
  }
  return is_equivalent(d) ? kOk : kNotEquivalent;
}

int cmd_classes(const Config& cfg, std::int64_t r, std::size_t n) {
  Classifier c({cfg.jobs, cfg.budget});
  const ClassPartition p = c.partition_classes(r, n);
  Sink sink(cfg.output);
  if (cfg.format == "csv") {
    sink.out() << "representative_m,size,matrix_count,signature,matrix_digest\n";
    for (const auto& cls : p.classes) {
      std::string m;
      for (auto w : cls.representative.weights()) m += (m.empty() ? "" : " ") + std::to_string(w);
      sink.out() << '"' << m << "\"," << cls.size << ',' << cls.matrix_count << ",\""
                 << cls.signature.to_string() << "\",\"" << cls.digest << "\"\n";
    }
  } else if (cfg.format == "plain") {
    sink.out() << "r=" << r << " n=" << n << " phi=" << p.phi()
               << " lower_bound=" << to_decimal(p.lower_bound) << '\n';
    for (const auto& cls : p.classes) {
      sink.out() << "  " << cls.representative.to_string() << " size=" << cls.size
                 << " matrices=" << cls.matrix_count << " signature=" << cls.signature.to_string()
                 << '\n';
    }
  } else {
    sink.out() << partition_to_json(p).dump() << '\n';
  }
  return kOk;
}

int cmd_phitilde(const Config& cfg, std::int64_t r, std::size_t n_max) {
  Classifier c({cfg.jobs, cfg.budget});
  const std::size_t formula = phitilde_formula(r);
  const PhitildeResult found = c.phitilde_search(r, n_max);
  const bool agrees = found.found ? *found.found == formula : formula > n_max;
  Sink sink(cfg.output);
  if (cfg.format == "plain") {
    sink.out() << "r=" << r << " formula=" << formula << " search="
               << (found.found ? std::to_string(*found.found)
                               : "not found for n <= " + std::to_string(n_max))
               << (agrees ? "" : " MISMATCH") << '\n';
  } else {
    json out{{"r", r}, {"formula", formula}, {"n_max", n_max}, {"agrees", agrees}};
    out["search"] = found.found ? json(*found.found) : json(nullptr);
    sink.out() << out.dump() << '\n';
  }
  return agrees ? kOk : kMismatch;
}

std::vector<std::int64_t> random_units(std::mt19937_64& rng, std::int64_t r, std::size_t n) {
  const auto units = units_mod(r);
  std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
  std::vector<std::int64_t> m(n);
  for (auto& w : m) w = units[pick(rng)];
  return m;
}

json verify_lemmas(std::int64_t r, std::size_t n_max, std::mt19937_64& rng, bool& ok) {
  constexpr int kSamples = 20;
  std::size_t checked = 0, failed = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (int s = 0; s < kSamples; ++s) {
      for (const auto& c : check_divisibility(LensParams(r, random_units(rng, r, n)))) {
        ++checked;
        if (!c.passed) ++failed;
      }
    }
  }
  std::size_t cong_checked = 0, cong_failed = 0;
  for (const auto& pp : factorize(r).odd_primes) {
    for (unsigned alpha = 1; alpha <= pp.exponent; ++alpha) {
      for (std::size_t n = 1; n <= static_cast<std::size_t>(pp.prime) + 1; ++n) {
        for (int s = 0; s < kSamples; ++s) {
          ++cong_checked;
          if (!congruence_main(LensParams(r, random_units(rng, r, n)), pp.prime, alpha).holds()) {
            ++cong_failed;
          }
        }
      }
    }
  }
  const BigInt formula = six_corner_polynomial(r);
  const BigInt counted = count_matrix(LensParams(r, {1, 1, -1, 1, 1, 1}))(0, 5);
  ok = ok && failed == 0 && cong_failed == 0 && formula == counted;
  return json{{"r", r},
              {"divisibility", {{"checked", checked}, {"failed", failed}}},
              {"congruence", {{"checked", cong_checked}, {"failed", cong_failed}}},
              {"corner_1to6",
               {{"formula", to_decimal(formula)},
                {"counted", to_decimal(counted)},
                {"match", formula == counted}}}};
}

int cmd_verify(const Config& cfg, const std::string& suite, const std::string& r_list,
               std::size_t n_max) {
  const auto rs = parse_list(r_list, "r");
  for (auto r : rs) {
    if (r <= 2) throw Error(Errc::InvalidParams, "--r values must exceed 2");
  }
  bool ok = true;
  json results = json::array();
  if (suite == "lemmas") {
    std::mt19937_64 rng(cfg.seed);
    for (auto r : rs) results.push_back(verify_lemmas(r, n_max, rng, ok));
  } else if (suite == "conjectures") {
    Classifier c({cfg.jobs, cfg.budget});
    for (auto r : rs) {
      for (std::size_t n = 1; n <= n_max; ++n) {
        const ConjectureReport rep = c.verify_conjectures(r, n);
        ok = ok && rep.passed();
        results.push_back(report_to_json(rep));
      }
    }
  } else {
    throw Error(Errc::InvalidParams, "unknown suite '" + suite + "' (lemmas|conjectures)");
  }
  Sink sink(cfg.output);
  json out{{"suite", suite}, {"passed", ok}, {"results", results}};
  sink.out() << (cfg.format == "plain" ? out.dump(2) : out.dump()) << '\n';
  return ok ? kOk : kMismatch;
}

int cmd_graph(const Config& cfg, std::int64_t r, const std::string& m, const std::string& kind) {
  if (kind != "M" && kind != "N") throw Error(Errc::InvalidParams, "--kind must be M or N");
  LensParams params(r, parse_list(m, "m"));
  Sink sink(cfg.output);
  sink.out() << to_dot(build_graph(params, kind == "M" ? GraphKind::M : GraphKind::N));
  return kOk;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::BudgetExceeded:
    case Errc::TooLarge:
      return kBudget;
    default:
      return kBadInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum lens space path matrices and their equivalence classes"};
  app.require_subcommand(1);
  Config cfg;

  std::int64_t r = 0;
  std::string m, m1, m2, r_list, suite, kind = "N";
  std::size_t n = 0, n_max = 8;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json | csv | plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    sub->add_option("--output", cfg.output, "Write to this file instead of standard output");
  };
  auto pooled = [&](CLI::App* sub) {
    sub->add_option("--jobs", cfg.jobs, "Worker threads (default: QLENS_JOBS or all cores)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget", cfg.budget, "Maximum normalized vectors per (r, n)")
        ->check(CLI::PositiveNumber);
  };

  auto* matrix = app.add_subcommand("matrix", "Print the path-count matrix of (r; m)");
  matrix->add_option("--r", r, "Modulus r > 2")->required();
  matrix->add_option("--m", m, "Comma-separated weights m_1,...,m_n")->required();
  common(matrix);

  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two weight vectors");
  equiv->add_option("--r", r)->required();
  equiv->add_option("--m1", m1)->required();
  equiv->add_option("--m2", m2)->required();
  common(equiv);

  auto* classes = app.add_subcommand("classes", "Partition S_{r,n} into equivalence classes");
  classes->add_option("--r", r)->required();
  classes->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  common(classes);
  pooled(classes);

  auto* phitilde = app.add_subcommand("phitilde", "Least n with more than one class");
  phitilde->add_option("--r", r)->required();
  phitilde->add_option("--n-max", n_max, "Largest dimension searched (default 8)");
  common(phitilde);
  pooled(phitilde);

  auto* verify = app.add_subcommand("verify", "Run the lemma or conjecture verification suite");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember({"lemmas", "conjectures"}));
  verify->add_option("--r", r_list, "Comma-separated moduli")->required();
  verify->add_option("--n-max", n_max);
  verify->add_option("--seed", cfg.seed, "Seed for random weight vectors (default 0)");
  common(verify);
  pooled(verify);

  auto* graph = app.add_subcommand("graph", "Graphviz export of the M or N graph");
  graph->add_option("--r", r)->required();
  graph->add_option("--m", m)->required();
  graph->add_option("--kind", kind, "M or N (default N)");
  common(graph);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*matrix) return cmd_matrix(cfg, r, m);
    if (*equiv) return cmd_equiv(cfg, r, m1, m2);
    if (*classes) return cmd_classes(cfg, r, n);
    if (*phitilde) return cmd_phitilde(cfg, r, n_max);
    if (*verify) return cmd_verify(cfg, suite, r_list, n_max);
    if (*graph) return cmd_graph(cfg, r, m, kind);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kBadInput;
}
