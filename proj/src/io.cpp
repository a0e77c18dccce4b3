#include "qlens/io.hpp"

#include <sstream>

#include "qlens/error.hpp"

namespace qlens {

using nlohmann::json;

namespace {

json entries_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_decimal(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix entries_from_json(const json& rows) {
  if (!rows.is_array()) throw Error(Errc::ParseError, "matrix entries must be an array of rows");
  const std::size_t n = rows.size();
  const std::size_t cols = n == 0 ? 0 : rows.at(0).size();
  IntMatrix m(n, cols);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != cols) {
      throw Error(Errc::ParseError, "row " + std::to_string(i) + " has the wrong length");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (!rows[i][j].is_string()) throw Error(Errc::ParseError, "entries must be strings");
      m(i, j) = parse_decimal(rows[i][j].get<std::string>());
    }
  }
  return m;
}

template <class F>
auto parse_guard(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace

json matrix_to_json(const LensParams& params, const PathMatrix& m) {
  return json{{"r", params.modulus()},
              {"m", std::vector<std::int64_t>(params.weights().begin(), params.weights().end())},
              {"n", params.dimension()},
              {"entries", entries_to_json(m)}};
}

std::pair<LensParams, PathMatrix> matrix_from_json(const json& j) {
  return parse_guard([&] {
    LensParams params(j.at("r").get<std::int64_t>(), j.at("m").get<std::vector<std::int64_t>>());
    PathMatrix m = entries_from_json(j.at("entries"));
    const auto n = j.at("n").get<std::size_t>();
    if (n != params.dimension() || m.rows() != n || m.cols() != n) {
      throw Error(Errc::ParseError, "inconsistent dimension n = " + std::to_string(n));
    }
    return std::pair{std::move(params), std::move(m)};
  });
}

std::string matrix_to_csv(const PathMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      out << to_decimal(m(i, j));
    }
    out << '\n';
  }
  return out.str();
}

json witness_to_json(const Witness& w) {
  return json{{"U", entries_to_json(w.u)}, {"V", entries_to_json(w.v)}};
}

Witness witness_from_json(const json& j) {
  return parse_guard([&] {
    return Witness{entries_from_json(j.at("U")), entries_from_json(j.at("V"))};
  });
}

json signature_to_json(const Signature& s) {
  return json{{"primes", s.primes}, {"windows", s.windows}};
}

Signature signature_from_json(const json& j) {
  return parse_guard([&] {
    Signature s;
    s.primes = j.at("primes").get<std::vector<std::int64_t>>();
    s.windows = j.at("windows").get<std::vector<std::vector<std::int64_t>>>();
    if (s.primes.size() != s.windows.size()) {
      throw Error(Errc::ParseError, "one window tuple per prime expected");
    }
    return s;
  });
}

json partition_to_json(const ClassPartition& p) {
  json classes = json::array();
  for (const auto& c : p.classes) {
    classes.push_back(
        json{{"representative_m", std::vector<std::int64_t>(c.representative.weights().begin(),
                                                             c.representative.weights().end())},
             {"size", c.size},
             {"matrix_count", c.matrix_count},
             {"signature", signature_to_json(c.signature)},
             {"matrix_digest", c.digest}});
  }
  return json{{"r", p.r},
              {"n", p.n},
              {"phi", p.phi()},
              {"lower_bound", to_decimal(p.lower_bound)},
              {"classes", std::move(classes)}};
}

ClassPartition partition_from_json(const json& j) {
  return parse_guard([&] {
    ClassPartition p;
    p.r = j.at("r").get<std::int64_t>();
    p.n = j.at("n").get<std::size_t>();
    p.lower_bound = parse_decimal(j.at("lower_bound").get<std::string>());
    for (const auto& c : j.at("classes")) {
      p.classes.push_back(MatrixClass{
          LensParams(p.r, c.at("representative_m").get<std::vector<std::int64_t>>()),
          c.at("matrix_digest").get<std::string>(), c.at("size").get<std::uint64_t>(),
          c.at("matrix_count").get<std::uint64_t>(), signature_from_json(c.at("signature"))});
    }
    if (j.at("phi").get<std::size_t>() != p.classes.size()) {
      throw Error(Errc::ParseError, "phi disagrees with the class list");
    }
    return p;
  });
}

json decision_to_json(const EquivDecision& d) {
  if (const auto* w = std::get_if<Witness>(&d)) {
    return json{{"verdict", "equivalent"}, {"witness", witness_to_json(*w)}};
  }
  const auto& ne = std::get<NotEquivalent>(d);
  json out{{"verdict", "not_equivalent"}, {"reason", ne.describe()}};
  if (ne.obstruction) {
    out["obstruction"] = json{{"modulus", to_decimal(ne.obstruction->modulus)},
                              {"row", ne.obstruction->row + 1},
                              {"col", ne.obstruction->col + 1}};
  }
  return out;
}

json report_to_json(const ConjectureReport& r) {
  return json{{"r", r.r},
              {"n", r.n},
              {"phi", r.phi},
              {"lower_bound", to_decimal(r.lower_bound)},
              {"equality_applicable", r.equality_applicable},
              {"lower_bound_holds", r.lower_bound_holds},
              {"signature_necessary", r.signature_necessary},
              {"signature_iff_equivalence", r.signature_iff_equivalence},
              {"phi_equals_bound", r.phi_equals_bound},
              {"equal_sizes_by_vectors", r.equal_sizes_by_vectors},
              {"equal_sizes_by_matrices", r.equal_sizes_by_matrices},
              {"passed", r.passed()}};
}

}  // namespace qlens
