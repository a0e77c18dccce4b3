// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: qlens_acceptance [criterion numbers...]   (default: all)

#include <gmp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qlens/classify.hpp"
#include "qlens/equivalence.hpp"
#include "qlens/error.hpp"
#include "qlens/invariants.hpp"
#include "qlens/lensgraph.hpp"
#include "qlens/numtheory.hpp"
#include "qlens/parallel.hpp"
#include "qlens/pathmatrix.hpp"

using namespace qlens;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first_failure = what;
    passed = false;
  }
};

// Every unit vector of length n.
std::vector<std::vector<std::int64_t>> unit_vectors(std::int64_t r, std::size_t n) {
  std::vector<std::vector<std::int64_t>> out{std::vector<std::int64_t>(n, 1)};
  const auto units = units_mod(r);
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& m : out) {
      for (auto u : units) {
        auto v = m;
        v[pos] = u;
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::string params_text(std::int64_t r, const std::vector<std::int64_t>& m) {
  return LensParams(r, m).to_string();
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t vectors = 0;
  for (std::int64_t r = 3; r <= 7; ++r) {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (const auto& m : unit_vectors(r, n)) {
        ++vectors;
        const LensParams p(r, m);
        const PathMatrix dp = count_matrix(p);
        const LensGraph gm = build_graph(p, GraphKind::M);
        const LensGraph gn = build_graph(p, GraphKind::N);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i; j < n; ++j) {
            o.expect(enumerate_legal_paths(gm, i, j) == dp(i, j), params_text(r, m) + " M");
            o.expect(enumerate_legal_paths(gn, i, j) == dp(i, j), params_text(r, m) + " N");
          }
        }
      }
    }
  }
  o.detail = std::to_string(vectors) + " weight vectors (normalized ones included), M and N graphs";
  return o;
}

Outcome closed_formula() {
  Outcome o;
  for (std::int64_t r = 3; r <= 30; ++r) {
    for (std::size_t n = 1; n <= 8; ++n) {
      const PathMatrix m = count_matrix(LensParams(r, std::vector<std::int64_t>(n, 1)));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          o.expect(m(i, j) == oracle::factorial_ratio(static_cast<unsigned>(r - 1 + j - i),
                                                      static_cast<unsigned>(j - i)),
                   "r=" + std::to_string(r) + " n=" + std::to_string(n));
        }
      }
    }
  }
  o.detail = "r in 3..30, n in 1..8";
  return o;
}

Outcome forced_entries() {
  Outcome o;
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::int64_t> pick_r(3, 100);
  std::uniform_int_distribution<std::size_t> pick_n(1, 8);
  for (int k = 0; k < 200; ++k) {
    const std::int64_t r = pick_r(rng);
    const auto m = oracle::random_units(rng, r, pick_n(rng));
    const PathMatrix a = count_matrix(LensParams(r, m));
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
      o.expect(a(i, i) == 1, params_text(r, m));
      if (i + 1 < n) o.expect(a(i, i + 1) == r, params_text(r, m));
      if (i + 2 < n) o.expect(a(i, i + 2) == BigInt(r * (r + 1) / 2), params_text(r, m));
    }
  }
  o.detail = "200 random samples";
  return o;
}

Outcome scaling_invariance() {
  Outcome o;
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<std::int64_t> pick_r(3, 60);
  std::uniform_int_distribution<std::size_t> pick_n(1, 8);
  for (int k = 0; k < 100; ++k) {
    const std::int64_t r = pick_r(rng);
    auto m = oracle::random_units(rng, r, pick_n(rng));
    const PathMatrix base = count_matrix(LensParams(r, m));
    const std::int64_t b = oracle::random_units(rng, r, 1)[0];
    auto scaled_m = m;
    for (auto& w : scaled_m) w = (w * b) % r;
    o.expect(count_matrix(LensParams(r, scaled_m)) == base, "scale " + params_text(r, m));
    const auto ends = oracle::random_units(rng, r, 2);
    m.front() = ends[0];
    m.back() = ends[1];
    o.expect(count_matrix(LensParams(r, m)) == base, "endpoints " + params_text(r, m));
  }
  o.detail = "100 random samples";
  return o;
}

Outcome divisibility() {
  Outcome o;
  std::mt19937_64 rng(303);
  std::size_t triples = 0;
  for (std::int64_t r = 3; r <= 60; ++r) {
    for (const auto& pp : factorize(r).odd_primes) {
      for (unsigned alpha = 1; alpha <= pp.exponent; ++alpha) {
        ++triples;
        BigInt modulus = 1;
        for (unsigned e = 0; e < alpha; ++e) modulus *= pp.prime;
        const auto n = static_cast<std::size_t>(pp.prime);
        for (int s = 0; s < 50; ++s) {
          const auto m = oracle::random_units(rng, r, n);
          const PathMatrix a = count_matrix(LensParams(r, m));
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
              o.expect(a(i, j) % modulus == 0, "p-power " + params_text(r, m));
            }
          }
        }
      }
    }
  }
  for (std::int64_t r : {4, 8, 12, 16, 20, 24}) {
    const unsigned t = factorize(r).two_exponent;
    for (int s = 0; s < 20; ++s) {
      const auto m4 = oracle::random_units(rng, r, 4);
      o.expect(oracle::valuation(count_matrix(LensParams(r, m4))(0, 3), 2) >= t,
               "1to4 " + params_text(r, m4));
      const auto m5 = oracle::random_units(rng, r, 5);
      o.expect(oracle::valuation(count_matrix(LensParams(r, m5))(0, 4), 2) == t - 2,
               "1to5 " + params_text(r, m5));
    }
  }
  o.detail = std::to_string(triples) + " (r,p,alpha) triples x 50, 6 two-power moduli x 20";
  return o;
}

BigInt corner_poly_oracle(std::int64_t r) {
  const BigInt x = r;
  const BigInt num = 22 * x + 15 * x * x - 5 * x * x * x + 5 * x * x * x * x + 3 * x * x * x * x * x;
  return num / 40;
}

Outcome corner_polynomial() {
  Outcome o;
  std::ostringstream values;
  for (std::int64_t r : {3, 4, 5, 7, 8, 9, 11, 12}) {
    const BigInt counted = count_matrix(LensParams(r, {1, 1, r - 1, 1, 1, 1}))(0, 5);
    o.expect(six_corner_polynomial(r) == counted, "r=" + std::to_string(r));
    o.expect(corner_poly_oracle(r) == counted, "oracle r=" + std::to_string(r));
    values << (r == 3 ? "" : ",") << to_decimal(counted);
  }
  o.detail = "corners " + values.str();
  return o;
}

Outcome congruence() {
  Outcome o;
  std::mt19937_64 rng(404);
  std::size_t cases = 0;
  for (std::int64_t r = 3; r <= 45; ++r) {
    for (const auto& pp : factorize(r).odd_primes) {
      for (unsigned alpha = 1; alpha <= pp.exponent; ++alpha) {
        BigInt mod = 1;
        for (unsigned e = 0; e < alpha; ++e) mod *= pp.prime;
        for (std::size_t n = 1; n <= static_cast<std::size_t>(pp.prime) + 1; ++n) {
          for (int s = 0; s < 20; ++s) {
            ++cases;
            const auto m = oracle::random_units(rng, r, n);
            const LensParams p(r, m);
            const auto row = count_row(p, 0);
            BigInt lhs = row[n - 1] % mod;
            BigInt rhs = oracle::factorial_ratio(static_cast<unsigned>(r + n - 2),
                                                 static_cast<unsigned>(n - 1));
            for (std::size_t k = 1; k + 1 < n; ++k) {
              BigInt inv, w = m[k];
              mpz_invert(inv.get_mpz_t(), w.get_mpz_t(), mod.get_mpz_t());
              rhs *= inv;
            }
            rhs %= mod;
            const std::string where = params_text(r, m) + " p^a=" + to_decimal(mod);
            o.expect(lhs == rhs, where);
            const auto lib = congruence_main(p, pp.prime, alpha);
            o.expect(lib.lhs == lhs && lib.rhs == rhs, "library " + where);
          }
        }
      }
    }
  }
  o.detail = std::to_string(cases) + " samples";
  return o;
}

Outcome three_classes_at_four(Classifier& c) {
  Outcome o;
  std::ostringstream d;
  for (std::int64_t r : {3, 6, 9}) {
    const std::size_t phi = c.partition_classes(r, 4).phi();
    o.expect(phi == 2, "r=" + std::to_string(r) + " phi=" + std::to_string(phi));
    d << "phi_" << r << "(4)=" << phi << ' ';
  }
  o.detail = d.str();
  return o;
}

Outcome phitilde_agreement() {
  Outcome o;
  Classifier c({default_jobs(), 1'000'000});
  std::ostringstream d;
  for (std::int64_t r : {3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 20, 21, 35}) {
    const std::size_t formula = phitilde_formula(r);
    try {
      const PhitildeResult res = c.phitilde_search(r, 8);
      const bool agree = res.found ? *res.found == formula : formula > 8;
      o.expect(agree, "r=" + std::to_string(r));
      d << r << ':' << (res.found ? std::to_string(*res.found) : ">8") << ' ';
      if (formula == 6) {
        o.expect(c.partition_classes(r, 5).phi() == 1, "phi(5) r=" + std::to_string(r));
        o.expect(c.partition_classes(r, 6).phi() > 1, "phi(6) r=" + std::to_string(r));
      }
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExceeded) throw;
      d << r << ":budget ";
    }
  }
  o.detail = d.str();
  return o;
}

Outcome conjectures(Classifier& c) {
  Outcome o;
  std::size_t reports = 0;
  std::size_t matrix_sizes_equal = 0;
  auto run = [&](std::int64_t r, std::size_t n_max) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      const ConjectureReport rep = c.verify_conjectures(r, n);
      ++reports;
      const std::string where = "r=" + std::to_string(r) + " n=" + std::to_string(n);
      o.expect(rep.equality_applicable, where + " applicability");
      o.expect(rep.signature_iff_equivalence, where + " signature");
      o.expect(rep.phi_equals_bound, where + " phi=" + std::to_string(rep.phi) + " bound=" +
                                         to_decimal(rep.lower_bound));
      o.expect(rep.equal_sizes_by_vectors, where + " class sizes");
      o.expect(rep.passed(), where);
      if (rep.equal_sizes_by_matrices) ++matrix_sizes_equal;
    }
  };
  for (std::int64_t r : {3, 5, 6, 9}) run(r, 8);
  for (std::int64_t r : {10, 15, 21}) run(r, 7);
  o.detail = std::to_string(reports) + " (r,n) reports; sizes counted in normalized vectors" +
             " (distinct-matrix sizes equal in " + std::to_string(matrix_sizes_equal) + " of " +
             std::to_string(reports) + ")";
  return o;
}

IntMatrix shifted(const IntMatrix& c) { return IntMatrix::identity(c.rows()) + c; }

Outcome endgame() {
  Outcome o;
  for (long corner : {1L, -1L}) {
    const IntMatrix c{{0, 4, 2, 0, 1, corner}, {0, 0, 4, 2, 0, 1}, {0, 0, 0, 4, 2, 0},
                      {0, 0, 0, 0, 4, 2},      {0, 0, 0, 0, 0, 4}, {0, 0, 0, 0, 0, 0}};
    const IntMatrix d{{0, 4, 2, 0, 1, 0}, {0, 0, 4, 2, 0, 1}, {0, 0, 0, 4, 2, 0},
                      {0, 0, 0, 0, 4, 2}, {0, 0, 0, 0, 0, 4}, {0, 0, 0, 0, 0, 0}};
    o.expect(!is_equivalent(decide_equiv(shifted(c), shifted(d))),
             "6x6 corner " + std::to_string(corner));
  }
  std::size_t pairs = 0;
  for (long r : {4L, 8L, 16L}) {
    const long q = r / 4;
    const long tri = r * (r + 1) / 2;
    auto form = [&](long x1, long x2, long x3) {
      return IntMatrix{{0, r, tri, x1 * r, x2 * q},
                       {0, 0, r, tri, x3 * r},
                       {0, 0, 0, r, tri},
                       {0, 0, 0, 0, r},
                       {0, 0, 0, 0, 0}};
    };
    for (long x2 : {1L, 3L, -1L, 5L}) {
      for (long y2 : {1L, 3L, -1L, 5L}) {
        if (x2 == y2) continue;
        ++pairs;
        const IntMatrix a = shifted(form(x2 + 2, x2, 3 - x2));
        const IntMatrix b = shifted(form(-1, y2, y2 * 2));
        const EquivDecision dec = decide_equiv(a, b);
        o.expect(is_equivalent(dec) && verify_witness(a, b, std::get<Witness>(dec)),
                 "5x5 r=" + std::to_string(r) + " x2=" + std::to_string(x2) +
                     " y2=" + std::to_string(y2));
      }
    }
  }
  o.detail = "6x6 pair (both corner signs) inequivalent, " + std::to_string(pairs) +
             " 5x5 pairs equivalent";
  return o;
}

bool witness_holds(const IntMatrix& a, const IntMatrix& b, const Witness& w) {
  const IntMatrix id = IntMatrix::identity(a.rows());
  return w.u.is_unipotent_upper() && w.v.is_unipotent_upper() && w.u * (a - id) == (b - id) * w.v;
}

Outcome solver_soundness() {
  Outcome o;
  std::mt19937_64 rng(505);
  std::uniform_int_distribution<std::int64_t> pick_r(3, 30);
  std::uniform_int_distribution<std::size_t> pick_n(2, 8);
  for (int k = 0; k < 500; ++k) {
    const std::int64_t r = pick_r(rng);
    const std::size_t n = pick_n(rng);
    const auto m = oracle::random_units(rng, r, n);
    const PathMatrix a = count_matrix(LensParams(r, m));
    const IntMatrix id = IntMatrix::identity(n);
    const IntMatrix u = oracle::random_unipotent(rng, n, 6);
    const IntMatrix v = oracle::random_unipotent(rng, n, 6);
    const IntMatrix b = id + u * (a - id) * unipotent_inverse(v);
    const EquivDecision d = decide_equiv(a, b);
    o.expect(is_equivalent(d) && witness_holds(a, b, std::get<Witness>(d)),
             "transform " + params_text(r, m));
  }
  std::uniform_int_distribution<std::size_t> pick_n3(3, 8);
  std::uniform_int_distribution<long> pick_delta(-50, 50);
  int perturbations = 0;
  while (perturbations < 500) {
    const std::int64_t r = pick_r(rng);
    const std::size_t n = pick_n3(rng);
    const auto m = oracle::random_units(rng, r, n);
    const PathMatrix a = count_matrix(LensParams(r, m));
    BigInt g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a(i, j).get_mpz_t());
      }
    }
    if (g < 2) continue;
    std::vector<BigInt> divisors;
    for (BigInt d = 2; d <= g; ++d) {
      if (g % d == 0) divisors.push_back(d);
    }
    const BigInt k = divisors[rng() % divisors.size()];
    IntMatrix b = a;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!(i == 0 && j == n - 1)) b(i, j) += k * pick_delta(rng);
      }
    }
    long delta = 0;
    while (BigInt(delta) % k == 0) delta = pick_delta(rng);
    b(0, n - 1) += delta;
    ++perturbations;
    o.expect(!is_equivalent(decide_equiv(a, b)),
             "perturbation " + params_text(r, m) + " k=" + to_decimal(k));
  }
  o.detail = "500 transforms, 500 perturbations";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));

  Classifier shared({default_jobs(), kDefaultVectorBudget});
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence of DP and path enumeration", oracle_equivalence},
      {"closed formula for all-ones weights", closed_formula},
      {"forced first three diagonals", forced_entries},
      {"scaling and endpoint invariance", scaling_invariance},
      {"divisibility and 2-adic valuations", divisibility},
      {"corner polynomial for (1,1,-1,1,1,1)", corner_polynomial},
      {"corner congruence modulo p^alpha", congruence},
      {"two classes at n = 4 for r = 3, 6, 9", [&] { return three_classes_at_four(shared); }},
      {"least dimension with two classes", phitilde_agreement},
      {"class count, signature and class size conjectures", [&] { return conjectures(shared); }},
      {"explicit 6x6 and 5x5 reduced forms", endgame},
      {"solver soundness on random instances", solver_soundness},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (!selected.empty() && !selected.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  criterion %2d  %-50s  %s%s  (%.1fs)\n", o.passed ? "PASS" : "FAIL", id,
                criteria[i].first.c_str(), o.detail.c_str(),
                o.failures ? (" ; " + std::to_string(o.failures) + " failures, first: " +
                              o.first_failure)
                                 .c_str()
                           : "",
                secs);
    std::fflush(stdout);
    if (!o.passed) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
