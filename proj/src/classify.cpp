#include "qlens/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "qlens/equivalence.hpp"
#include "qlens/error.hpp"
#include "qlens/numtheory.hpp"
#include "qlens/parallel.hpp"

namespace qlens {

unsigned default_jobs() {
  if (const char* env = std::getenv("QLENS_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string DecisionMemo::key(const std::string& a, const std::string& b) {
  return a < b ? a + '|' + b : b + '|' + a;
}

std::optional<bool> DecisionMemo::find(const std::string& a, const std::string& b) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key(a, b));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void DecisionMemo::insert(const std::string& a, const std::string& b, bool equivalent) {
  std::unique_lock lock(mutex_);
  table_.emplace(key(a, b), equivalent);
}

std::size_t DecisionMemo::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

bool ConjectureReport::passed() const {
  if (!lower_bound_holds || !signature_necessary) return false;
  if (!equality_applicable) return true;
  return signature_iff_equivalence && phi_equals_bound && equal_sizes_by_vectors;
}

BigInt normalized_vector_count(std::int64_t r, std::size_t n) {
  if (r <= 2) throw Error(Errc::InvalidParams, "need r > 2");
  BigInt out = 1;
  if (n > 3) {
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(units_mod(r).size()), n - 3);
  }
  return out;
}

Classifier::Classifier(ClassifyOptions options) : options_(options) {
  if (options_.jobs == 0) options_.jobs = 1;
  if (options_.budget == 0) {
    throw Error(Errc::InvalidParams, "budget must be at least 1");
  }
}

namespace {

/// The index-th normalized weight vector in lexicographic order: positions
/// 3 .. n-1 (1-based) range over the units, the rest are 1.
std::vector<std::int64_t> normalized_vector(const std::vector<std::int64_t>& units,
                                            std::size_t n, std::uint64_t index) {
  std::vector<std::int64_t> m(n, 1);
  if (n <= 3) return m;
  for (std::size_t pos = n - 2; pos >= 2; --pos) {
    m[pos] = units[index % units.size()];
    index /= units.size();
  }
  return m;
}

}  // namespace

std::vector<EnumeratedMatrix> Classifier::enumerate_matrices(std::int64_t r,
                                                             std::size_t n) const {
  if (n == 0) throw Error(Errc::InvalidParams, "dimension must be at least 1");
  const BigInt total = normalized_vector_count(r, n);
  if (total > BigInt(static_cast<unsigned long>(options_.budget))) {
    throw Error(Errc::BudgetExceeded, to_decimal(total) + " normalized vectors for (r=" +
                                          std::to_string(r) + ", n=" + std::to_string(n) +
                                          ") exceed budget " + std::to_string(options_.budget));
  }
  const std::uint64_t count = total.get_ui();
  const auto units = units_mod(r);

  std::vector<EnumeratedMatrix> distinct;
  std::unordered_map<std::string, std::size_t> seen;
  constexpr std::uint64_t kChunk = 4096;
  for (std::uint64_t base = 0; base < count; base += kChunk) {
    const std::size_t len = static_cast<std::size_t>(std::min(kChunk, count - base));
    std::vector<std::optional<EnumeratedMatrix>> chunk(len);
    parallel_for(len, options_.jobs, [&](std::size_t i) {
      LensParams params(r, normalized_vector(units, n, base + i));
      PathMatrix m = count_matrix(params);
      std::string digest = m.digest();
      chunk[i].emplace(EnumeratedMatrix{std::move(params), std::move(m), std::move(digest), 1});
    });
    for (auto& item : chunk) {
      auto [it, inserted] = seen.emplace(item->digest, distinct.size());
      if (inserted) {
        distinct.push_back(std::move(*item));
      } else {
        ++distinct[it->second].vector_count;
      }
    }
  }
  return distinct;
}

bool Classifier::equivalent(const EnumeratedMatrix& a, const EnumeratedMatrix& b) {
  if (auto hit = memo_.find(a.digest, b.digest)) return *hit;
  const bool verdict = is_equivalent(decide_equiv(a.matrix, b.matrix));
  memo_.insert(a.digest, b.digest, verdict);
  return verdict;
}

Classifier::Partitioned Classifier::run_partition(std::int64_t r, std::size_t n) {
  Partitioned p;
  p.matrices = enumerate_matrices(r, n);
  const std::size_t count = p.matrices.size();
  p.signatures.reserve(count);
  for (const auto& e : p.matrices) p.signatures.push_back(signature(e.representative));

  // Classes never span signature buckets, so only members of one bucket are
  // compared. Each round, the first unassigned member of every bucket leads a
  // new class and all other unassigned members of that bucket are tested
  // against it; the outcome does not depend on the worker count.
  std::map<Signature, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < count; ++i) buckets[p.signatures[i]].push_back(i);

  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  p.class_of.assign(count, kUnassigned);
  std::vector<std::vector<std::size_t>> pending;
  for (auto& [sig, members] : buckets) pending.push_back(std::move(members));

  while (!pending.empty()) {
    std::vector<std::pair<std::size_t, std::size_t>> tests;  // (leader, candidate)
    for (const auto& members : pending) {
      for (std::size_t k = 1; k < members.size(); ++k) tests.emplace_back(members[0], members[k]);
    }
    std::vector<char> verdict(tests.size(), 0);
    parallel_for(tests.size(), options_.jobs, [&](std::size_t t) {
      verdict[t] = equivalent(p.matrices[tests[t].first], p.matrices[tests[t].second]) ? 1 : 0;
    });

    std::size_t t = 0;
    std::vector<std::vector<std::size_t>> next;
    for (const auto& members : pending) {
      const std::size_t leader = members[0];
      const std::size_t cls = p.class_leader.size();
      p.class_leader.push_back(leader);
      p.class_of[leader] = cls;
      std::vector<std::size_t> rest;
      for (std::size_t k = 1; k < members.size(); ++k, ++t) {
        if (verdict[t]) {
          p.class_of[members[k]] = cls;
        } else {
          rest.push_back(members[k]);
        }
      }
      if (!rest.empty()) next.push_back(std::move(rest));
    }
    pending = std::move(next);
  }

  // Number classes by their leader's first occurrence in the enumeration.
  std::vector<std::size_t> order(p.class_leader.size());
  for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return p.class_leader[x] < p.class_leader[y];
  });
  std::vector<std::size_t> renumber(order.size());
  std::vector<std::size_t> leaders(order.size());
  for (std::size_t c = 0; c < order.size(); ++c) {
    renumber[order[c]] = c;
    leaders[c] = p.class_leader[order[c]];
  }
  for (auto& c : p.class_of) c = renumber[c];
  p.class_leader = std::move(leaders);
  return p;
}

ClassPartition Classifier::summarize(std::int64_t r, std::size_t n, const Partitioned& p) const {
  ClassPartition out;
  out.r = r;
  out.n = n;
  out.lower_bound = lower_bound_classes(r, n);
  for (std::size_t c = 0; c < p.class_leader.size(); ++c) {
    const std::size_t leader = p.class_leader[c];
    out.classes.push_back(MatrixClass{p.matrices[leader].representative,
                                      p.matrices[leader].digest, 0, 0,
                                      p.signatures[leader]});
  }
  for (std::size_t i = 0; i < p.matrices.size(); ++i) {
    auto& cls = out.classes[p.class_of[i]];
    cls.size += p.matrices[i].vector_count;
    ++cls.matrix_count;
  }
  return out;
}

ClassPartition Classifier::partition_classes(std::int64_t r, std::size_t n) {
  ClassPartition out = summarize(r, n, run_partition(r, n));
  if (BigInt(static_cast<unsigned long>(out.phi())) < out.lower_bound) {
    throw std::logic_error("class count " + std::to_string(out.phi()) +
                           " is below the proven lower bound " + to_decimal(out.lower_bound) +
                           " for r=" + std::to_string(r) + ", n=" + std::to_string(n));
  }
  return out;
}

PhitildeResult Classifier::phitilde_search(std::int64_t r, std::size_t n_max) {
  PhitildeResult out;
  out.n_max = n_max;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (partition_classes(r, n).phi() > 1) {
      out.found = n;
      break;
    }
  }
  return out;
}

ConjectureReport Classifier::verify_conjectures(std::int64_t r, std::size_t n) {
  const Partitioned p = run_partition(r, n);
  const ClassPartition part = summarize(r, n, p);

  ConjectureReport rep;
  rep.r = r;
  rep.n = n;
  rep.equality_applicable = factorize(r).two_exponent < 2;
  rep.phi = part.phi();
  rep.lower_bound = part.lower_bound;
  rep.lower_bound_holds = BigInt(static_cast<unsigned long>(rep.phi)) >= rep.lower_bound;

  // Equivalence is transitive, so comparing one leader per class settles every
  // pair of matrices: leaders with different signatures must be inequivalent,
  // and no two classes may share a signature.
  std::vector<std::pair<std::size_t, std::size_t>> cross;
  bool shared_signature = false;
  for (std::size_t a = 0; a < p.class_leader.size(); ++a) {
    for (std::size_t b = a + 1; b < p.class_leader.size(); ++b) {
      const auto la = p.class_leader[a], lb = p.class_leader[b];
      if (p.signatures[la] == p.signatures[lb]) {
        shared_signature = true;
      } else {
        cross.emplace_back(la, lb);
      }
    }
  }
  std::vector<char> cross_equivalent(cross.size(), 0);
  parallel_for(cross.size(), options_.jobs, [&](std::size_t i) {
    cross_equivalent[i] =
        equivalent(p.matrices[cross[i].first], p.matrices[cross[i].second]) ? 1 : 0;
  });
  rep.signature_necessary =
      std::find(cross_equivalent.begin(), cross_equivalent.end(), 1) == cross_equivalent.end();
  rep.signature_iff_equivalence = rep.signature_necessary && !shared_signature;
  rep.phi_equals_bound = BigInt(static_cast<unsigned long>(rep.phi)) == rep.lower_bound;

  auto all_equal = [&](auto field) {
    for (const auto& c : part.classes) {
      if (c.*field != part.classes.front().*field) return false;
    }
    return true;
  };
  rep.equal_sizes_by_vectors = all_equal(&MatrixClass::size);
  rep.equal_sizes_by_matrices = all_equal(&MatrixClass::matrix_count);
  return rep;
}

}  // namespace qlens
