#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "qlens/bigint.hpp"
#include "qlens/invariants.hpp"
#include "qlens/lensgraph.hpp"
#include "qlens/pathmatrix.hpp"

namespace qlens {

inline constexpr std::uint64_t kDefaultVectorBudget = 10'000'000;

struct ClassifyOptions {
  unsigned jobs = 1;
  std::uint64_t budget = kDefaultVectorBudget;  // normalized vectors per (r, n)
};

/// One distinct matrix of S_{r,n}, with the lexicographically smallest
/// normalized weight vector producing it.
struct EnumeratedMatrix {
  LensParams representative;
  PathMatrix matrix;
  std::string digest;
  std::uint64_t vector_count = 0;  // normalized vectors producing this matrix
};

struct MatrixClass {
  LensParams representative;
  std::string digest;
  std::uint64_t size = 0;          // normalized vectors
  std::uint64_t matrix_count = 0;  // distinct matrices
  Signature signature;
};

struct ClassPartition {
  std::int64_t r = 0;
  std::size_t n = 0;
  BigInt lower_bound;
  std::vector<MatrixClass> classes;

  std::size_t phi() const { return classes.size(); }
};

struct PhitildeResult {
  std::size_t n_max = 0;
  std::optional<std::size_t> found;  // nullopt: no n <= n_max has two classes
};

struct ConjectureReport {
  std::int64_t r = 0;
  std::size_t n = 0;
  bool equality_applicable = false;  // false when 4 | r
  std::size_t phi = 0;
  BigInt lower_bound;
  bool lower_bound_holds = false;
  bool signature_necessary = false;  // no equivalent pair across signatures
  bool signature_iff_equivalence = false;
  bool phi_equals_bound = false;
  bool equal_sizes_by_vectors = false;
  bool equal_sizes_by_matrices = false;

  /// Verdicts (a)-(c), or just the inequality when the equality conjectures
  /// do not apply.
  bool passed() const;
};

/// Thread-safe memo of equivalence verdicts keyed on digest pairs.
class DecisionMemo {
 public:
  std::optional<bool> find(const std::string& a, const std::string& b) const;
  void insert(const std::string& a, const std::string& b, bool equivalent);
  std::size_t size() const;

 private:
  static std::string key(const std::string& a, const std::string& b);

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, bool> table_;
};

/// Enumerates S_{r,n} over weight vectors with m_1 = m_2 = m_n = 1 (which
/// reaches every matrix) and partitions it into equivalence classes.
class Classifier {
 public:
  explicit Classifier(ClassifyOptions options = {});

  /// Distinct matrices in first-occurrence order over the lexicographic
  /// enumeration. Throws BudgetExceeded before any work when the number of
  /// normalized vectors exceeds the budget.
  std::vector<EnumeratedMatrix> enumerate_matrices(std::int64_t r, std::size_t n) const;

  ClassPartition partition_classes(std::int64_t r, std::size_t n);

  PhitildeResult phitilde_search(std::int64_t r, std::size_t n_max);

  ConjectureReport verify_conjectures(std::int64_t r, std::size_t n);

  /// decide_equiv through the memo.
  bool equivalent(const EnumeratedMatrix& a, const EnumeratedMatrix& b);

  const DecisionMemo& memo() const { return memo_; }

 private:
  struct Partitioned {
    std::vector<EnumeratedMatrix> matrices;
    std::vector<Signature> signatures;
    std::vector<std::size_t> class_of;          // per matrix
    std::vector<std::size_t> class_leader;      // matrix index per class
  };
  Partitioned run_partition(std::int64_t r, std::size_t n);
  ClassPartition summarize(std::int64_t r, std::size_t n, const Partitioned& p) const;

  ClassifyOptions options_;
  DecisionMemo memo_;
};

/// Number of normalized weight vectors for (r, n): |Z_r^*|^max(n-3, 0).
BigInt normalized_vector_count(std::int64_t r, std::size_t n);

}  // namespace qlens
