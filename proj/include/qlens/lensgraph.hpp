#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qlens/bigint.hpp"

namespace qlens {

/// The data (r; m_1, ..., m_n) of a quantum lens space: a modulus r > 2 and
/// n >= 1 units of Z/rZ, stored as canonical residues in [1, r - 1].
class LensParams {
 public:
  /// Entries are reduced modulo r first, so negative weights are accepted.
  /// Throws Error(InvalidParams) naming the offending m_i (1-based).
  LensParams(std::int64_t r, std::vector<std::int64_t> m);

  std::int64_t modulus() const noexcept { return r_; }
  std::size_t dimension() const noexcept { return m_.size(); }
  std::span<const std::int64_t> weights() const noexcept { return m_; }
  /// 0-based access to m_{i+1}.
  std::int64_t weight(std::size_t i) const { return m_.at(i); }

  /// "(r;(m_1,...,m_n))"
  std::string to_string() const;

  bool operator==(const LensParams&) const = default;

 private:
  std::int64_t r_;
  std::vector<std::int64_t> m_;
};

/// Every weight multiplied by the unit b modulo r.
LensParams scaled(const LensParams& params, std::int64_t b);

enum class GraphKind { M, N };

/// Vertex (s, t) is stored at index s * r + t, subgraph s 0-based.
class LensGraph {
 public:
  LensGraph(GraphKind kind, std::int64_t r, std::size_t n,
            std::vector<std::vector<std::size_t>> adjacency);

  GraphKind kind() const noexcept { return kind_; }
  std::int64_t modulus() const noexcept { return r_; }
  std::size_t subgraphs() const noexcept { return n_; }
  std::size_t vertex_count() const noexcept { return adjacency_.size(); }

  std::size_t vertex(std::size_t subgraph, std::int64_t residue) const {
    return subgraph * static_cast<std::size_t>(r_) + static_cast<std::size_t>(residue);
  }
  std::size_t subgraph_of(std::size_t v) const { return v / static_cast<std::size_t>(r_); }
  std::int64_t residue_of(std::size_t v) const {
    return static_cast<std::int64_t>(v % static_cast<std::size_t>(r_));
  }
  const std::vector<std::size_t>& out_neighbors(std::size_t v) const { return adjacency_.at(v); }

 private:
  GraphKind kind_;
  std::int64_t r_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

LensGraph build_graph(const LensParams& params, GraphKind kind);

inline constexpr std::uint64_t kDefaultPathBudget = 100'000'000;

/// Brute-force count of legal paths from the 0-vertex of subgraph `source` to
/// the 0-vertex of subgraph `target` (0-based, source <= target).
///
/// A path is legal when it visits some non-0 vertex and, once it steps onto a
/// 0-vertex after leaving the start, it only visits 0-vertices afterwards. On
/// M-kind graphs this is the same as having no intermediate 0-vertex.
///
/// Iterative depth-first search; every path prefix pushed counts against
/// `budget` and exceeding it throws Error(TooLarge). Exponential: meant for
/// r <= 7 and n <= 4.
BigInt enumerate_legal_paths(const LensGraph& graph, std::size_t source, std::size_t target,
                             std::uint64_t budget = kDefaultPathBudget);

/// Graphviz rendering with vertex labels "s:t" (s 1-based).
std::string to_dot(const LensGraph& graph);

}  // namespace qlens
