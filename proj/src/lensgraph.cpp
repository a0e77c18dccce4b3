#include "qlens/lensgraph.hpp"

#include <sstream>
#include <utility>

#include "qlens/error.hpp"
#include "qlens/numtheory.hpp"

namespace qlens {

LensParams::LensParams(std::int64_t r, std::vector<std::int64_t> m) : r_(r), m_(std::move(m)) {
  if (r_ <= 2) {
    throw Error(Errc::InvalidParams, "modulus r must exceed 2, got " + std::to_string(r_));
  }
  if (m_.empty()) {
    throw Error(Errc::InvalidParams, "weight vector m must be non-empty");
  }
  for (std::size_t i = 0; i < m_.size(); ++i) {
    const std::int64_t given = m_[i];
    m_[i] = reduce_mod(given, r_);
    if (gcd(m_[i], r_) != 1) {
      throw Error(Errc::InvalidParams, "m_" + std::to_string(i + 1) + " = " +
                                           std::to_string(given) + " is not a unit modulo " +
                                           std::to_string(r_));
    }
  }
}

std::string LensParams::to_string() const {
  std::string out = "(" + std::to_string(r_) + ";(";
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(m_[i]);
  }
  return out + "))";
}

LensParams scaled(const LensParams& params, std::int64_t b) {
  const std::int64_t r = params.modulus();
  std::vector<std::int64_t> m(params.weights().begin(), params.weights().end());
  for (auto& w : m) w = reduce_mod(w * reduce_mod(b, r), r);
  return LensParams(r, std::move(m));
}

LensGraph::LensGraph(GraphKind kind, std::int64_t r, std::size_t n,
                     std::vector<std::vector<std::size_t>> adjacency)
    : kind_(kind), r_(r), n_(n), adjacency_(std::move(adjacency)) {}

LensGraph build_graph(const LensParams& params, GraphKind kind) {
  const std::int64_t r = params.modulus();
  const std::size_t n = params.dimension();
  const auto ru = static_cast<std::size_t>(r);
  std::vector<std::vector<std::size_t>> adj(n * ru);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::int64_t t = 0; t < r; ++t) {
      const auto next = static_cast<std::size_t>(reduce_mod(t + params.weight(s), r));
      auto& out = adj[s * ru + static_cast<std::size_t>(t)];
      if (kind == GraphKind::M) {
        for (std::size_t s2 = s; s2 < n; ++s2) out.push_back(s2 * ru + next);
      } else {
        out.push_back(s * ru + next);
        if (s + 1 < n) out.push_back((s + 1) * ru + static_cast<std::size_t>(t));
      }
    }
  }
  return LensGraph(kind, r, n, std::move(adj));
}

namespace {

struct Frame {
  std::size_t vertex;
  bool on_zero_tail;  // a 0-vertex other than the start has been reached
  bool left_zero;     // some non-0 vertex has been visited
};

}  // namespace

BigInt enumerate_legal_paths(const LensGraph& graph, std::size_t source, std::size_t target,
                             std::uint64_t budget) {
  if (source > target || target >= graph.subgraphs()) {
    throw Error(Errc::IndexOutOfRange, "need source <= target < n");
  }
  std::uint64_t visited = 0;
  BigInt count = 0;
  const std::size_t goal = graph.vertex(target, 0);
  std::vector<Frame> stack;
  stack.push_back({graph.vertex(source, 0), false, false});

  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (++visited > budget) {
      throw Error(Errc::TooLarge, "legal-path enumeration exceeded budget of " +
                                      std::to_string(budget) + " prefixes");
    }
    for (std::size_t next : graph.out_neighbors(f.vertex)) {
      if (graph.subgraph_of(next) > target) continue;
      const bool zero = graph.residue_of(next) == 0;
      if (graph.kind() == GraphKind::M) {
        // Any 0-vertex ends the path; only the target's counts.
        if (zero) {
          if (next == goal) ++count;
        } else {
          stack.push_back({next, false, true});
        }
        continue;
      }
      if (f.on_zero_tail && !zero) continue;
      const Frame g{next, f.on_zero_tail || zero, f.left_zero || !zero};
      if (next == goal && g.left_zero) ++count;
      stack.push_back(g);
    }
  }
  return count;
}

std::string to_dot(const LensGraph& graph) {
  std::ostringstream out;
  out << "digraph " << (graph.kind() == GraphKind::M ? "M" : "N") << " {\n";
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    out << "  v" << v << " [label=\"" << graph.subgraph_of(v) + 1 << ':' << graph.residue_of(v)
        << "\"];\n";
  }
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    for (std::size_t w : graph.out_neighbors(v)) out << "  v" << v << " -> v" << w << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace qlens
