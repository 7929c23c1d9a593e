#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "adespec/algebra/matrix.hpp"
#include "adespec/graphs/graph_name.hpp"

namespace adespec::graphs {

using algebra::BigInt;
using algebra::IntMatrix;

using Edge = std::pair<std::size_t, std::size_t>;

/// Finite connected bipartite simple graph with a distinguished vertex.
///
/// Vertices are renumbered breadth-first from the distinguished vertex, which
/// becomes vertex 0; a vertex is even when its BFS depth is even.
class BipartiteGraph {
 public:
  /// Throws Error(range) for self-loops, repeated edges, out-of-range ids,
  /// disconnected or non-bipartite input.
  BipartiteGraph(std::size_t vertex_count, const std::vector<Edge>& edges,
                 std::size_t distinguished, std::string label = {});

  std::size_t vertex_count() const { return n_; }
  std::size_t distinguished() const { return 0; }
  const IntMatrix& adjacency() const { return adj_; }
  bool is_even(std::size_t v) const { return even_.at(v); }
  std::size_t degree(std::size_t v) const;
  std::vector<Edge> edges() const;
  const std::string& label() const { return label_; }

  /// Same graph with vertex v (in current numbering) as the distinguished one.
  BipartiteGraph rebased(std::size_t v) const;

 private:
  std::size_t n_;
  IntMatrix adj_;
  std::vector<bool> even_;
  std::string label_;
};

/// Block form of the adjacency matrix: Delta = [[0, M], [M^t, 0]].
struct BipartiteDecomposition {
  IntMatrix M;  // even rows (distinguished first) x odd columns
  IntMatrix L;  // M M^t
  IntMatrix N;  // M^t M
  std::vector<std::size_t> even_vertices;
  std::vector<std::size_t> odd_vertices;
};

BipartiteDecomposition decompose(const BipartiteGraph& g);

/// Builds a finite catalog graph. Throws Error(not_finite) for AInf, DInf
/// and AZZ, Error(range) for bad parameters.
BipartiteGraph build_graph(const GraphName& name);

/// Finite stand-in for a symbolic graph: AInf -> A(size), DInf -> D(size)
/// with the distinguished vertex at a fork end, AZZ -> A1ext(2 size). Loop
/// counts of length 2k agree with the infinite graph whenever 2k < size.
/// Throws Error(type) for finite names.
BipartiteGraph truncate_infinite(const GraphName& name, std::size_t size);

/// (Delta^length)_{11}. Throws Error(parity) for odd lengths.
BigInt loop_count(const BipartiteGraph& g, std::size_t length);

/// loop(0), loop(2), ..., loop(2 max_k).
std::vector<BigInt> loop_counts(const BipartiteGraph& g, std::size_t max_k);

/// (Delta^l)_{11} for l = 0..max_length, odd lengths included.
std::vector<BigInt> walk_counts(const BipartiteGraph& g, std::size_t max_length);

/// Integer matrix power by repeated multiplication.
IntMatrix matrix_power(const IntMatrix& a, std::size_t exponent);

/// The finite catalog exercised by the verification suite: A(2..12),
/// D(4..12), E6, E7, E8, A1ext(4..16), D1ext(4..12), E6ext, E7ext, E8ext.
std::vector<GraphName> finite_catalog();

/// Every catalog name including the symbolic ones.
std::vector<GraphName> full_catalog();

}  // namespace adespec::graphs
