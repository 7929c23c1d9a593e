#include "adespec/graphs/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "adespec/error.hpp"

namespace adespec::graphs {

BipartiteGraph::BipartiteGraph(std::size_t vertex_count,
                               const std::vector<Edge>& edges,
                               std::size_t distinguished, std::string label)
    : n_(vertex_count), label_(std::move(label)) {
  if (n_ == 0) fail(ErrorKind::range, "graph with no vertices");
  if (distinguished >= n_) fail(ErrorKind::range, "distinguished vertex out of range");
  std::vector<std::vector<std::size_t>> nbr(n_);
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u >= n_ || v >= n_) fail(ErrorKind::range, "edge endpoint out of range");
    if (u == v) fail(ErrorKind::range, "self-loop at vertex " + std::to_string(u));
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      fail(ErrorKind::range, "repeated edge " + std::to_string(u) + "-" + std::to_string(v));
    nbr[u].push_back(v);
    nbr[v].push_back(u);
  }
  for (auto& list : nbr) std::sort(list.begin(), list.end());

  // Breadth-first renumbering from the distinguished vertex.
  std::vector<long> depth(n_, -1);
  std::vector<std::size_t> order;
  std::deque<std::size_t> queue{distinguished};
  depth[distinguished] = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    order.push_back(u);
    for (auto v : nbr[u]) {
      if (depth[v] < 0) {
        depth[v] = depth[u] + 1;
        queue.push_back(v);
      } else if ((depth[v] - depth[u]) % 2 == 0) {
        fail(ErrorKind::range, "graph is not bipartite");
      }
    }
  }
  if (order.size() != n_) fail(ErrorKind::range, "graph is not connected");

  std::vector<std::size_t> pos(n_);
  for (std::size_t i = 0; i < n_; ++i) pos[order[i]] = i;
  adj_ = IntMatrix(n_, n_);
  even_.assign(n_, false);
  for (std::size_t i = 0; i < n_; ++i) even_[i] = depth[order[i]] % 2 == 0;
  for (auto [u, v] : edges) {
    adj_(pos[u], pos[v]) = 1;
    adj_(pos[v], pos[u]) = 1;
  }
}

std::size_t BipartiteGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < n_; ++j) d += adj_(v, j) != 0;
  return d;
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (adj_(i, j) != 0) out.emplace_back(i, j);
  return out;
}

BipartiteGraph BipartiteGraph::rebased(std::size_t v) const {
  return BipartiteGraph(n_, edges(), v, label_);
}

BipartiteDecomposition decompose(const BipartiteGraph& g) {
  BipartiteDecomposition d;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    (g.is_even(v) ? d.even_vertices : d.odd_vertices).push_back(v);
  d.M = IntMatrix(d.even_vertices.size(), d.odd_vertices.size());
  for (std::size_t i = 0; i < d.even_vertices.size(); ++i)
    for (std::size_t j = 0; j < d.odd_vertices.size(); ++j)
      d.M(i, j) = g.adjacency()(d.even_vertices[i], d.odd_vertices[j]);
  d.L = d.M * d.M.transposed();
  d.N = d.M.transposed() * d.M;
  return d;
}

namespace {

// Triple point 0 with arms of lengths a, b, c; the distinguished vertex ends
// arm c (the triple point itself when c = 0).
BipartiteGraph triple_point(long a, long b, long c, std::string label) {
  std::vector<Edge> edges;
  std::size_t next = 1;
  auto arm = [&](long len) {
    std::size_t prev = 0;
    for (long i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    return prev;
  };
  arm(a);
  arm(b);
  std::size_t end_c = arm(c);
  return BipartiteGraph(next, edges, end_c, std::move(label));
}

BipartiteGraph path(long n, std::string label) {
  std::vector<Edge> edges;
  for (long i = 0; i + 1 < n; ++i)
    edges.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1));
  return BipartiteGraph(static_cast<std::size_t>(n), edges, 0, std::move(label));
}

BipartiteGraph cycle(long n, std::string label) {
  std::vector<Edge> edges;
  for (long i = 0; i < n; ++i)
    edges.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>((i + 1) % n));
  return BipartiteGraph(static_cast<std::size_t>(n), edges, 0, std::move(label));
}

// D(n) with the distinguished vertex at one of the two fork leaves.
BipartiteGraph d_fork_end(long n, std::string label) {
  // Vertex 0 is the fork leaf, 1 the triple point, 2 the other leaf, then
  // the tail 3 .. n-1.
  std::vector<Edge> edges{{0, 1}, {1, 2}};
  std::size_t prev = 1;
  for (long v = 3; v < n; ++v) {
    edges.emplace_back(prev, static_cast<std::size_t>(v));
    prev = static_cast<std::size_t>(v);
  }
  return BipartiteGraph(static_cast<std::size_t>(n), edges, 0, std::move(label));
}

BipartiteGraph d_extended(long n, std::string label) {
  // n + 1 vertices: 0 distinguished leaf, 1 leaf, then the spine from the
  // first triple point to the second (n - 3 vertices), then two leaves.
  std::vector<Edge> edges;
  const std::size_t spine_len = static_cast<std::size_t>(n - 3);
  const std::size_t first = 2;
  const std::size_t last = first + spine_len - 1;
  edges.emplace_back(0, first);
  edges.emplace_back(1, first);
  for (std::size_t v = first; v < last; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(last, last + 1);
  edges.emplace_back(last, last + 2);
  return BipartiteGraph(last + 3, edges, 0, std::move(label));
}

}  // namespace

BipartiteGraph build_graph(const GraphName& name) {
  if (name.is_symbolic())
    fail(ErrorKind::not_finite, name.str() + " has no finite adjacency matrix");
  name.validate();
  const std::string label = name.str();
  switch (name.tag) {
    case GraphTag::A: return path(name.a, label);
    case GraphTag::D: return triple_point(1, 1, name.a - 3, label);
    case GraphTag::E6: return triple_point(2, 1, 2, label);
    case GraphTag::E7: return triple_point(2, 1, 3, label);
    case GraphTag::E8: return triple_point(2, 1, 4, label);
    case GraphTag::A1ext: return cycle(name.a, label);
    case GraphTag::D1ext: return d_extended(name.a, label);
    case GraphTag::E6ext: return triple_point(2, 2, 2, label);
    case GraphTag::E7ext: return triple_point(3, 1, 3, label);
    case GraphTag::E8ext: return triple_point(2, 1, 5, label);
    case GraphTag::F: return triple_point(name.a, name.b, name.c, label);
    default: break;
  }
  fail(ErrorKind::consistency, "unhandled graph tag");
}

BipartiteGraph truncate_infinite(const GraphName& name, std::size_t size) {
  const long n = static_cast<long>(size);
  switch (name.tag) {
    case GraphTag::AInf:
      if (n < 1) fail(ErrorKind::range, "AInf truncation needs size >= 1");
      return path(n, "AInf~A(" + std::to_string(n) + ")");
    case GraphTag::DInf:
      if (n < 4) fail(ErrorKind::range, "DInf truncation needs size >= 4");
      return d_fork_end(n, "DInf~D(" + std::to_string(n) + ")");
    case GraphTag::AZZ:
      if (n < 2) fail(ErrorKind::range, "AZZ truncation needs size >= 2");
      return cycle(2 * n, "AZZ~A1ext(" + std::to_string(2 * n) + ")");
    default:
      fail(ErrorKind::type, name.str() + " is finite; nothing to truncate");
  }
}

std::vector<BigInt> walk_counts(const BipartiteGraph& g, std::size_t max_length) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> nbr(n);
  for (auto [u, v] : g.edges()) {
    nbr[u].push_back(v);
    nbr[v].push_back(u);
  }
  std::vector<BigInt> cur(n, 0), next(n);
  cur[g.distinguished()] = 1;
  std::vector<BigInt> out;
  out.reserve(max_length + 1);
  for (std::size_t l = 0; l <= max_length; ++l) {
    out.push_back(cur[g.distinguished()]);
    for (std::size_t v = 0; v < n; ++v) {
      next[v] = 0;
      for (auto w : nbr[v]) next[v] += cur[w];
    }
    std::swap(cur, next);
  }
  return out;
}

BigInt loop_count(const BipartiteGraph& g, std::size_t length) {
  if (length % 2 != 0)
    fail(ErrorKind::parity, "loop length " + std::to_string(length) + " is odd");
  return walk_counts(g, length).back();
}

std::vector<BigInt> loop_counts(const BipartiteGraph& g, std::size_t max_k) {
  auto walks = walk_counts(g, 2 * max_k);
  std::vector<BigInt> out;
  for (std::size_t k = 0; k <= max_k; ++k) out.push_back(walks[2 * k]);
  return out;
}

IntMatrix matrix_power(const IntMatrix& a, std::size_t exponent) {
  IntMatrix r = IntMatrix::identity(a.rows());
  for (std::size_t i = 0; i < exponent; ++i) r = r * a;
  return r;
}

std::vector<GraphName> finite_catalog() {
  std::vector<GraphName> out;
  for (long n = 2; n <= 12; ++n) out.push_back(GraphName::A(n));
  for (long n = 4; n <= 12; ++n) out.push_back(GraphName::D(n));
  out.push_back(GraphName::E6());
  out.push_back(GraphName::E7());
  out.push_back(GraphName::E8());
  for (long n = 2; n <= 8; ++n) out.push_back(GraphName::A1ext(2 * n));
  for (long n = 4; n <= 12; ++n) out.push_back(GraphName::D1ext(n));
  out.push_back(GraphName::E6ext());
  out.push_back(GraphName::E7ext());
  out.push_back(GraphName::E8ext());
  return out;
}

std::vector<GraphName> full_catalog() {
  auto out = finite_catalog();
  out.push_back(GraphName::AInf());
  out.push_back(GraphName::DInf());
  out.push_back(GraphName::AZZ());
  return out;
}

}  // namespace adespec::graphs
