#include "sombor/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "sombor/errors.hpp"

namespace sombor {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw InvalidArgument("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Vertex Graph::add_vertex() {
  adjacency_.emplace_back();
  return vertex_count() - 1;
}

void Graph::check_vertex(Vertex v) const {
  if (!contains(v)) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range [0, " +
                          std::to_string(vertex_count()) + ")");
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  auto& nu = adjacency_[static_cast<std::size_t>(u)];
  auto pos = std::lower_bound(nu.begin(), nu.end(), v);
  if (pos != nu.end() && *pos == v) {
    throw InvalidArgument("duplicate edge " + std::to_string(std::min(u, v)) + " " +
                          std::to_string(std::max(u, v)));
  }
  nu.insert(pos, v);
  auto& nv = adjacency_[static_cast<std::size_t>(v)];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (!has_edge(u, v)) {
    throw InvalidArgument("no edge " + std::to_string(u) + " " + std::to_string(v));
  }
  auto& nu = adjacency_[static_cast<std::size_t>(u)];
  nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
  auto& nv = adjacency_[static_cast<std::size_t>(v)];
  nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
  --edge_count_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& nu = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[static_cast<std::size_t>(v)];
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[static_cast<std::size_t>(u)]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_connected() const {
  if (vertex_count() <= 1) return true;
  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : adjacency_[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == vertex_count();
}

bool Graph::is_tree() const {
  return vertex_count() >= 1 &&
         edge_count_ + 1 == static_cast<std::size_t>(vertex_count()) && is_connected();
}

std::vector<int> degree_sequence_of(const Graph& g) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

void EdgeTypeMultiset::add(int a, int b, std::size_t count) {
  if (count == 0) return;
  counts_[DegreePair{std::min(a, b), std::max(a, b)}] += count;
}

std::size_t EdgeTypeMultiset::total() const noexcept {
  std::size_t sum = 0;
  for (const auto& [pair, count] : counts_) sum += count;
  return sum;
}

double EdgeTypeMultiset::evaluate(double alpha) const {
  // Neumaier summation; key order makes the result a function of the
  // multiset alone.
  double sum = 0.0;
  double compensation = 0.0;
  for (const auto& [pair, count] : counts_) {
    const double term = static_cast<double>(count) * edge_weight(pair.low, pair.high, alpha);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

std::string EdgeTypeMultiset::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [pair, count] : counts_) {
    if (!first) os << ' ';
    first = false;
    os << '{' << pair.low << ',' << pair.high << "}x" << count;
  }
  return os.str();
}

double edge_weight(int a, int b, double alpha) {
  const double s = static_cast<double>(a) * a + static_cast<double>(b) * b;
  if (alpha == 0.5) return std::sqrt(s);
  if (alpha == 1.0) return s;
  return std::pow(s, alpha);
}

EdgeTypeMultiset edge_type_multiset(const Graph& g) {
  EdgeTypeMultiset m;
  for (auto [u, v] : g.edges()) m.add(g.degree(u), g.degree(v));
  return m;
}

SomborValue sombor_index(const Graph& g, double alpha) {
  SomborValue out;
  out.alpha = alpha;
  out.edge_types = edge_type_multiset(g);
  out.value = out.edge_types.evaluate(alpha);
  return out;
}

}  // namespace sombor
