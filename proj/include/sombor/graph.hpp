#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sombor {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1. Adjacency lists are kept
/// sorted, so two graphs with the same edge set compare equal.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  static Graph from_edges(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  Vertex add_vertex();
  /// Throws InvalidArgument on self-loops, duplicates and unknown vertices.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_connected() const;
  bool is_tree() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Vertex degrees in non-increasing order.
std::vector<int> degree_sequence_of(const Graph& g);

/// Unordered endpoint-degree pair, stored with low <= high.
struct DegreePair {
  int low = 0;
  int high = 0;
  auto operator<=>(const DegreePair&) const = default;
};

/// Multiset of endpoint-degree pairs. Two graphs with equal multisets have
/// exactly the same (alpha-)Sombor index, which is how the library decides
/// index equality without comparing floating-point values.
class EdgeTypeMultiset {
 public:
  void add(int a, int b, std::size_t count = 1);

  const std::map<DegreePair, std::size_t>& counts() const noexcept { return counts_; }
  std::size_t total() const noexcept;

  /// Sum of count * (a^2 + b^2)^alpha, accumulated in key order with
  /// compensated summation.
  double evaluate(double alpha = 0.5) const;

  std::string to_string() const;

  auto operator<=>(const EdgeTypeMultiset&) const = default;
  bool operator==(const EdgeTypeMultiset&) const = default;

 private:
  std::map<DegreePair, std::size_t> counts_;
};

struct SomborValue {
  double value = 0.0;
  double alpha = 0.5;
  EdgeTypeMultiset edge_types;
};

/// (a^2 + b^2)^alpha; uses sqrt for alpha == 1/2.
double edge_weight(int a, int b, double alpha = 0.5);

EdgeTypeMultiset edge_type_multiset(const Graph& g);
SomborValue sombor_index(const Graph& g, double alpha = 0.5);

}  // namespace sombor
