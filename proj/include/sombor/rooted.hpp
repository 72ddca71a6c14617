#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

/// A vertex root, or an edge root given as an ordered pair. The order of an
/// edge root is presentational; both endpoints sit on level 1.
struct Root {
  Vertex first = 0;
  std::optional<Vertex> second;

  static Root at_vertex(Vertex v) { return Root{v, std::nullopt}; }
  static Root at_edge(Vertex u, Vertex v) { return Root{u, v}; }

  bool is_edge() const noexcept { return second.has_value(); }
  std::string to_string() const;

  bool operator==(const Root&) const = default;
};

/// Every vertex root (ascending id) followed by every edge root (u < v,
/// lexicographic).
std::vector<Root> all_roots(const Graph& tree);

/// A tree together with a root, parent links and levels (root level 1).
class RootedTree {
 public:
  const Graph& tree() const noexcept { return tree_; }
  const Root& root() const noexcept { return root_; }

  std::optional<Vertex> parent(Vertex v) const;
  int level(Vertex v) const;
  std::span<const Vertex> children(Vertex v) const;
  int level_count() const noexcept { return static_cast<int>(by_level_.size()); }
  /// Vertices of level i (1-based) in increasing id order.
  std::span<const Vertex> level_vertices(int level) const;

  /// True when v lies in the complete branch rooted at ancestor.
  bool in_branch(Vertex v, Vertex ancestor) const;
  /// Vertex set of the complete branch T_v.
  std::vector<Vertex> branch(Vertex v) const;

 private:
  friend RootedTree rooted_view(const Graph& tree, const Root& root);

  Graph tree_;
  Root root_;
  std::vector<int> parent_;  // -1 for level-1 vertices
  std::vector<int> level_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::vector<Vertex>> by_level_;
};

/// Throws InvalidArgument when the graph is not a tree or the root is not a
/// vertex / edge of it.
RootedTree rooted_view(const Graph& tree, const Root& root);

/// Per-level non-increasing degree lists (V_1, ..., V_k).
class LeveledDegreeSequence {
 public:
  LeveledDegreeSequence() = default;
  /// Sorts every level non-increasing. Throws InvalidArgument when the
  /// first level does not hold one or two entries, or a level is empty.
  explicit LeveledDegreeSequence(std::vector<std::vector<int>> levels);

  /// Levels separated by '/' or ';', entries by ',' (e.g. "3/2,2,1/1,1").
  static LeveledDegreeSequence parse(std::string_view text);

  const std::vector<std::vector<int>>& levels() const noexcept { return levels_; }
  int vertex_count() const noexcept;
  bool edge_rooted() const noexcept { return !levels_.empty() && levels_.front().size() == 2; }

  /// Level i+1 holds exactly as many vertices as level i has open child
  /// slots (deg for a sole vertex root, deg - 1 otherwise) and the last
  /// level opens none.
  bool is_consistent() const;

  std::string to_string() const;

  auto operator<=>(const LeveledDegreeSequence&) const = default;
  bool operator==(const LeveledDegreeSequence&) const = default;

 private:
  std::vector<std::vector<int>> levels_;
};

LeveledDegreeSequence leveled_degree_sequence(const RootedTree& rt);

}  // namespace sombor
