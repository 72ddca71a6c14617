#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "sombor/canonical.hpp"
#include "sombor/degseq.hpp"
#include "sombor/graph.hpp"
#include "sombor/rooted.hpp"

namespace sombor {

/// Result of an index-changing surgery: the new graph and
/// delta = SO_alpha(new) - SO_alpha(old), computed from the edges the
/// surgery touches.
struct Surgery {
  Graph graph;
  double delta = 0.0;
};

/// T' = T - vw - uz + vz + uw, with z a child of u and w a child of v.
///
/// The degree sequence is preserved. When deg(u) < deg(v) and
/// deg(w) < deg(z) the index strictly drops; when deg(u) == deg(v) or
/// deg(w) == deg(z) the edge-type multiset is unchanged. Throws
/// InvalidArgument if the parent/child relations do not hold, u == v, or
/// one branch contains the other's parent.
Surgery branch_swap(const RootedTree& rt, Vertex u, Vertex z, Vertex v, Vertex w,
                    double alpha = 0.5);

struct ClosureOptions {
  std::size_t state_cap = 100000;
};

/// Canonical forms reachable from `tree` by repeatedly exchanging complete
/// branches hanging from two distinct vertices of equal degree (under any
/// rooting in which both are parents). Throws CapExceeded when more than
/// state_cap classes are discovered.
std::set<CanonicalCode> same_degree_swap_closure(const Graph& tree,
                                                 const ClosureOptions& options = {});

enum class MajorizationDirection {
  Unchanged,  // D' == D
  Increased,  // D ◁ D', D' != D
  Decreased,  // D' ◁ D, D' != D
};

struct BranchMove {
  Graph graph;
  double delta = 0.0;
  DegreeSequence before;
  DegreeSequence after;
  MajorizationDirection direction = MajorizationDirection::Unchanged;
};

/// t - y x_child + x x_child: the branch hanging from y through x_child is
/// re-hung below x. Throws InvalidArgument when x_child is not adjacent to
/// y, x == y, or x lies inside the moved branch.
BranchMove move_branch(const Graph& tree, Vertex x, Vertex y, Vertex x_child,
                       double alpha = 0.5);

/// Root placing x and y on the same level: the middle vertex of the x-y
/// path when its length is even, the middle edge otherwise.
Root same_level_root(const Graph& tree, Vertex x, Vertex y);

/// Maximal pendent path u - start - ... - end with every inner vertex of
/// degree 2 and end a leaf; length counts the path vertices other than u.
struct PendentPath {
  Vertex anchor = 0;
  Vertex start = 0;
  Vertex end = 0;
  int length = 0;
};

/// Pendent paths hanging from u, ordered by start vertex.
std::vector<PendentPath> pendent_paths(const Graph& g, Vertex u);

struct PathMerge {
  Graph graph;
  double delta = 0.0;
  PendentPath moved;   // detached from its anchor u at `start`
  PendentPath target;  // receives moved.start below its leaf end
};

/// G = G' - uw + zw: the pendent path starting at w next to u is re-hung
/// from the leaf end z of a pendent path of v. Requires
/// deg(u) >= deg(v) >= 3. With u == v the two paths must differ. When no
/// start vertex is given, the lowest-id one is used. Throws InvalidArgument
/// on unmet preconditions.
PathMerge pendent_path_merge(const Graph& g, Vertex u, Vertex v,
                             std::optional<Vertex> u_path_start = std::nullopt,
                             std::optional<Vertex> v_path_start = std::nullopt);

struct PathMergeRun {
  Graph graph;
  std::vector<PathMerge> steps;
};

/// Applies pendent_path_merge until no vertex of degree >= 3 carries a
/// mergeable pendent path. u is the highest-degree carrier (lowest id on
/// ties), v the next one, or u itself when it is the only carrier and has
/// two paths.
PathMergeRun merge_pendent_paths(const Graph& g);

/// Cycle 0..k-1 with the path k, k+1, ..., n-1 hanging from vertex 0.
/// Throws InvalidArgument unless 3 <= k <= n.
Graph tailed_cycle(int n, int k);

}  // namespace sombor
