#include "sombor/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

#include "sombor/errors.hpp"

namespace sombor {

namespace {

RootedTree build_leveled(const LeveledDegreeSequence& sequence, bool alternating) {
  if (!sequence.is_consistent()) {
    throw InvalidArgument("inconsistent leveled degree sequence " + sequence.to_string());
  }
  const auto& levels = sequence.levels();
  Graph g(sequence.vertex_count());
  std::vector<int> degree(static_cast<std::size_t>(sequence.vertex_count()), 0);
  std::vector<std::vector<Vertex>> ids(levels.size());

  Vertex next = 0;
  for (int d : levels[0]) {
    degree[static_cast<std::size_t>(next)] = d;
    ids[0].push_back(next++);
  }
  const bool single_root = ids[0].size() == 1;
  if (!single_root) g.add_edge(0, 1);

  for (std::size_t h = 0; h + 1 < levels.size(); ++h) {
    const auto& below = levels[h + 1];
    // Levels are 1-based in the construction, so level h+1 is odd when h is even.
    const bool reversed = alternating && h % 2 == 0;
    std::size_t slot = 0;
    for (Vertex p : ids[h]) {
      const int open = degree[static_cast<std::size_t>(p)] - ((h == 0 && single_root) ? 0 : 1);
      for (int c = 0; c < open; ++c, ++slot) {
        const Vertex child = next++;
        degree[static_cast<std::size_t>(child)] =
            reversed ? below[below.size() - 1 - slot] : below[slot];
        g.add_edge(p, child);
        ids[h + 1].push_back(child);
      }
    }
  }
  return rooted_view(g, single_root ? Root::at_vertex(0) : Root::at_edge(0, 1));
}

// Attaches a pseudo-leaf [d] (root plus d - 1 leaves) below `parent` and
// returns its root.
Vertex attach_pseudo_leaf(Graph& g, Vertex parent, int d) {
  const Vertex root = g.add_vertex();
  g.add_edge(parent, root);
  for (int i = 0; i < d - 1; ++i) g.add_edge(root, g.add_vertex());
  return root;
}

void build_alternating(std::span<const int> r, LabeledAltGreedyTree& out) {
  Graph& g = out.tree;
  const int t = static_cast<int>(r.size());
  const int dt = r.back();

  if (t <= dt + 1) {
    const Vertex center = g.add_vertex();
    std::vector<Vertex> leaves;
    for (int i = 0; i < dt; ++i) {
      leaves.push_back(g.add_vertex());
      g.add_edge(center, leaves.back());
    }
    out.labels.push_back(center);
    // Smallest remaining degree first, so labels stay degree-sorted.
    for (int i = t - 2, leaf = 0; i >= 0; --i, ++leaf) {
      const Vertex root = leaves[static_cast<std::size_t>(leaf)];
      for (int c = 0; c < r[static_cast<std::size_t>(i)] - 1; ++c) g.add_edge(root, g.add_vertex());
      out.labels.push_back(root);
    }
    return;
  }

  build_alternating(r.subspan(static_cast<std::size_t>(dt - 1), static_cast<std::size_t>(t - dt)),
                    out);

  AttachmentStep step;
  step.min_leaf_adjacent_degree = std::numeric_limits<int>::max();
  bool found = false;
  for (std::size_t i = 0; i < out.labels.size(); ++i) {
    const Vertex v = out.labels[i];
    Vertex leaf = -1;
    for (Vertex w : g.neighbors(v)) {
      if (g.degree(w) == 1) {
        leaf = w;
        break;
      }
    }
    if (leaf < 0) continue;
    step.min_leaf_adjacent_degree = std::min(step.min_leaf_adjacent_degree, g.degree(v));
    if (!found) {
      found = true;
      step.anchor_label = static_cast<int>(i) + 1;
      step.anchor = v;
      step.leaf = leaf;
      step.anchor_degree = g.degree(v);
    }
  }
  if (!found) throw Error("alternating_greedy_tree: no labelled vertex carries a leaf");
  out.attachments.push_back(step);
  out.connectors.push_back(step.leaf);
  for (int i = dt - 2; i >= 0; --i) {
    out.labels.push_back(attach_pseudo_leaf(g, step.leaf, r[static_cast<std::size_t>(i)]));
  }
}

struct ChildDegrees {
  int min = 0;
  int max = 0;
};

ChildDegrees child_degrees(const RootedTree& rt, Vertex v) {
  const Graph& g = rt.tree();
  ChildDegrees out{std::numeric_limits<int>::max(), 0};
  for (Vertex c : rt.children(v)) {
    out.min = std::min(out.min, g.degree(c));
    out.max = std::max(out.max, g.degree(c));
  }
  return out;
}

// witness(p_children, r_children) returns the offending (p, r) degree pair,
// or nothing when the pair satisfies the property.
template <class Witness>
PropertyReport check_levels(const RootedTree& rt, Witness witness) {
  const Graph& g = rt.tree();
  for (int level = 1; level <= rt.level_count(); ++level) {
    const auto vs = rt.level_vertices(level);
    for (Vertex p : vs) {
      if (rt.children(p).empty()) continue;
      for (Vertex r : vs) {
        if (g.degree(p) <= g.degree(r) || rt.children(r).empty()) continue;
        if (auto w = witness(child_degrees(rt, p), child_degrees(rt, r))) {
          return PropertyReport{PropertyViolation{rt.root(), level, p, r, w->first, w->second}};
        }
      }
    }
  }
  return {};
}

template <class Check>
PropertyReport scan_all_roots(const Graph& tree, Check check) {
  for (const Root& root : all_roots(tree)) {
    auto report = check(rooted_view(tree, root));
    if (!report.passed()) return report;
  }
  return {};
}

}  // namespace

Graph greedy_tree(const DegreeSequence& d) {
  const int n = d.order();
  Graph g(n);
  Vertex next = 1;
  for (Vertex v = 0; v < n; ++v) {
    const int open = d[static_cast<std::size_t>(v)] - (v == 0 ? 0 : 1);
    for (int c = 0; c < open; ++c) g.add_edge(v, next++);
  }
  return g;
}

RootedTree level_greedy_tree(const LeveledDegreeSequence& levels) {
  return build_leveled(levels, false);
}

RootedTree alternating_level_greedy_tree(const LeveledDegreeSequence& levels) {
  return build_leveled(levels, true);
}

LabeledAltGreedyTree alternating_greedy_tree(const ReducedDegreeSequence& r) {
  LabeledAltGreedyTree out;
  if (r.internal_count() == 0) {
    out.tree = Graph(2);
    out.tree.add_edge(0, 1);
    return out;
  }
  build_alternating(r.internal(), out);
  return out;
}

Graph alternating_greedy_graph(const DegreeSequence& d) {
  if (d.order() == 1) return Graph(1);
  return alternating_greedy_tree(reduce(d)).tree;
}

PropertyReport check_max_property(const RootedTree& rt) {
  return check_levels(rt, [](ChildDegrees p, ChildDegrees r) -> std::optional<std::pair<int, int>> {
    if (p.max <= r.min) return std::nullopt;
    return std::pair{p.max, r.min};
  });
}

PropertyReport check_min_property(const RootedTree& rt) {
  return check_levels(rt, [](ChildDegrees p, ChildDegrees r) -> std::optional<std::pair<int, int>> {
    if (p.min >= r.max) return std::nullopt;
    return std::pair{p.min, r.max};
  });
}

PropertyReport check_max_property_all_roots(const Graph& tree) {
  return scan_all_roots(tree, [](const RootedTree& rt) { return check_max_property(rt); });
}

PropertyReport check_min_property_all_roots(const Graph& tree) {
  return scan_all_roots(tree, [](const RootedTree& rt) { return check_min_property(rt); });
}

double phi(double x, double y) {
  if (!(x > 1.0) || !(y > 0.0)) throw InvalidArgument("phi requires x > 1 and y > 0");
  return std::hypot(x, y) - std::hypot(x - 1.0, y);
}

}  // namespace sombor
