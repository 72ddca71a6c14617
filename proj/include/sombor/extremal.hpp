#pragma once

#include <optional>
#include <vector>

#include "sombor/degseq.hpp"
#include "sombor/graph.hpp"
#include "sombor/rooted.hpp"

namespace sombor {

/// Greedy tree G(D): vertex i (breadth-first order) receives the i-th
/// largest degree, so larger degrees sit closer to the root and children of
/// larger-degree parents receive larger degrees. Minimizes the Sombor index
/// over all trees with degree sequence D.
Graph greedy_tree(const DegreeSequence& d);

/// Level greedy tree: children of the j-th vertex of a level occupy the
/// next block of the following level, whose degrees are handed out in
/// non-increasing order. Throws InvalidArgument on an inconsistent L.
RootedTree level_greedy_tree(const LeveledDegreeSequence& levels);

/// As level_greedy_tree, but the degrees of level h+1 are handed out in
/// non-decreasing order whenever h is odd.
RootedTree alternating_level_greedy_tree(const LeveledDegreeSequence& levels);

/// One recursive attachment of R_{d_t} while building M(D).
struct AttachmentStep {
  int anchor_label = 0;  // s, 1-based: v_s receives the merged branch
  Vertex anchor = 0;
  Vertex leaf = 0;       // leaf of v_s that becomes the root of R_{d_t}
  int anchor_degree = 0;
  int min_leaf_adjacent_degree = 0;  // over labelled vertices at that moment
};

/// Alternating greedy tree M(D) with its vertex labels.
///
/// labels[i] is v_{i+1}. Labels are assigned in non-decreasing degree
/// order. The roots of the merged R_{d_t} branches stay unlabelled; they
/// are listed in connectors, so labels and connectors together carry the
/// reduced degree sequence.
struct LabeledAltGreedyTree {
  Graph tree;
  std::vector<Vertex> labels;
  std::vector<Vertex> connectors;
  std::vector<AttachmentStep> attachments;
};

/// Builds M(d_1, ..., d_t). Base case t <= d_t + 1: the roots of
/// [d_1], ..., [d_{t-1}] are merged with distinct leaves of the star
/// [1 + d_t]. Otherwise M(d_{d_t}, ..., d_{t-1}) is built first and the
/// root of R_{d_t} = [[d_1], ..., [d_{d_t - 1}]] is merged with the
/// lowest-id leaf of v_s, s being the smallest label adjacent to a leaf.
/// The empty sequence yields K2.
LabeledAltGreedyTree alternating_greedy_tree(const ReducedDegreeSequence& r);

/// M(D) for a full degree sequence; (0) yields K1.
Graph alternating_greedy_graph(const DegreeSequence& d);

struct PropertyViolation {
  Root root;
  int level = 0;
  Vertex larger = 0;   // same-level vertex of strictly larger degree
  Vertex smaller = 0;
  int larger_children_degree = 0;   // the max (max check) or min (min check)
  int smaller_children_degree = 0;  // the min (max check) or max (min check)
};

struct PropertyReport {
  std::optional<PropertyViolation> violation;
  bool passed() const noexcept { return !violation.has_value(); }
};

/// Local certificate of maximality: whenever two vertices of one level have
/// deg(p) > deg(r) and both have children, every child of p has degree at
/// most that of every child of r.
PropertyReport check_max_property(const RootedTree& rt);

/// Dual certificate of minimality: children of the larger-degree vertex
/// all have degree at least that of every child of the smaller one.
PropertyReport check_min_property(const RootedTree& rt);

/// Scan over all_roots(tree); reports the first violation in root order.
PropertyReport check_max_property_all_roots(const Graph& tree);
PropertyReport check_min_property_all_roots(const Graph& tree);

/// sqrt(x^2 + y^2) - sqrt((x - 1)^2 + y^2) for x > 1, y > 0; increasing in
/// x, decreasing in y. Throws InvalidArgument outside the domain.
double phi(double x, double y);

}  // namespace sombor
