#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sombor/canonical.hpp"
#include "sombor/degseq.hpp"
#include "sombor/graph.hpp"

namespace sombor {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Reads SOMBOR_CAP from the environment, falling back to `fallback`.
std::uint64_t enumeration_cap_from_env(std::uint64_t fallback = kDefaultEnumerationCap);

struct EnumerationOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
};

/// All partitions of 2(n - 1) into n positive parts, non-increasing, in
/// reverse lexicographic order; n == 1 yields (0).
std::vector<DegreeSequence> all_tree_degree_sequences(int n);

/// Tree on n vertices from a Prüfer code of length n - 2.
Graph decode_pruefer(std::span<const Vertex> code, int n);

/// (n - 2)! / prod (d_i - 1)!, the number of labelled trees with vertex i
/// of degree d_i; saturates at UINT64_MAX.
std::uint64_t labeled_tree_count(const DegreeSequence& d);

/// One tree per isomorphism class with degree sequence d, in order of first
/// appearance among the lexicographically ordered Prüfer codes. Throws
/// CapExceeded when labeled_tree_count(d) exceeds the cap.
std::vector<Graph> enumerate_trees(const DegreeSequence& d, const EnumerationOptions& options = {});

/// Every tree of order n (one per class), grouped by degree sequence.
std::vector<Graph> all_trees(int n, const EnumerationOptions& options = {});

struct ExtremalScan {
  DegreeSequence sequence;
  std::size_t tree_count = 0;
  SomborValue min_value;
  SomborValue max_value;
  std::set<CanonicalCode> argmin;
  std::set<CanonicalCode> argmax;
  std::size_t distinct_edge_type_classes = 0;
};

/// Exact extremes over T_D. Trees are grouped by edge-type multiset; argmin
/// and argmax collect every tree whose group attains the extreme value
/// (groups whose values agree to 1e-12 relative count as ties).
ExtremalScan extremal_scan(const DegreeSequence& d, const EnumerationOptions& options = {});

/// Isomorphism-invariant code for small general graphs (n <= 12) by
/// minimizing the adjacency bit string over all vertex orders compatible
/// with a degree-based refinement.
std::string small_graph_canonical_form(const Graph& g);

/// Length of the shortest cycle, 0 for forests.
int girth(const Graph& g);

/// Longest shortest-path distance of a connected graph.
int diameter(const Graph& g);

/// Unicyclic graphs of order n and girth k, one per isomorphism class,
/// obtained by adding an edge to every tree of order n. Throws
/// InvalidArgument for n > 10.
std::vector<Graph> unicyclic_graphs(int n, int girth_k);

}  // namespace sombor
