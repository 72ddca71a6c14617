#include "sombor/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_set>

#include "sombor/errors.hpp"

namespace sombor {

namespace {

// Sum of edge weights over edges incident to any touched vertex.
double incident_weight(const Graph& g, std::span<const Vertex> touched, double alpha) {
  std::set<Edge> edges;
  for (Vertex v : touched) {
    for (Vertex w : g.neighbors(v)) edges.insert(Edge{std::min(v, w), std::max(v, w)});
  }
  EdgeTypeMultiset local;
  for (auto [a, b] : edges) local.add(g.degree(a), g.degree(b));
  return local.evaluate(alpha);
}

void cross_check([[maybe_unused]] const Graph& before, [[maybe_unused]] const Graph& after,
                 [[maybe_unused]] double delta, [[maybe_unused]] double alpha) {
#ifndef NDEBUG
  const double full = sombor_index(after, alpha).value - sombor_index(before, alpha).value;
  if (std::abs(full - delta) > 1e-9 * std::max(1.0, std::abs(full))) {
    throw Error("local delta disagrees with full recomputation");
  }
#endif
}

double local_delta(const Graph& before, const Graph& after, std::initializer_list<Vertex> touched,
                   double alpha) {
  const std::vector<Vertex> vs(touched);
  const double delta = incident_weight(after, vs, alpha) - incident_weight(before, vs, alpha);
  cross_check(before, after, delta, alpha);
  return delta;
}

// Membership mask of the component of g - {a b} that contains b.
std::vector<char> far_side(const Graph& g, Vertex a, Vertex b) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  in[static_cast<std::size_t>(b)] = 1;
  std::vector<Vertex> stack{b};
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if ((x == b && y == a) || in[static_cast<std::size_t>(y)]) continue;
      in[static_cast<std::size_t>(y)] = 1;
      stack.push_back(y);
    }
  }
  return in;
}

std::vector<Vertex> tree_path(const Graph& tree, Vertex from, Vertex to) {
  std::vector<Vertex> parent(static_cast<std::size_t>(tree.vertex_count()), -1);
  std::vector<Vertex> queue{from};
  parent[static_cast<std::size_t>(from)] = from;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex y : tree.neighbors(queue[head])) {
      if (parent[static_cast<std::size_t>(y)] >= 0) continue;
      parent[static_cast<std::size_t>(y)] = queue[head];
      queue.push_back(y);
    }
  }
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Surgery branch_swap(const RootedTree& rt, Vertex u, Vertex z, Vertex v, Vertex w, double alpha) {
  const Graph& t = rt.tree();
  for (Vertex x : {u, z, v, w}) {
    if (!t.contains(x)) throw InvalidArgument("branch_swap: vertex out of range");
  }
  if (u == v) throw InvalidArgument("branch_swap: u and v must differ");
  if (rt.parent(z) != u) throw InvalidArgument("branch_swap: z is not a child of u");
  if (rt.parent(w) != v) throw InvalidArgument("branch_swap: w is not a child of v");
  if (rt.in_branch(v, z) || rt.in_branch(u, w)) {
    throw InvalidArgument("branch_swap: the swap would merge the two branches");
  }
  Surgery out{t, 0.0};
  out.graph.remove_edge(v, w);
  out.graph.remove_edge(u, z);
  out.graph.add_edge(v, z);
  out.graph.add_edge(u, w);
  const int du = t.degree(u), dv = t.degree(v), dz = t.degree(z), dw = t.degree(w);
  out.delta = (edge_weight(dv, dz, alpha) + edge_weight(du, dw, alpha)) -
              (edge_weight(dv, dw, alpha) + edge_weight(du, dz, alpha));
  cross_check(t, out.graph, out.delta, alpha);
  return out;
}

std::set<CanonicalCode> same_degree_swap_closure(const Graph& tree, const ClosureOptions& options) {
  if (!tree.is_tree()) throw InvalidArgument("same_degree_swap_closure: graph is not a tree");
  std::set<CanonicalCode> seen{canonical_form(tree)};
  std::deque<Graph> frontier{tree};
  while (!frontier.empty()) {
    const Graph g = std::move(frontier.front());
    frontier.pop_front();
    const int n = g.vertex_count();
    // side[u][i]: far side of the edge from u to its i-th neighbour.
    std::vector<std::vector<std::vector<char>>> side(static_cast<std::size_t>(n));
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex z : g.neighbors(u)) side[static_cast<std::size_t>(u)].push_back(far_side(g, u, z));
    }
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (g.degree(u) != g.degree(v)) continue;
        const auto nu = g.neighbors(u);
        const auto nv = g.neighbors(v);
        for (std::size_t i = 0; i < nu.size(); ++i) {
          const auto& bz = side[static_cast<std::size_t>(u)][i];
          if (bz[static_cast<std::size_t>(v)]) continue;
          for (std::size_t j = 0; j < nv.size(); ++j) {
            const auto& bw = side[static_cast<std::size_t>(v)][j];
            if (bw[static_cast<std::size_t>(u)]) continue;
            const Vertex z = nu[i];
            const Vertex w = nv[j];
            Graph next = g;
            next.remove_edge(u, z);
            next.remove_edge(v, w);
            next.add_edge(u, w);
            next.add_edge(v, z);
            if (seen.insert(canonical_form(next)).second) {
              if (seen.size() > options.state_cap) {
                throw CapExceeded("same_degree_swap_closure: more than " +
                                  std::to_string(options.state_cap) + " states");
              }
              frontier.push_back(std::move(next));
            }
          }
        }
      }
    }
  }
  return seen;
}

BranchMove move_branch(const Graph& tree, Vertex x, Vertex y, Vertex x_child, double alpha) {
  if (!tree.is_tree()) throw InvalidArgument("move_branch: graph is not a tree");
  for (Vertex a : {x, y, x_child}) {
    if (!tree.contains(a)) throw InvalidArgument("move_branch: vertex out of range");
  }
  if (x == y) throw InvalidArgument("move_branch: x and y must differ");
  if (!tree.has_edge(y, x_child)) throw InvalidArgument("move_branch: x_child is not adjacent to y");
  if (far_side(tree, y, x_child)[static_cast<std::size_t>(x)]) {
    throw InvalidArgument("move_branch: x lies inside the moved branch");
  }
  Graph next = tree;
  next.remove_edge(y, x_child);
  next.add_edge(x, x_child);
  const double delta = local_delta(tree, next, {x, y}, alpha);
  auto before = DegreeSequence::validate(degree_sequence_of(tree));
  auto after = DegreeSequence::validate(degree_sequence_of(next));
  auto direction = MajorizationDirection::Unchanged;
  if (before != after) {
    direction = majorizes(before, after) ? MajorizationDirection::Increased
                                         : MajorizationDirection::Decreased;
  }
  return BranchMove{std::move(next), delta, std::move(before), std::move(after), direction};
}

Root same_level_root(const Graph& tree, Vertex x, Vertex y) {
  if (!tree.is_tree()) throw InvalidArgument("same_level_root: graph is not a tree");
  if (!tree.contains(x) || !tree.contains(y)) throw InvalidArgument("same_level_root: vertex out of range");
  const auto path = tree_path(tree, x, y);
  const std::size_t length = path.size() - 1;
  if (length % 2 == 0) return Root::at_vertex(path[length / 2]);
  return Root::at_edge(path[length / 2], path[length / 2 + 1]);
}

std::vector<PendentPath> pendent_paths(const Graph& g, Vertex u) {
  std::vector<PendentPath> out;
  for (Vertex w : g.neighbors(u)) {
    Vertex prev = u;
    Vertex cur = w;
    int length = 1;
    bool pendent = true;
    while (g.degree(cur) == 2) {
      const auto nb = g.neighbors(cur);
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      if (next == u || length > g.vertex_count()) {
        pendent = false;
        break;
      }
      prev = cur;
      cur = next;
      ++length;
    }
    if (pendent && g.degree(cur) == 1) out.push_back(PendentPath{u, w, cur, length});
  }
  return out;
}

PathMerge pendent_path_merge(const Graph& g, Vertex u, Vertex v, std::optional<Vertex> u_path_start,
                             std::optional<Vertex> v_path_start) {
  if (!g.contains(u) || !g.contains(v)) throw InvalidArgument("pendent_path_merge: vertex out of range");
  if (g.degree(v) < 3 || g.degree(u) < g.degree(v)) {
    throw InvalidArgument("pendent_path_merge: requires deg(u) >= deg(v) >= 3");
  }
  const auto pick = [](const std::vector<PendentPath>& paths, std::optional<Vertex> start,
                       std::optional<Vertex> exclude, const char* who) {
    for (const auto& p : paths) {
      if (exclude && p.start == *exclude) continue;
      if (!start || p.start == *start) return p;
    }
    throw InvalidArgument(std::string("pendent_path_merge: no suitable pendent path at ") + who);
  };
  const PendentPath moved = pick(pendent_paths(g, u), u_path_start, std::nullopt, "u");
  const PendentPath target =
      pick(pendent_paths(g, v), v_path_start,
           u == v ? std::optional<Vertex>(moved.start) : std::nullopt, "v");
  Graph next = g;
  next.remove_edge(u, moved.start);
  next.add_edge(target.end, moved.start);
  const double delta = local_delta(g, next, {u, target.end}, 0.5);
  return PathMerge{std::move(next), delta, moved, target};
}

PathMergeRun merge_pendent_paths(const Graph& g) {
  PathMergeRun run{g, {}};
  for (std::size_t guard = 0; guard <= static_cast<std::size_t>(g.vertex_count()) * g.vertex_count();
       ++guard) {
    std::vector<std::pair<Vertex, std::size_t>> carriers;
    for (Vertex x = 0; x < run.graph.vertex_count(); ++x) {
      if (run.graph.degree(x) < 3) continue;
      const auto paths = pendent_paths(run.graph, x);
      if (!paths.empty()) carriers.emplace_back(x, paths.size());
    }
    std::stable_sort(carriers.begin(), carriers.end(), [&](const auto& a, const auto& b) {
      return run.graph.degree(a.first) > run.graph.degree(b.first);
    });
    if (carriers.empty()) return run;
    Vertex u = carriers[0].first;
    Vertex v;
    if (carriers.size() >= 2) {
      v = carriers[1].first;
    } else if (carriers[0].second >= 2) {
      v = u;
    } else {
      return run;
    }
    auto step = pendent_path_merge(run.graph, u, v);
    run.graph = step.graph;
    run.steps.push_back(std::move(step));
  }
  throw Error("merge_pendent_paths: did not terminate");
}

Graph tailed_cycle(int n, int k) {
  if (k < 3 || k > n) throw InvalidArgument("tailed_cycle: requires 3 <= k <= n");
  Graph g(n);
  for (Vertex i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  for (Vertex i = k; i < n; ++i) g.add_edge(i == k ? 0 : i - 1, i);
  return g;
}

}  // namespace sombor
