#include "sombor/canonical.hpp"

#include <algorithm>

#include "sombor/errors.hpp"

namespace sombor {

namespace {

// Parent-first order of the component reached from start without crossing
// the edge (start, blocked).
std::vector<Vertex> bfs_order(const Graph& g, Vertex start, Vertex blocked,
                              std::vector<Vertex>& parent) {
  std::vector<Vertex> order{start};
  parent[static_cast<std::size_t>(start)] = blocked;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex u = order[head];
    for (Vertex v : g.neighbors(u)) {
      if (v == parent[static_cast<std::size_t>(u)]) continue;
      parent[static_cast<std::size_t>(v)] = u;
      order.push_back(v);
    }
  }
  return order;
}

std::string rooted_code(const Graph& g, Vertex root, Vertex blocked) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()), -1);
  const auto order = bfs_order(g, root, blocked, parent);
  std::vector<std::vector<std::string>> child_codes(static_cast<std::size_t>(g.vertex_count()));
  std::string result;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    auto& kids = child_codes[static_cast<std::size_t>(v)];
    std::sort(kids.begin(), kids.end());
    std::string code = "(";
    for (auto& k : kids) code += k;
    code += ')';
    kids.clear();
    kids.shrink_to_fit();
    if (v == root) {
      result = std::move(code);
    } else {
      child_codes[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])].push_back(
          std::move(code));
    }
  }
  return result;
}

}  // namespace

std::vector<Vertex> centroids(const Graph& tree) {
  if (!tree.is_tree()) throw InvalidArgument("centroids: graph is not a tree");
  const int n = tree.vertex_count();
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  const auto order = bfs_order(tree, 0, -1, parent);
  std::vector<int> size(static_cast<std::size_t>(n), 1);
  std::vector<int> heaviest(static_cast<std::size_t>(n), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    const Vertex p = parent[static_cast<std::size_t>(v)];
    if (p >= 0) {
      size[static_cast<std::size_t>(p)] += size[static_cast<std::size_t>(v)];
      heaviest[static_cast<std::size_t>(p)] =
          std::max(heaviest[static_cast<std::size_t>(p)], size[static_cast<std::size_t>(v)]);
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    const int upward = n - size[static_cast<std::size_t>(v)];
    if (std::max(heaviest[static_cast<std::size_t>(v)], upward) * 2 <= n) out.push_back(v);
  }
  return out;
}

CanonicalCode canonical_form(const Graph& tree) {
  const auto cs = centroids(tree);
  if (cs.size() == 1) return CanonicalCode(rooted_code(tree, cs[0], -1));
  auto a = rooted_code(tree, cs[0], cs[1]);
  auto b = rooted_code(tree, cs[1], cs[0]);
  if (b < a) std::swap(a, b);
  return CanonicalCode("[" + a + b + "]");
}

}  // namespace sombor
