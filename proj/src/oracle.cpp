#include "sombor/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <map>
#include <queue>
#include <unordered_set>

#include "sombor/errors.hpp"

namespace sombor {

namespace {

void partitions(int remaining, int parts_left, int max_part, std::vector<int>& prefix,
                std::vector<std::vector<int>>& out) {
  if (parts_left == 0) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  // Every remaining part is at least 1.
  const int hi = std::min(max_part, remaining - (parts_left - 1));
  for (int part = hi; part >= 1; --part) {
    if (static_cast<long>(part) * parts_left < remaining) break;
    prefix.push_back(part);
    partitions(remaining - part, parts_left - 1, part, prefix, out);
    prefix.pop_back();
  }
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(v)] >= 0) continue;
      dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

}  // namespace

std::uint64_t enumeration_cap_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("SOMBOR_CAP");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') return fallback;
  return value;
}

std::vector<DegreeSequence> all_tree_degree_sequences(int n) {
  if (n < 1) return {};
  if (n == 1) return {DegreeSequence::validate({0})};
  std::vector<std::vector<int>> raw;
  std::vector<int> prefix;
  partitions(2 * (n - 1), n, n - 1, prefix, raw);
  std::vector<DegreeSequence> out;
  out.reserve(raw.size());
  for (auto& p : raw) out.push_back(DegreeSequence::validate(std::move(p)));
  return out;
}

Graph decode_pruefer(std::span<const Vertex> code, int n) {
  if (n < 2 || code.size() != static_cast<std::size_t>(n - 2)) {
    throw InvalidArgument("decode_pruefer: code length must be n - 2");
  }
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (Vertex x : code) {
    if (x < 0 || x >= n) throw InvalidArgument("decode_pruefer: label out of range");
    ++degree[static_cast<std::size_t>(x)];
  }
  Graph g(n);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  for (Vertex x : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    g.add_edge(leaf, x);
    if (--degree[static_cast<std::size_t>(x)] == 1) leaves.push(x);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  g.add_edge(a, leaves.top());
  return g;
}

std::uint64_t labeled_tree_count(const DegreeSequence& d) {
  if (d.order() <= 2) return 1;
  // Product of binomials C(remaining, d_i - 1), saturating.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  int remaining = d.order() - 2;
  for (int di : d.entries()) {
    const int k = di - 1;
    std::uint64_t binom = 1;
    for (int i = 1; i <= k; ++i) {
      // binom * (remaining - k + i) / i, divided early so it stays exact.
      const std::uint64_t g = std::gcd(binom, static_cast<std::uint64_t>(i));
      const std::uint64_t factor = static_cast<std::uint64_t>(remaining - k + i) / (static_cast<std::uint64_t>(i) / g);
      if (__builtin_mul_overflow(binom / g, factor, &binom)) return kMax;
    }
    if (__builtin_mul_overflow(total, binom, &total)) return kMax;
    remaining -= k;
  }
  return total;
}

std::vector<Graph> enumerate_trees(const DegreeSequence& d, const EnumerationOptions& options) {
  const int n = d.order();
  if (n == 1) return {Graph(1)};
  if (n == 2) return {Graph::from_edges(2, std::vector<Edge>{{0, 1}})};
  const auto count = labeled_tree_count(d);
  if (count > options.cap) {
    throw CapExceeded("enumerate_trees: " + std::to_string(count) + " labelled trees for (" +
                      d.to_string() + ") exceed the cap of " + std::to_string(options.cap));
  }
  std::vector<Vertex> code;
  for (Vertex v = 0; v < n; ++v) code.insert(code.end(), static_cast<std::size_t>(d[static_cast<std::size_t>(v)] - 1), v);
  std::unordered_set<CanonicalCode> seen;
  std::vector<Graph> out;
  do {
    Graph g = decode_pruefer(code, n);
    if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
  } while (std::next_permutation(code.begin(), code.end()));
  return out;
}

std::vector<Graph> all_trees(int n, const EnumerationOptions& options) {
  std::vector<Graph> out;
  for (const auto& d : all_tree_degree_sequences(n)) {
    auto trees = enumerate_trees(d, options);
    std::move(trees.begin(), trees.end(), std::back_inserter(out));
  }
  return out;
}

ExtremalScan extremal_scan(const DegreeSequence& d, const EnumerationOptions& options) {
  const auto trees = enumerate_trees(d, options);
  std::map<EdgeTypeMultiset, std::vector<CanonicalCode>> groups;
  for (const auto& t : trees) groups[edge_type_multiset(t)].push_back(canonical_form(t));

  const auto value_of = [](const EdgeTypeMultiset& m) { return m.evaluate(0.5); };
  auto lo = groups.begin();
  auto hi = groups.begin();
  for (auto it = groups.begin(); it != groups.end(); ++it) {
    if (value_of(it->first) < value_of(lo->first)) lo = it;
    if (value_of(it->first) > value_of(hi->first)) hi = it;
  }
  const double min_v = value_of(lo->first);
  const double max_v = value_of(hi->first);
  const auto tie = [](double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b));
  };
  ExtremalScan scan{d,
                    trees.size(),
                    SomborValue{min_v, 0.5, lo->first},
                    SomborValue{max_v, 0.5, hi->first},
                    {},
                    {},
                    groups.size()};
  for (const auto& [multiset, codes] : groups) {
    const double v = value_of(multiset);
    if (tie(v, min_v)) scan.argmin.insert(codes.begin(), codes.end());
    if (tie(v, max_v)) scan.argmax.insert(codes.begin(), codes.end());
  }
  return scan;
}

std::string small_graph_canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 12) throw InvalidArgument("small_graph_canonical_form: at most 12 vertices");
  using Key = std::pair<int, std::vector<int>>;
  std::vector<Key> key(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    auto& [deg, nbr] = key[static_cast<std::size_t>(v)];
    deg = g.degree(v);
    for (Vertex w : g.neighbors(v)) nbr.push_back(g.degree(w));
    std::sort(nbr.begin(), nbr.end());
  }
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)];
  });
  // Cells of equal key, permuted independently.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && key[static_cast<std::size_t>(order[j])] == key[static_cast<std::size_t>(order[i])]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::string header = std::to_string(n) + ":";
  for (Vertex v : order) header += std::to_string(g.degree(v)) + ",";

  std::string best;
  std::string bits(static_cast<std::size_t>(n * (n - 1) / 2), '0');
  std::function<void(std::size_t)> search = [&](std::size_t cell) {
    if (cell == cells.size()) {
      std::size_t pos = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          bits[pos++] = g.has_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) ? '1' : '0';
        }
      }
      if (best.empty() || bits < best) best = bits;
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(cells[cell].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(cells[cell].second);
    std::sort(first, last);
    do {
      search(cell + 1);
    } while (std::next_permutation(first, last));
  };
  search(0);
  return header + best;
}

int girth(const Graph& g) {
  int best = 0;
  const int n = g.vertex_count();
  for (Vertex s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> queue{s};
    dist[static_cast<std::size_t>(s)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex v : g.neighbors(u)) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        } else if (parent[static_cast<std::size_t>(u)] != v) {
          const int cycle = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
          if (best == 0 || cycle < best) best = cycle;
        }
      }
    }
  }
  return best;
}

int diameter(const Graph& g) {
  int best = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    const auto dist = bfs_distances(g, s);
    for (int d : dist) {
      if (d < 0) throw InvalidArgument("diameter: graph is disconnected");
      best = std::max(best, d);
    }
  }
  return best;
}

std::vector<Graph> unicyclic_graphs(int n, int girth_k) {
  if (n > 10) throw InvalidArgument("unicyclic_graphs: order above 10 is not supported");
  if (girth_k < 3 || girth_k > n) return {};
  std::unordered_set<std::string> seen;
  std::vector<Graph> out;
  for (const Graph& t : all_trees(n)) {
    for (Vertex u = 0; u < n; ++u) {
      const auto dist = bfs_distances(t, u);
      for (Vertex v = u + 1; v < n; ++v) {
        if (dist[static_cast<std::size_t>(v)] + 1 != girth_k) continue;
        Graph g = t;
        g.add_edge(u, v);
        if (seen.insert(small_graph_canonical_form(g)).second) out.push_back(std::move(g));
      }
    }
  }
  return out;
}

}  // namespace sombor
