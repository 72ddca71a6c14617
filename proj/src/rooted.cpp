#include "sombor/rooted.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "sombor/errors.hpp"

namespace sombor {

std::string Root::to_string() const {
  if (second) return "edge(" + std::to_string(first) + "," + std::to_string(*second) + ")";
  return "vertex(" + std::to_string(first) + ")";
}

std::vector<Root> all_roots(const Graph& tree) {
  std::vector<Root> out;
  for (Vertex v = 0; v < tree.vertex_count(); ++v) out.push_back(Root::at_vertex(v));
  for (auto [u, v] : tree.edges()) out.push_back(Root::at_edge(u, v));
  return out;
}

std::optional<Vertex> RootedTree::parent(Vertex v) const {
  if (!tree_.contains(v)) throw InvalidArgument("vertex out of range");
  const int p = parent_[static_cast<std::size_t>(v)];
  if (p < 0) return std::nullopt;
  return p;
}

int RootedTree::level(Vertex v) const {
  if (!tree_.contains(v)) throw InvalidArgument("vertex out of range");
  return level_[static_cast<std::size_t>(v)];
}

std::span<const Vertex> RootedTree::children(Vertex v) const {
  if (!tree_.contains(v)) throw InvalidArgument("vertex out of range");
  return children_[static_cast<std::size_t>(v)];
}

std::span<const Vertex> RootedTree::level_vertices(int level) const {
  if (level < 1 || level > level_count()) throw InvalidArgument("level out of range");
  return by_level_[static_cast<std::size_t>(level - 1)];
}

bool RootedTree::in_branch(Vertex v, Vertex ancestor) const {
  if (!tree_.contains(v) || !tree_.contains(ancestor)) {
    throw InvalidArgument("vertex out of range");
  }
  for (int cur = v; cur >= 0; cur = parent_[static_cast<std::size_t>(cur)]) {
    if (cur == ancestor) return true;
  }
  return false;
}

std::vector<Vertex> RootedTree::branch(Vertex v) const {
  std::vector<Vertex> out{v};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Vertex c : children(out[i])) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootedTree rooted_view(const Graph& tree, const Root& root) {
  if (!tree.is_tree()) throw InvalidArgument("graph is not a tree");
  if (!tree.contains(root.first)) throw InvalidArgument("root vertex not in graph");
  if (root.second && !tree.has_edge(root.first, *root.second)) {
    throw InvalidArgument("root edge not in graph");
  }
  RootedTree rt;
  rt.tree_ = tree;
  rt.root_ = root;
  const auto n = static_cast<std::size_t>(tree.vertex_count());
  rt.parent_.assign(n, -1);
  rt.level_.assign(n, 0);
  rt.children_.assign(n, {});

  std::vector<Vertex> queue{root.first};
  rt.level_[static_cast<std::size_t>(root.first)] = 1;
  if (root.second) {
    queue.push_back(*root.second);
    rt.level_[static_cast<std::size_t>(*root.second)] = 1;
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const auto ui = static_cast<std::size_t>(u);
    for (Vertex v : tree.neighbors(u)) {
      const auto vi = static_cast<std::size_t>(v);
      if (rt.level_[vi] != 0) continue;
      rt.level_[vi] = rt.level_[ui] + 1;
      rt.parent_[vi] = u;
      rt.children_[ui].push_back(v);
      queue.push_back(v);
    }
  }
  const int depth = *std::max_element(rt.level_.begin(), rt.level_.end());
  rt.by_level_.assign(static_cast<std::size_t>(depth), {});
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    rt.by_level_[static_cast<std::size_t>(rt.level_[static_cast<std::size_t>(v)] - 1)].push_back(v);
  }
  return rt;
}

LeveledDegreeSequence::LeveledDegreeSequence(std::vector<std::vector<int>> levels)
    : levels_(std::move(levels)) {
  if (levels_.empty()) throw InvalidArgument("leveled degree sequence has no levels");
  if (levels_.front().size() != 1 && levels_.front().size() != 2) {
    throw InvalidArgument("first level must hold one or two vertices");
  }
  for (auto& level : levels_) {
    if (level.empty()) throw InvalidArgument("empty level in leveled degree sequence");
    for (int d : level) {
      if (d < 0) throw InvalidArgument("negative degree in leveled degree sequence");
    }
    std::sort(level.begin(), level.end(), std::greater<>());
  }
}

LeveledDegreeSequence LeveledDegreeSequence::parse(std::string_view text) {
  std::vector<std::vector<int>> levels(1);
  const char* p = text.data();
  const char* end = text.data() + text.size();
  bool expect_number = true;
  while (p != end) {
    const char c = *p;
    if (c == ' ' || c == '\t') {
      ++p;
    } else if (c == '/' || c == ';') {
      if (expect_number) throw ParseError("empty entry in leveled sequence");
      levels.emplace_back();
      expect_number = true;
      ++p;
    } else if (c == ',') {
      if (expect_number) throw ParseError("empty entry in leveled sequence");
      expect_number = true;
      ++p;
    } else {
      int value = 0;
      auto [ptr, ec] = std::from_chars(p, end, value);
      if (ec != std::errc{} || !expect_number) {
        throw ParseError("malformed leveled sequence '" + std::string(text) + "'");
      }
      levels.back().push_back(value);
      expect_number = false;
      p = ptr;
    }
  }
  if (expect_number) throw ParseError("malformed leveled sequence '" + std::string(text) + "'");
  try {
    return LeveledDegreeSequence(std::move(levels));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

int LeveledDegreeSequence::vertex_count() const noexcept {
  int n = 0;
  for (const auto& level : levels_) n += static_cast<int>(level.size());
  return n;
}

bool LeveledDegreeSequence::is_consistent() const {
  if (levels_.empty()) return false;
  const bool single_root = levels_.front().size() == 1;
  if (single_root && levels_.front()[0] == 0) return levels_.size() == 1;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    long open = 0;
    for (int d : levels_[i]) {
      if (d < 1) return false;
      open += (i == 0 && single_root) ? d : d - 1;
    }
    const long next = i + 1 < levels_.size() ? static_cast<long>(levels_[i + 1].size()) : 0;
    if (open != next) return false;
  }
  return true;
}

std::string LeveledDegreeSequence::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (i) os << '/';
    for (std::size_t j = 0; j < levels_[i].size(); ++j) {
      if (j) os << ',';
      os << levels_[i][j];
    }
  }
  return os.str();
}

LeveledDegreeSequence leveled_degree_sequence(const RootedTree& rt) {
  std::vector<std::vector<int>> levels;
  for (int i = 1; i <= rt.level_count(); ++i) {
    auto& level = levels.emplace_back();
    for (Vertex v : rt.level_vertices(i)) level.push_back(rt.tree().degree(v));
  }
  return LeveledDegreeSequence(std::move(levels));
}

}  // namespace sombor
