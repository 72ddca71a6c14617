#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

/// Isomorphism-class code of a tree. Equal codes iff isomorphic trees.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string text) : text_(std::move(text)) {}

  const std::string& str() const noexcept { return text_; }

  auto operator<=>(const CanonicalCode&) const = default;
  bool operator==(const CanonicalCode&) const = default;

 private:
  std::string text_;
};

/// One or two centroid vertices of a tree.
std::vector<Vertex> centroids(const Graph& tree);

/// AHU encoding rooted at the centroid, or at the centroid edge when there
/// are two. Throws InvalidArgument when the graph is not a tree.
CanonicalCode canonical_form(const Graph& tree);

}  // namespace sombor

template <>
struct std::hash<sombor::CanonicalCode> {
  std::size_t operator()(const sombor::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.str());
  }
};
