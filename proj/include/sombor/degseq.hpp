#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace sombor {

/// Parses "3,2,2,1,1,1" or the shorthand "3^2,2,1^3". Throws ParseError.
std::vector<int> parse_sequence(std::string_view text);

/// Non-increasing, tree-realizable degree sequence. The single-vertex tree
/// is represented as (0).
class DegreeSequence {
 public:
  /// Sorts the entries and checks tree realizability: for n >= 2 every
  /// entry is >= 1 and the sum is 2(n - 1). Throws NonRealizable.
  static DegreeSequence validate(std::vector<int> entries);

  const std::vector<int>& entries() const noexcept { return entries_; }
  int order() const noexcept { return static_cast<int>(entries_.size()); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int max_degree() const noexcept { return entries_.front(); }
  int leaf_count() const noexcept;

  std::string to_string() const;

  auto operator<=>(const DegreeSequence&) const = default;
  bool operator==(const DegreeSequence&) const = default;

 private:
  explicit DegreeSequence(std::vector<int> entries) : entries_(std::move(entries)) {}
  std::vector<int> entries_;
};

/// Internal degrees (d_1, ..., d_t), all >= 2, with the leaf count implied
/// by k = 2 - 2t + sum(d_i).
class ReducedDegreeSequence {
 public:
  /// Throws NonRealizable when an entry is below 2.
  static ReducedDegreeSequence from_internal(std::vector<int> internal);

  const std::vector<int>& internal() const noexcept { return internal_; }
  int internal_count() const noexcept { return static_cast<int>(internal_.size()); }
  int implied_leaves() const noexcept;
  int order() const noexcept { return internal_count() + implied_leaves(); }

  std::string to_string() const;

  auto operator<=>(const ReducedDegreeSequence&) const = default;
  bool operator==(const ReducedDegreeSequence&) const = default;

 private:
  explicit ReducedDegreeSequence(std::vector<int> internal) : internal_(std::move(internal)) {}
  std::vector<int> internal_;
};

/// Strips the leaves. Both (0) and (1,1) reduce to the empty sequence.
ReducedDegreeSequence reduce(const DegreeSequence& d);
/// Appends the implied leaves; the empty sequence expands to (1,1).
DegreeSequence expand(const ReducedDegreeSequence& r);

/// True when upper majorizes lower (lower ◁ upper): every prefix sum of
/// lower, sorted non-increasing, is at most the matching prefix sum of
/// upper. Throws InvalidArgument on a length mismatch.
bool majorizes(const DegreeSequence& lower, const DegreeSequence& upper);

/// Sequence from = C_0 ◁ C_1 ◁ ... ◁ C_m = to in which consecutive elements
/// differ by +1 at a position j and -1 at a position k > j. Among the moves
/// that keep the next element below `to`, the one with the largest k and
/// then the largest j is taken, which yields the finest chain.
/// Throws InvalidArgument when from is not majorized by to.
std::vector<DegreeSequence> majorization_chain(const DegreeSequence& from,
                                               const DegreeSequence& to);

enum class CorollaryKind { MaxDegree, Leaves, Diameter, Branching };

/// Accepts max-degree|max_degree, leaves, diameter, branching.
CorollaryKind parse_corollary_kind(std::string_view text);
std::string_view to_string(CorollaryKind kind);

/// Extremal degree sequence of a corollary family at order n:
///   MaxDegree(D): (D^q, r+1, 1, ...) with q(D-1) + r = n - 2, 0 <= r < D-1
///   Leaves(l):    (l, 2^(n-l-1), 1^l)
///   Diameter(d):  (n-d+1, 2^(d-2), 1^(n-d+1))
///   Branching(k): (3^k, 2^(n-2k-2), 1^(k+2))
/// Throws NonRealizable for infeasible parameters.
DegreeSequence corollary_sequence(CorollaryKind kind, int n, int parameter);

}  // namespace sombor
