#include "sombor/degseq.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include "sombor/errors.hpp"

namespace sombor {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

int parse_int(std::string_view token, std::string_view whole) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("malformed sequence '" + std::string(whole) + "'");
  }
  return value;
}

bool prefix_dominated(const std::vector<int>& lower, const std::vector<int>& upper) {
  long a = 0;
  long b = 0;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    a += lower[i];
    b += upper[i];
    if (a > b) return false;
  }
  return true;
}

DegreeSequence repeat_sequence(std::initializer_list<std::pair<int, int>> runs) {
  std::vector<int> out;
  for (auto [value, count] : runs) out.insert(out.end(), static_cast<std::size_t>(count), value);
  return DegreeSequence::validate(std::move(out));
}

}  // namespace

std::vector<int> parse_sequence(std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(',', start);
    if (stop == std::string_view::npos) stop = text.size();
    const std::string_view item = text.substr(start, stop - start);
    start = stop + 1;
    if (const auto caret = item.find('^'); caret != std::string_view::npos) {
      const int value = parse_int(item.substr(0, caret), text);
      const int count = parse_int(item.substr(caret + 1), text);
      if (count < 0 || count > 100000) throw ParseError("bad repetition count in '" + std::string(text) + "'");
      out.insert(out.end(), static_cast<std::size_t>(count), value);
    } else {
      out.push_back(parse_int(item, text));
    }
  }
  return out;
}

DegreeSequence DegreeSequence::validate(std::vector<int> entries) {
  if (entries.empty()) throw NonRealizable("empty degree sequence");
  std::sort(entries.begin(), entries.end(), std::greater<>());
  const auto n = static_cast<long>(entries.size());
  if (n == 1) {
    if (entries[0] != 0) throw NonRealizable("single-vertex tree must have degree sequence (0)");
    return DegreeSequence(std::move(entries));
  }
  if (entries.back() < 1) {
    throw NonRealizable("entry " + std::to_string(entries.back()) + " < 1 in (" + join(entries) + ")");
  }
  const long sum = std::accumulate(entries.begin(), entries.end(), 0L);
  if (sum != 2 * (n - 1)) {
    throw NonRealizable("degree sum " + std::to_string(sum) + " != 2(n-1) = " +
                        std::to_string(2 * (n - 1)) + " for (" + join(entries) + ")");
  }
  return DegreeSequence(std::move(entries));
}

int DegreeSequence::leaf_count() const noexcept {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), 1));
}

std::string DegreeSequence::to_string() const { return join(entries_); }

ReducedDegreeSequence ReducedDegreeSequence::from_internal(std::vector<int> internal) {
  for (int d : internal) {
    if (d < 2) throw NonRealizable("reduced degree sequence entries must be >= 2");
  }
  std::sort(internal.begin(), internal.end(), std::greater<>());
  return ReducedDegreeSequence(std::move(internal));
}

int ReducedDegreeSequence::implied_leaves() const noexcept {
  return 2 - 2 * internal_count() + std::accumulate(internal_.begin(), internal_.end(), 0);
}

std::string ReducedDegreeSequence::to_string() const { return join(internal_); }

ReducedDegreeSequence reduce(const DegreeSequence& d) {
  std::vector<int> internal;
  for (int x : d.entries()) {
    if (x >= 2) internal.push_back(x);
  }
  return ReducedDegreeSequence::from_internal(std::move(internal));
}

DegreeSequence expand(const ReducedDegreeSequence& r) {
  std::vector<int> entries = r.internal();
  entries.insert(entries.end(), static_cast<std::size_t>(r.implied_leaves()), 1);
  return DegreeSequence::validate(std::move(entries));
}

bool majorizes(const DegreeSequence& lower, const DegreeSequence& upper) {
  if (lower.order() != upper.order()) {
    throw InvalidArgument("majorizes: sequences of different length");
  }
  return prefix_dominated(lower.entries(), upper.entries());
}

std::vector<DegreeSequence> majorization_chain(const DegreeSequence& from,
                                               const DegreeSequence& to) {
  if (!majorizes(from, to)) {
    throw InvalidArgument("majorization_chain: (" + from.to_string() + ") is not majorized by (" +
                          to.to_string() + ")");
  }
  std::vector<DegreeSequence> chain{from};
  std::vector<int> cur = from.entries();
  const std::vector<int>& target = to.entries();
  const std::size_t n = cur.size();
  while (cur != target) {
    std::optional<std::vector<int>> next;
    for (std::size_t k = n; k-- > 1 && !next;) {
      // k loses a unit: stays >= 1 and not below its successor.
      if (cur[k] < 2 || (k + 1 < n && cur[k] - 1 < cur[k + 1])) continue;
      for (std::size_t j = k; j-- > 0 && !next;) {
        // j gains a unit: must not exceed its predecessor.
        if (j > 0 && cur[j] + 1 > cur[j - 1]) continue;
        std::vector<int> candidate = cur;
        ++candidate[j];
        --candidate[k];
        if (prefix_dominated(candidate, target)) next = std::move(candidate);
      }
    }
    // A move always exists between distinct comparable sequences: some
    // entry up to the first tight prefix exceeds its target entry, and the
    // last entry of its run can give a unit to the first differing entry.
    if (!next) throw Error("majorization_chain: no admissible move (internal error)");
    cur = std::move(*next);
    chain.push_back(DegreeSequence::validate(cur));
  }
  return chain;
}

CorollaryKind parse_corollary_kind(std::string_view text) {
  if (text == "max-degree" || text == "max_degree" || text == "maxdegree") {
    return CorollaryKind::MaxDegree;
  }
  if (text == "leaves") return CorollaryKind::Leaves;
  if (text == "diameter") return CorollaryKind::Diameter;
  if (text == "branching") return CorollaryKind::Branching;
  throw InvalidArgument("unknown corollary kind '" + std::string(text) + "'");
}

std::string_view to_string(CorollaryKind kind) {
  switch (kind) {
    case CorollaryKind::MaxDegree: return "max-degree";
    case CorollaryKind::Leaves: return "leaves";
    case CorollaryKind::Diameter: return "diameter";
    case CorollaryKind::Branching: return "branching";
  }
  return "?";
}

DegreeSequence corollary_sequence(CorollaryKind kind, int n, int parameter) {
  const auto infeasible = [&] {
    return NonRealizable(std::string(to_string(kind)) + " = " + std::to_string(parameter) +
                         " is infeasible for order " + std::to_string(n));
  };
  if (n < 1) throw infeasible();
  if (n == 1) {
    // Only K1: max degree 0, no leaves, diameter 0, no branching vertex.
    if (parameter != 0) throw infeasible();
    return DegreeSequence::validate({0});
  }
  if (n == 2) {
    const bool ok = (kind == CorollaryKind::MaxDegree && parameter == 1) ||
                    (kind == CorollaryKind::Leaves && parameter == 2) ||
                    (kind == CorollaryKind::Diameter && parameter == 1) ||
                    (kind == CorollaryKind::Branching && parameter == 0);
    if (!ok) throw infeasible();
    return DegreeSequence::validate({1, 1});
  }
  switch (kind) {
    case CorollaryKind::MaxDegree: {
      if (parameter < 2 || parameter > n - 1) throw infeasible();
      const int q = (n - 2) / (parameter - 1);
      const int r = (n - 2) % (parameter - 1);
      return repeat_sequence({{parameter, q}, {r + 1, 1}, {1, n - q - 1}});
    }
    case CorollaryKind::Leaves:
      if (parameter < 2 || parameter > n - 1) throw infeasible();
      return repeat_sequence({{parameter, 1}, {2, n - parameter - 1}, {1, parameter}});
    case CorollaryKind::Diameter:
      if (parameter < 2 || parameter > n - 1) throw infeasible();
      return repeat_sequence({{n - parameter + 1, 1}, {2, parameter - 2}, {1, n - parameter + 1}});
    case CorollaryKind::Branching:
      if (parameter < 0 || n - 2 * parameter - 2 < 0) throw infeasible();
      return repeat_sequence({{3, parameter}, {2, n - 2 * parameter - 2}, {1, parameter + 2}});
  }
  throw infeasible();
}

}  // namespace sombor
