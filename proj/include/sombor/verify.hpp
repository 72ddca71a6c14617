#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sombor/degseq.hpp"
#include "sombor/graph.hpp"
#include "sombor/oracle.hpp"

namespace sombor {

using Json = nlohmann::ordered_json;

enum class Theorem {
  Extremal,    // min = SO(G(D)) and max = SO(M(D)) over T_D
  Greedy,      // min over T_D attained by G(D)
  Alter,       // argmax = same-degree swap closure of M(D)
  Alter2,      // argmin = same-degree swap closure of G(D)
  DiffDegree,  // SO(M(.)) strictly increasing along majorization chains
  Rooted,      // level greedy tree minimizes over rooted realizations of L
  Unicyclic,   // tailed cycle minimizes over unicyclic graphs of given girth
  CorollaryMaxDegree,
  CorollaryLeaves,
  CorollaryDiameter,
  CorollaryBranching,
};

/// Throws InvalidArgument for unknown ids.
Theorem parse_theorem(std::string_view id);
std::string_view to_string(Theorem theorem);

/// Either an order n (every tree degree sequence of order n) or an explicit
/// sequence, optionally paired with a second one for diffdegree.
struct VerifyScope {
  std::optional<int> order;
  std::optional<DegreeSequence> sequence;
  std::optional<DegreeSequence> sequence2;
};

struct VerifyOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  unsigned jobs = 1;
};

struct VerificationFailure {
  std::string sequence;
  std::vector<Edge> witness_edges;
  Json expected;
  Json got;
};

struct VerificationReport {
  Theorem theorem = Theorem::Greedy;
  Json scope;
  std::size_t instances = 0;
  std::vector<VerificationFailure> failures;
  Json details = Json::object();
  double elapsed_ms = 0.0;

  bool passed() const noexcept { return failures.empty(); }
  /// elapsed_ms is the only non-deterministic field; include_meta = false
  /// drops it.
  Json to_json(bool include_meta = true) const;
};

/// Runs one theorem over the scope. Work is split over options.jobs threads;
/// the report does not depend on the thread count. Throws InvalidArgument
/// when the scope does not fit the theorem, CapExceeded from enumeration.
VerificationReport verify(Theorem theorem, const VerifyScope& scope, const VerifyOptions& options = {});

/// Value rounded to 12 significant digits, as written in reports.
double report_number(double value);

Json edge_types_json(const EdgeTypeMultiset& m);
Json edges_json(const Graph& g);

/// Extremal scan of T_D plus cross-checks against G(D) and M(D).
/// consistent is false when either constructor misses its extreme.
struct ScanReport {
  Json json;
  bool consistent = true;
};
ScanReport scan_report(const DegreeSequence& d, const EnumerationOptions& options = {});

}  // namespace sombor
