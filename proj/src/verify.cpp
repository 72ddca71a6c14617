#include "sombor/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "sombor/canonical.hpp"
#include "sombor/errors.hpp"
#include "sombor/extremal.hpp"
#include "sombor/rooted.hpp"
#include "sombor/transforms.hpp"

namespace sombor {

namespace {

constexpr std::pair<Theorem, std::string_view> kTheoremIds[] = {
    {Theorem::Extremal, "extremal"},
    {Theorem::Greedy, "greedy"},
    {Theorem::Alter, "alter"},
    {Theorem::Alter2, "alter2"},
    {Theorem::DiffDegree, "diffdegree"},
    {Theorem::Rooted, "rooted"},
    {Theorem::Unicyclic, "unicyclic"},
    {Theorem::CorollaryMaxDegree, "corollary-max-degree"},
    {Theorem::CorollaryLeaves, "corollary-leaves"},
    {Theorem::CorollaryDiameter, "corollary-diameter"},
    {Theorem::CorollaryBranching, "corollary-branching"},
};

// Strict claims must clear this absolute margin.
constexpr double kStrictMargin = 1e-9;

bool tied(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

struct ItemResult {
  std::size_t instances = 0;
  std::vector<VerificationFailure> failures;
  Json detail;
};

// Results land in input order whatever the thread count; the first exception
// (by item index) is rethrown.
template <class Item>
std::vector<ItemResult> run_items(const std::vector<Item>& items, unsigned jobs,
                                  const std::function<ItemResult(const Item&)>& fn) {
  std::vector<ItemResult> results(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

VerificationFailure failure(const std::string& sequence, const Graph& witness, Json expected, Json got) {
  return {sequence, witness.edges(), std::move(expected), std::move(got)};
}

Json value_json(const SomborValue& v) {
  return Json{{"sombor", report_number(v.value)}, {"edge_types", edge_types_json(v.edge_types)}};
}

Json codes_json(const std::set<CanonicalCode>& codes) {
  Json out = Json::array();
  for (const auto& c : codes) out.push_back(c.str());
  return out;
}

std::vector<DegreeSequence> scope_sequences(const VerifyScope& scope) {
  if (scope.sequence) return {*scope.sequence};
  if (scope.order) {
    if (*scope.order < 1) throw InvalidArgument("verify: order must be at least 1");
    return all_tree_degree_sequences(*scope.order);
  }
  throw InvalidArgument("verify: scope needs an order or a sequence");
}

int scope_order(const VerifyScope& scope, std::string_view theorem) {
  if (!scope.order || scope.sequence)
    throw InvalidArgument(std::string(theorem) + ": scope must be an order n");
  return *scope.order;
}

// --- extremal / greedy -----------------------------------------------------

ItemResult check_extremal(const DegreeSequence& d, const VerifyOptions& opt, bool with_max) {
  const auto scan = extremal_scan(d, {opt.cap});
  ItemResult r;
  r.instances = 1;
  const Graph g = greedy_tree(d);
  const auto g_types = edge_type_multiset(g);
  if (g_types != scan.min_value.edge_types)
    r.failures.push_back(failure(d.to_string(), g, value_json(scan.min_value), value_json(sombor_index(g))));
  if (with_max) {
    const Graph m = alternating_greedy_graph(d);
    const auto m_types = edge_type_multiset(m);
    if (m_types != scan.max_value.edge_types)
      r.failures.push_back(failure(d.to_string(), m, value_json(scan.max_value), value_json(sombor_index(m))));
  }
  r.detail = Json{{"sequence", d.to_string()},
                  {"tree_count", scan.tree_count},
                  {"min", report_number(scan.min_value.value)},
                  {"max", report_number(scan.max_value.value)}};
  return r;
}

// --- alter / alter2 ----------------------------------------------------------

ItemResult check_characterization(const DegreeSequence& d, const VerifyOptions& opt, bool maximum) {
  const auto scan = extremal_scan(d, {opt.cap});
  const Graph seed = maximum ? alternating_greedy_graph(d) : greedy_tree(d);
  const auto closure = same_degree_swap_closure(seed);
  const auto& extremes = maximum ? scan.argmax : scan.argmin;
  ItemResult r;
  r.instances = 1;
  if (closure != extremes) {
    Json missing = Json::array();
    Json extra = Json::array();
    for (const auto& c : extremes)
      if (!closure.contains(c)) missing.push_back(c.str());
    for (const auto& c : closure)
      if (!extremes.contains(c)) extra.push_back(c.str());
    r.failures.push_back(failure(d.to_string(), seed, Json{{"codes", codes_json(extremes)}},
                                 Json{{"codes", codes_json(closure)}, {"missing", missing}, {"extra", extra}}));
  }
  r.detail = Json{{"sequence", d.to_string()},
                  {maximum ? "argmax" : "argmin", extremes.size()},
                  {"closure", closure.size()}};
  return r;
}

// --- diffdegree --------------------------------------------------------------

bool two_entry_step(const DegreeSequence& a, const DegreeSequence& b) {
  std::vector<std::size_t> diff;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    if (a[i] != b[i]) diff.push_back(i);
  return diff.size() == 2 && b[diff[0]] == a[diff[0]] + 1 && b[diff[1]] == a[diff[1]] - 1;
}

ItemResult check_chain(const std::pair<DegreeSequence, DegreeSequence>& pair) {
  const auto& [from, to] = pair;
  const auto chain = majorization_chain(from, to);
  ItemResult r;
  r.instances = 1;
  Json steps = Json::array();
  std::optional<SomborValue> prev;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Graph m = alternating_greedy_graph(chain[i]);
    const auto value = sombor_index(m);
    steps.push_back(Json{{"sequence", chain[i].to_string()}, {"sombor", report_number(value.value)}});
    if (i > 0) {
      if (!majorizes(chain[i - 1], chain[i]) || !two_entry_step(chain[i - 1], chain[i]))
        r.failures.push_back(failure(chain[i - 1].to_string() + " -> " + chain[i].to_string(), m,
                                     "two-entry majorization step", "invalid step"));
      if (!(value.value > prev->value + kStrictMargin))
        r.failures.push_back(failure(chain[i - 1].to_string() + " -> " + chain[i].to_string(), m,
                                     Json{{"greater_than", report_number(prev->value)}},
                                     report_number(value.value)));
    }
    prev = value;
  }
  r.detail = Json{{"from", from.to_string()}, {"to", to.to_string()}, {"chain", steps}};
  return r;
}

// --- rooted ------------------------------------------------------------------

struct LevelGroup {
  double min_value = 0.0;
  EdgeTypeMultiset min_types;
  Graph witness{0};
  std::set<CanonicalCode> trees;
};

ItemResult check_rooted(const std::pair<LeveledDegreeSequence, LevelGroup>& entry) {
  const auto& [levels, group] = entry;
  ItemResult r;
  r.instances = 1;
  const auto lg = level_greedy_tree(levels);
  const auto value = sombor_index(lg.tree());
  if (leveled_degree_sequence(lg) != levels)
    r.failures.push_back(failure(levels.to_string(), lg.tree(), levels.to_string(),
                                 leveled_degree_sequence(lg).to_string()));
  else if (value.edge_types != group.min_types && !tied(value.value, group.min_value))
    r.failures.push_back(failure(levels.to_string(), group.witness,
                                 Json{{"at_most", report_number(group.min_value)}},
                                 report_number(value.value)));
  return r;
}

// --- unicyclic ---------------------------------------------------------------

ItemResult check_unicyclic(int n, int k) {
  ItemResult r;
  const auto family = unicyclic_graphs(n, k);
  const Graph target = tailed_cycle(n, k);
  const auto target_value = sombor_index(target);
  const auto target_code = small_graph_canonical_form(target);
  const std::string label = "n=" + std::to_string(n) + ",k=" + std::to_string(k);

  double family_min = target_value.value;
  bool target_found = false;
  std::size_t merges = 0;
  for (const auto& u : family) {
    ++r.instances;
    const auto value = sombor_index(u);
    family_min = std::min(family_min, value.value);
    if (value.value < target_value.value && !tied(value.value, target_value.value))
      r.failures.push_back(failure(label, u, Json{{"at_least", report_number(target_value.value)}},
                                   report_number(value.value)));
    if (small_graph_canonical_form(u) == target_code) target_found = true;

    const auto run = merge_pendent_paths(u);
    merges += run.steps.size();
    for (const auto& step : run.steps)
      if (!(step.delta < -kStrictMargin))
        r.failures.push_back(failure(label, u, "negative merge delta", report_number(step.delta)));
    if (small_graph_canonical_form(run.graph) != target_code)
      r.failures.push_back(failure(label, u, "merges end at the tailed cycle",
                                   Json{{"edges", edges_json(run.graph)}}));
  }
  if (!target_found) r.failures.push_back(failure(label, target, "tailed cycle in family", "absent"));
  r.detail = Json{{"n", n},
                  {"girth", k},
                  {"family_size", family.size()},
                  {"tailed_cycle", report_number(target_value.value)},
                  {"family_min", report_number(family_min)},
                  {"merges", merges}};
  return r;
}

// --- corollaries ---------------------------------------------------------------

struct CorollaryCase {
  CorollaryKind kind;
  int n;
  int parameter;
};

bool in_family(CorollaryKind kind, const Graph& t, int parameter) {
  const auto degrees = degree_sequence_of(t);
  switch (kind) {
    case CorollaryKind::MaxDegree:
      return *std::max_element(degrees.begin(), degrees.end()) == parameter;
    case CorollaryKind::Leaves:
      return std::count(degrees.begin(), degrees.end(), 1) == parameter;
    case CorollaryKind::Diameter:
      return diameter(t) == parameter;
    case CorollaryKind::Branching:
      return std::count_if(degrees.begin(), degrees.end(), [](int d) { return d >= 3; }) >= parameter;
  }
  return false;
}

ItemResult check_corollary(const CorollaryCase& c, const std::vector<Graph>& trees) {
  const auto seq = corollary_sequence(c.kind, c.n, c.parameter);
  const bool lower = c.kind == CorollaryKind::Branching;
  const Graph extremal = lower ? greedy_tree(seq) : alternating_greedy_graph(seq);
  const double bound = sombor_index(extremal).value;
  const std::string label = std::string(to_string(c.kind)) + " n=" + std::to_string(c.n) +
                            " param=" + std::to_string(c.parameter);
  ItemResult r;
  std::size_t attained = 0;
  for (const auto& t : trees) {
    if (!in_family(c.kind, t, c.parameter)) continue;
    ++r.instances;
    const double v = sombor_index(t).value;
    if (tied(v, bound)) {
      ++attained;
      continue;
    }
    const bool holds = lower ? v > bound : v < bound;
    if (!holds)
      r.failures.push_back(failure(label, t, Json{{lower ? "at_least" : "at_most", report_number(bound)}},
                                   report_number(v)));
  }
  r.detail = Json{{"parameter", c.parameter},
                  {"sequence", seq.to_string()},
                  {"bound", report_number(bound)},
                  {"family_size", r.instances},
                  {"attained", attained},
                  {"extremal_in_family", in_family(c.kind, extremal, c.parameter)}};
  if (c.kind == CorollaryKind::Leaves) r.detail["equality_everywhere"] = attained == r.instances;
  return r;
}

CorollaryKind corollary_kind_of(Theorem t) {
  switch (t) {
    case Theorem::CorollaryMaxDegree: return CorollaryKind::MaxDegree;
    case Theorem::CorollaryLeaves: return CorollaryKind::Leaves;
    case Theorem::CorollaryDiameter: return CorollaryKind::Diameter;
    default: return CorollaryKind::Branching;
  }
}

Json scope_json(const VerifyScope& scope) {
  Json s = Json::object();
  if (scope.order) s["n"] = *scope.order;
  if (scope.sequence) s["seq"] = scope.sequence->to_string();
  if (scope.sequence2) s["seq2"] = scope.sequence2->to_string();
  return s;
}

void absorb(VerificationReport& report, std::vector<ItemResult>& results) {
  for (auto& r : results) {
    report.instances += r.instances;
    for (auto& f : r.failures) report.failures.push_back(std::move(f));
  }
}

}  // namespace

Theorem parse_theorem(std::string_view id) {
  for (const auto& [t, name] : kTheoremIds)
    if (name == id) return t;
  throw InvalidArgument("unknown theorem id: " + std::string(id));
}

std::string_view to_string(Theorem theorem) {
  for (const auto& [t, name] : kTheoremIds)
    if (t == theorem) return name;
  return "?";
}

double report_number(double value) {
  if (value == 0.0 || !std::isfinite(value)) return value;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

Json edge_types_json(const EdgeTypeMultiset& m) {
  Json out = Json::array();
  for (const auto& [pair, count] : m.counts())
    out.push_back(Json{{"degrees", {pair.low, pair.high}}, {"count", count}});
  return out;
}

Json edges_json(const Graph& g) {
  Json out = Json::array();
  for (const auto& [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

Json VerificationReport::to_json(bool include_meta) const {
  Json fs = Json::array();
  for (const auto& f : failures) {
    Json w = Json::array();
    for (const auto& [u, v] : f.witness_edges) w.push_back({u, v});
    fs.push_back(Json{{"sequence", f.sequence}, {"witness_edges", w}, {"expected", f.expected}, {"got", f.got}});
  }
  Json out{{"theorem", std::string(sombor::to_string(theorem))},
           {"scope", scope},
           {"instances", instances},
           {"verdict", passed() ? "pass" : "fail"},
           {"failures", fs},
           {"details", details}};
  if (include_meta) out["elapsed_ms"] = std::round(elapsed_ms * 1000.0) / 1000.0;
  return out;
}

VerificationReport verify(Theorem theorem, const VerifyScope& scope, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.theorem = theorem;
  report.scope = scope_json(scope);
  const unsigned jobs = options.jobs;

  switch (theorem) {
    case Theorem::Extremal:
    case Theorem::Greedy:
    case Theorem::Alter:
    case Theorem::Alter2: {
      const auto seqs = scope_sequences(scope);
      std::function<ItemResult(const DegreeSequence&)> fn;
      if (theorem == Theorem::Extremal || theorem == Theorem::Greedy)
        fn = [&](const DegreeSequence& d) { return check_extremal(d, options, theorem == Theorem::Extremal); };
      else
        fn = [&](const DegreeSequence& d) { return check_characterization(d, options, theorem == Theorem::Alter); };
      auto results = run_items(seqs, jobs, fn);
      Json per = Json::array();
      for (const auto& r : results) per.push_back(r.detail);
      report.details = seqs.size() == 1 ? results.front().detail : Json{{"sequences", per}};
      absorb(report, results);
      break;
    }
    case Theorem::DiffDegree: {
      std::vector<std::pair<DegreeSequence, DegreeSequence>> pairs;
      if (scope.sequence && scope.sequence2) {
        if (scope.sequence->order() != scope.sequence2->order())
          throw InvalidArgument("diffdegree: sequences must have equal length");
        if (!majorizes(*scope.sequence, *scope.sequence2))
          throw InvalidArgument("diffdegree: seq is not majorized by seq2");
        pairs.emplace_back(*scope.sequence, *scope.sequence2);
      } else {
        const int n = scope_order(scope, "diffdegree");
        const auto seqs = all_tree_degree_sequences(n);
        for (const auto& a : seqs)
          for (const auto& b : seqs)
            if (a != b && majorizes(a, b)) pairs.emplace_back(a, b);
      }
      auto results = run_items<std::pair<DegreeSequence, DegreeSequence>>(pairs, jobs, check_chain);
      if (pairs.size() == 1) {
        report.details = results.front().detail;
      } else {
        std::size_t longest = 0;
        for (const auto& r : results) longest = std::max(longest, r.detail["chain"].size());
        report.details = Json{{"pairs", pairs.size()}, {"longest_chain", longest}};
      }
      absorb(report, results);
      break;
    }
    case Theorem::Rooted: {
      std::vector<Graph> trees;
      if (scope.sequence) trees = enumerate_trees(*scope.sequence, {options.cap});
      else trees = all_trees(scope_order(scope, "rooted"), {options.cap});
      std::map<LeveledDegreeSequence, LevelGroup> groups;
      for (const auto& t : trees) {
        const auto code = canonical_form(t);
        const auto value = sombor_index(t);
        for (const auto& root : all_roots(t)) {
          const auto rt = rooted_view(t, root);
          auto levels = leveled_degree_sequence(rt);
          auto [it, fresh] = groups.try_emplace(std::move(levels));
          auto& g = it->second;
          if (fresh || value.value < g.min_value) {
            g.min_value = value.value;
            g.min_types = value.edge_types;
            g.witness = t;
          }
          g.trees.insert(code);
        }
      }
      std::vector<std::pair<LeveledDegreeSequence, LevelGroup>> entries(groups.begin(), groups.end());
      auto results = run_items<std::pair<LeveledDegreeSequence, LevelGroup>>(entries, jobs, check_rooted);
      std::size_t multi = 0;
      for (const auto& [levels, g] : entries)
        if (g.trees.size() >= 2) ++multi;
      report.details = Json{{"trees", trees.size()}, {"leveled_sequences", entries.size()},
                            {"with_several_trees", multi}};
      absorb(report, results);
      break;
    }
    case Theorem::Unicyclic: {
      const int n = scope_order(scope, "unicyclic");
      if (n < 3 || n > 10) throw InvalidArgument("unicyclic: order must be in 3..10");
      std::vector<int> girths;
      for (int k = 3; k <= n; ++k) girths.push_back(k);
      auto results = run_items<int>(girths, jobs, [n](const int& k) { return check_unicyclic(n, k); });
      Json per = Json::array();
      for (const auto& r : results) per.push_back(r.detail);
      report.details = Json{{"girths", per}};
      absorb(report, results);
      break;
    }
    case Theorem::CorollaryMaxDegree:
    case Theorem::CorollaryLeaves:
    case Theorem::CorollaryDiameter:
    case Theorem::CorollaryBranching: {
      const auto kind = corollary_kind_of(theorem);
      const int n = scope_order(scope, to_string(theorem));
      if (n < 1) throw InvalidArgument("corollary: order must be at least 1");
      const auto trees = all_trees(n, {options.cap});
      std::vector<CorollaryCase> cases;
      for (int p = 0; p <= n; ++p) {
        try {
          corollary_sequence(kind, n, p);
          cases.push_back({kind, n, p});
        } catch (const NonRealizable&) {
        }
      }
      auto results = run_items<CorollaryCase>(
          cases, jobs, [&trees](const CorollaryCase& c) { return check_corollary(c, trees); });
      Json per = Json::array();
      for (const auto& r : results) per.push_back(r.detail);
      report.details = Json{{"parameters", per}};
      absorb(report, results);
      break;
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ScanReport scan_report(const DegreeSequence& d, const EnumerationOptions& options) {
  const auto scan = extremal_scan(d, options);
  const auto greedy = sombor_index(greedy_tree(d));
  const auto alt = sombor_index(alternating_greedy_graph(d));
  const bool min_ok = greedy.edge_types == scan.min_value.edge_types;
  const bool max_ok = alt.edge_types == scan.max_value.edge_types;
  ScanReport out;
  out.consistent = min_ok && max_ok;
  out.json = Json{{"sequence", d.to_string()},
                  {"tree_count", scan.tree_count},
                  {"edge_type_classes", scan.distinct_edge_type_classes},
                  {"min", value_json(scan.min_value)},
                  {"max", value_json(scan.max_value)},
                  {"argmin_count", scan.argmin.size()},
                  {"argmax_count", scan.argmax.size()},
                  {"argmin", codes_json(scan.argmin)},
                  {"argmax", codes_json(scan.argmax)},
                  {"checks",
                   {{"greedy", report_number(greedy.value)},
                    {"greedy_is_min", min_ok},
                    {"altgreedy", report_number(alt.value)},
                    {"altgreedy_is_max", max_ok}}}};
  return out;
}

}  // namespace sombor
