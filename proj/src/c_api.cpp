#include "sombor/sombor.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "sombor/degseq.hpp"
#include "sombor/errors.hpp"
#include "sombor/extremal.hpp"
#include "sombor/io.hpp"
#include "sombor/oracle.hpp"
#include "sombor/rooted.hpp"
#include "sombor/transforms.hpp"
#include "sombor/verify.hpp"

struct sombor_graph {
  sombor::Graph graph;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
sombor_status guarded(Fn&& fn) noexcept {
  g_last_error.clear();
  try {
    return fn();
  } catch (const sombor::ParseError& e) {
    g_last_error = e.what();
    return SOMBOR_PARSE_ERROR;
  } catch (const sombor::NonRealizable& e) {
    g_last_error = e.what();
    return SOMBOR_INVALID_SEQUENCE;
  } catch (const sombor::CapExceeded& e) {
    g_last_error = e.what();
    return SOMBOR_CAP_EXCEEDED;
  } catch (const sombor::InvalidArgument& e) {
    g_last_error = e.what();
    return SOMBOR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SOMBOR_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return SOMBOR_INTERNAL_ERROR;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw sombor::InvalidArgument(std::string(what) + " is null");
}

sombor::DegreeSequence sequence_arg(const char* text) {
  require(text, "sequence");
  return sombor::DegreeSequence::validate(sombor::parse_sequence(text));
}

sombor_options options_or_default(const sombor_options* options) {
  sombor_options o;
  if (options != nullptr) return *options;
  sombor_options_init(&o);
  return o;
}

sombor::Graph build_graph(const std::string& kind, const char* input) {
  require(input, "input");
  if (kind == "greedy") return sombor::greedy_tree(sequence_arg(input));
  if (kind == "altgreedy") return sombor::alternating_greedy_graph(sequence_arg(input));
  if (kind == "level" || kind == "altlevel") {
    const auto levels = sombor::LeveledDegreeSequence::parse(input);
    if (!levels.is_consistent()) throw sombor::NonRealizable("leveled sequence is not realizable: " + levels.to_string());
    return kind == "level" ? sombor::level_greedy_tree(levels).tree()
                           : sombor::alternating_level_greedy_tree(levels).tree();
  }
  if (kind == "tailed-cycle") {
    const auto parts = sombor::parse_sequence(input);
    if (parts.size() != 2) throw sombor::ParseError("tailed-cycle input must be \"n,k\"");
    return sombor::tailed_cycle(parts[0], parts[1]);
  }
  throw sombor::InvalidArgument("unknown build kind: " + kind);
}

}  // namespace

extern "C" {

const char* sombor_last_error(void) { return g_last_error.c_str(); }

const char* sombor_version(void) { return "0.1.0"; }

void sombor_string_free(char* s) { std::free(s); }

void sombor_options_init(sombor_options* options) {
  if (options == nullptr) return;
  options->cap = sombor::enumeration_cap_from_env();
  options->jobs = 1;
  options->include_meta = 1;
}

sombor_status sombor_graph_parse(const char* text, sombor_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new sombor_graph{sombor::parse_edge_list(text)};
    return SOMBOR_OK;
  });
}

sombor_status sombor_graph_read_file(const char* path, sombor_graph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new sombor_graph{sombor::read_edge_list_file(path)};
    return SOMBOR_OK;
  });
}

void sombor_graph_free(sombor_graph* g) { delete g; }

int sombor_graph_vertex_count(const sombor_graph* g) { return g ? g->graph.vertex_count() : 0; }

size_t sombor_graph_edge_count(const sombor_graph* g) { return g ? g->graph.edge_count() : 0; }

sombor_status sombor_graph_edge_list(const sombor_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup_string(sombor::serialize_edge_list(g->graph));
    return SOMBOR_OK;
  });
}

sombor_status sombor_graph_dot(const sombor_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup_string(sombor::export_dot(g->graph));
    return SOMBOR_OK;
  });
}

sombor_status sombor_graph_index(const sombor_graph* g, double alpha, double* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = sombor::sombor_index(g->graph, alpha).value;
    return SOMBOR_OK;
  });
}

sombor_status sombor_graph_degree_sequence(const sombor_graph* g, int* out, size_t capacity, size_t* count) {
  return guarded([&] {
    require(g, "graph");
    const auto degrees = sombor::degree_sequence_of(g->graph);
    if (count != nullptr) *count = degrees.size();
    if (out != nullptr)
      for (size_t i = 0; i < degrees.size() && i < capacity; ++i) out[i] = degrees[i];
    return SOMBOR_OK;
  });
}

sombor_status sombor_compute_json(const sombor_graph* g, double alpha, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const auto value = sombor::sombor_index(g->graph, alpha);
    const sombor::Json j{{"vertices", g->graph.vertex_count()},
                         {"edges", g->graph.edge_count()},
                         {"alpha", alpha},
                         {"sombor", sombor::report_number(value.value)},
                         {"degree_sequence", sombor::degree_sequence_of(g->graph)},
                         {"edge_types", sombor::edge_types_json(value.edge_types)},
                         {"connected", g->graph.is_connected()},
                         {"tree", g->graph.is_tree()}};
    *out = dup_string(j.dump());
    return SOMBOR_OK;
  });
}

sombor_status sombor_build(const char* kind, const char* input, sombor_graph** out) {
  return guarded([&] {
    require(kind, "kind");
    require(out, "out");
    *out = new sombor_graph{build_graph(kind, input)};
    return SOMBOR_OK;
  });
}

sombor_status sombor_scan_json(const char* sequence, const sombor_options* options, char** out) {
  return guarded([&] {
    require(out, "out");
    const auto o = options_or_default(options);
    const auto report = sombor::scan_report(sequence_arg(sequence), {o.cap});
    *out = dup_string(report.json.dump());
    return report.consistent ? SOMBOR_OK : SOMBOR_VERIFICATION_FAILED;
  });
}

sombor_status sombor_verify_json(const char* theorem, int n, const char* seq, const char* seq2,
                                 const sombor_options* options, char** out) {
  return guarded([&] {
    require(theorem, "theorem");
    require(out, "out");
    const auto o = options_or_default(options);
    sombor::VerifyScope scope;
    if (n > 0) scope.order = n;
    if (seq != nullptr && *seq != '\0') scope.sequence = sequence_arg(seq);
    if (seq2 != nullptr && *seq2 != '\0') scope.sequence2 = sequence_arg(seq2);
    if (scope.order && scope.sequence) throw sombor::InvalidArgument("give either n or seq, not both");
    if (scope.sequence2 && !scope.sequence) throw sombor::InvalidArgument("seq2 requires seq");
    const auto report = sombor::verify(sombor::parse_theorem(theorem), scope, {o.cap, o.jobs});
    *out = dup_string(report.to_json(o.include_meta != 0).dump());
    return report.passed() ? SOMBOR_OK : SOMBOR_VERIFICATION_FAILED;
  });
}

sombor_status sombor_corollary_json(const char* kind, int n, int param, char** out) {
  return guarded([&] {
    require(kind, "kind");
    require(out, "out");
    const auto k = sombor::parse_corollary_kind(kind);
    const auto seq = sombor::corollary_sequence(k, n, param);
    const bool greedy = k == sombor::CorollaryKind::Branching;
    const auto tree = greedy ? sombor::greedy_tree(seq) : sombor::alternating_greedy_graph(seq);
    const sombor::Json j{{"kind", std::string(sombor::to_string(k))},
                         {"n", n},
                         {"param", param},
                         {"sequence", seq.to_string()},
                         {"tree", greedy ? "greedy" : "altgreedy"},
                         {"bound", greedy ? "lower" : "upper"},
                         {"sombor", sombor::report_number(sombor::sombor_index(tree).value)},
                         {"edges", sombor::edges_json(tree)}};
    *out = dup_string(j.dump());
    return SOMBOR_OK;
  });
}

}  // extern "C"
