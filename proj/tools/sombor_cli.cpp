// Command-line front end over the C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sombor/sombor.h"

namespace {

using Json = nlohmann::ordered_json;

struct Output {
  bool pretty = false;
  bool meta = true;
};

int exit_code(sombor_status s) {
  switch (s) {
    case SOMBOR_OK: return 0;
    case SOMBOR_VERIFICATION_FAILED: return 1;
    case SOMBOR_PARSE_ERROR:
    case SOMBOR_INVALID_ARGUMENT: return 2;
    case SOMBOR_INVALID_SEQUENCE: return 3;
    case SOMBOR_CAP_EXCEEDED: return 4;
    default: return 1;
  }
}

int fail(sombor_status s) {
  std::cerr << "error: " << sombor_last_error() << "\n";
  return exit_code(s);
}

struct StringDeleter {
  void operator()(char* s) const { sombor_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
  void operator()(sombor_graph* g) const { sombor_graph_free(g); }
};
using GraphPtr = std::unique_ptr<sombor_graph, GraphDeleter>;

void print_pretty(const Json& j, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      std::cout << indent << key << ":\n";
      print_pretty(value, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      std::cout << indent << key << ": (" << value.size() << ")\n";
      for (const auto& item : value) {
        std::cout << indent << "  -\n";
        print_pretty(item, indent + "    ");
      }
    } else {
      std::string text = value.is_string() ? value.get<std::string>() : value.dump();
      std::printf("%s%-20s %s\n", indent.c_str(), key.c_str(), text.c_str());
    }
  }
}

void emit(const Json& j, const Output& out) {
  if (out.pretty) print_pretty(j);
  else std::cout << j.dump() << "\n";
}

bool write_file(const std::string& path, const char* text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

int run_compute(const std::string& file, double alpha, const Output& out) {
  sombor_graph* raw = nullptr;
  sombor_status s;
  if (file == "-") {
    std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    s = sombor_graph_parse(text.c_str(), &raw);
  } else {
    s = sombor_graph_read_file(file.c_str(), &raw);
  }
  if (s != SOMBOR_OK) return fail(s);
  GraphPtr g(raw);
  char* json = nullptr;
  if ((s = sombor_compute_json(g.get(), alpha, &json)) != SOMBOR_OK) return fail(s);
  emit(Json::parse(CString(json).get()), out);
  return 0;
}

int run_build(const std::string& kind, const std::string& input, const std::string& out_path,
              const std::string& dot_path, const Output& out) {
  sombor_graph* raw = nullptr;
  sombor_status s = sombor_build(kind.c_str(), input.c_str(), &raw);
  if (s != SOMBOR_OK) return fail(s);
  GraphPtr g(raw);

  char* text = nullptr;
  if ((s = sombor_compute_json(g.get(), 0.5, &text)) != SOMBOR_OK) return fail(s);
  const Json computed = Json::parse(CString(text).get());

  if ((s = sombor_graph_edge_list(g.get(), &text)) != SOMBOR_OK) return fail(s);
  CString edge_list(text);
  if (!out_path.empty() && !write_file(out_path, edge_list.get())) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  if (!dot_path.empty()) {
    if ((s = sombor_graph_dot(g.get(), &text)) != SOMBOR_OK) return fail(s);
    if (!write_file(dot_path, CString(text).get())) {
      std::cerr << "error: cannot write " << dot_path << "\n";
      return 2;
    }
  }

  Json edges = Json::array();
  std::istringstream lines(edge_list.get());
  std::string header;
  std::getline(lines, header);
  for (int u, v; lines >> u >> v;) edges.push_back({u, v});

  Json result{{"kind", kind},
              {"input", input},
              {"vertices", computed["vertices"]},
              {"sombor", computed["sombor"]},
              {"degree_sequence", computed["degree_sequence"]},
              {"edges", edges}};
  emit(result, out);
  return 0;
}

int run_json_call(sombor_status s, char* json, const Output& out) {
  if (json == nullptr) return fail(s);
  emit(Json::parse(CString(json).get()), out);
  if (s != SOMBOR_OK && s != SOMBOR_VERIFICATION_FAILED) return fail(s);
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sombor index of trees: extremal constructions and exhaustive checks", "sombor"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(sombor_version()));

  Output out;
  bool no_meta = false;
  app.add_flag("--pretty", out.pretty, "Human-readable output instead of JSON");
  app.add_flag("--no-meta", no_meta, "Omit timing fields");

  sombor_options options;
  sombor_options_init(&options);

  auto* compute = app.add_subcommand("compute", "Sombor index of an edge-list file ('-' for stdin)");
  std::string file;
  double alpha = 0.5;
  compute->add_option("file", file, "Edge-list file")->required();
  compute->add_option("--alpha", alpha, "Exponent of the alpha-Sombor index")->capture_default_str();

  auto* build = app.add_subcommand("build", "Construct an extremal tree");
  std::string kind;
  std::string seq;
  std::string levels;
  std::string out_path;
  std::string dot_path;
  build->add_option("--kind", kind, "greedy | altgreedy | level | altlevel | tailed-cycle")
      ->required()
      ->check(CLI::IsMember({"greedy", "altgreedy", "level", "altlevel", "tailed-cycle"}));
  build->add_option("--seq", seq, "Degree sequence, or n,k for tailed-cycle");
  build->add_option("--levels", levels, "Leveled degree sequence, levels separated by '/'");
  build->add_option("--out", out_path, "Write the edge list here");
  build->add_option("--dot", dot_path, "Write Graphviz DOT here");

  auto* scan = app.add_subcommand("scan", "Exhaustive extremal scan of all trees with a degree sequence");
  std::string scan_seq;
  scan->add_option("--seq", scan_seq, "Degree sequence")->required();

  auto* verify = app.add_subcommand("verify", "Check a theorem exhaustively");
  std::string theorem;
  int n = 0;
  std::string seq1;
  std::string seq2;
  verify->add_option("--theorem", theorem, "Theorem id")->required();
  auto* n_opt = verify->add_option("--n", n, "Order: check every tree degree sequence of order n");
  auto* seq_opt = verify->add_option("--seq", seq1, "Degree sequence");
  verify->add_option("--seq2", seq2, "Second sequence (diffdegree)")->needs(seq_opt);
  n_opt->excludes(seq_opt);
  verify->add_option("--jobs", options.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* corollary = app.add_subcommand("corollary", "Extremal sequence and tree of a corollary family");
  std::string ckind;
  int cn = 0;
  int param = 0;
  corollary->add_option("--kind", ckind, "max-degree | leaves | diameter | branching")->required();
  corollary->add_option("--n", cn, "Order")->required();
  corollary->add_option("--param", param, "Family parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  out.meta = !no_meta;
  options.include_meta = out.meta ? 1 : 0;

  if (*compute) return run_compute(file, alpha, out);
  if (*build) {
    const bool leveled = kind == "level" || kind == "altlevel";
    const std::string& input = leveled ? levels : seq;
    if (input.empty()) {
      std::cerr << "error: --kind=" << kind << " needs " << (leveled ? "--levels" : "--seq") << "\n";
      return 2;
    }
    return run_build(kind, input, out_path, dot_path, out);
  }
  char* json = nullptr;
  if (*scan) {
    const auto s = sombor_scan_json(scan_seq.c_str(), &options, &json);
    return run_json_call(s, json, out);
  }
  if (*verify) {
    if (n <= 0 && seq1.empty()) {
      std::cerr << "error: verify needs --n or --seq\n";
      return 2;
    }
    const auto s = sombor_verify_json(theorem.c_str(), n, seq1.c_str(), seq2.c_str(), &options, &json);
    return run_json_call(s, json, out);
  }
  if (*corollary) {
    const auto s = sombor_corollary_json(ckind.c_str(), cn, param, &json);
    return run_json_call(s, json, out);
  }
  return 2;
}
