#include "sombor/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "sombor/errors.hpp"

namespace sombor {

namespace {

std::vector<long long> line_numbers(std::string_view line, int line_no) {
  std::vector<long long> out;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p != end) {
    if (*p == ' ' || *p == '\t' || *p == '\r') {
      ++p;
      continue;
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{} || (ptr != end && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
      throw ParseError("line " + std::to_string(line_no) + ": expected integers, got '" +
                       std::string(line) + "'");
    }
    out.push_back(value);
    p = ptr;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<Graph> g;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto numbers = line_numbers(line, line_no);
    if (numbers.empty()) continue;
    if (!g) {
      if (numbers.size() != 1 || numbers[0] < 0 || numbers[0] > 1'000'000) {
        throw ParseError("line " + std::to_string(line_no) + ": expected vertex count");
      }
      g.emplace(static_cast<int>(numbers[0]));
      continue;
    }
    if (numbers.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    const long long n = g->vertex_count();
    for (long long x : numbers) {
      if (x < 0 || x >= n) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex " + std::to_string(x) +
                         " out of range");
      }
    }
    try {
      g->add_edge(static_cast<Vertex>(numbers[0]), static_cast<Vertex>(numbers[1]));
    } catch (const InvalidArgument& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!g) throw ParseError("missing vertex count");
  return *std::move(g);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string export_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v << " [label=\"" << v << " (" << g.degree(v) << ")\"];\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace sombor
