#include "locascope/graph_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "locascope/error.hpp"

namespace locascope {
namespace {

[[noreturn]] void parse_failure(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!blank(line)) return true;
    }
    return false;
  };
  if (!next_line()) throw Error(ErrorCode::ParseError, "line 1: missing header 'n m d'");
  std::size_t n = 0, m = 0, d = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m >> d) || (header >> extra)) parse_failure(line_no, "expected header 'n m d', got '" + line + "'");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<Edge> seen;
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_line()) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no + 1) + ": expected " +
                                                             std::to_string(m) + " edges, found " + std::to_string(i));
    std::istringstream row(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) parse_failure(line_no, "expected 'u v', got '" + line + "'");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      parse_failure(line_no, "vertex out of range in '" + line + "'");
    }
    if (u == v) parse_failure(line_no, "self-loop '" + line + "'");
    const Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second) parse_failure(line_no, "duplicate edge '" + line + "'");
    edges.push_back(e);
  }
  if (next_line()) parse_failure(line_no, "unexpected content after " + std::to_string(m) + " edges");
  try {
    return build_graph(n, edges, d);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, "invalid graph: " + std::string(e.what()));
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  try {
    return read_graph(in);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw Error(ErrorCode::ParseError, path + ": " + e.what());
    throw;
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << ' ' << g.degree_bound() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + tmp.string() + "'");
    out << contents;
    if (!out.flush()) throw Error(ErrorCode::IoError, "write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot rename onto '" + path + "': " + ec.message());
}

}  // namespace locascope
