#include "efsub/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace efsub {

namespace {

[[noreturn]] void bad_format(const std::string& msg) {
  throw std::runtime_error("malformed graph file: " + msg);
}

std::string strip(const std::string& line) {
  std::string s = line;
  auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  long long n = -1, m = -1;
  std::vector<std::pair<long long, long long>> edges;
  while (std::getline(in, line)) {
    std::string s = strip(line);
    if (s.empty()) continue;
    std::istringstream iss(s);
    if (n < 0) {
      if (!(iss >> n >> m) || n < 0 || m < 0) bad_format("expected header \"n m\"");
    } else {
      long long u, v;
      if (!(iss >> u >> v)) bad_format("expected edge line \"u v\"");
      edges.emplace_back(u, v);
    }
    std::string rest;
    if (iss >> rest) bad_format("trailing tokens on line: " + s);
  }
  if (n < 0) bad_format("missing header \"n m\"");
  if (static_cast<long long>(edges.size()) != m)
    bad_format("edge count mismatch: header says " + std::to_string(m) + ", found " +
               std::to_string(edges.size()));
  Graph g(static_cast<int>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) bad_format("edge endpoint out of range");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  auto edges = g.edges();
  out << g.vertex_count() << " " << edges.size() << "\n";
  for (auto [u, v] : edges) out << u << " " << v << "\n";
}

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 258047) throw std::invalid_argument("graph6: order too large");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, used = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

Graph from_graph6(const std::string& line) {
  std::string s = strip(line);
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s.erase(0, header.size());
  if (s.empty()) bad_format("empty graph6 string");
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) bad_format("truncated graph6 string");
    int c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) bad_format("graph6 byte out of range");
    return c - 63;
  };
  long long n;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    n = next();
    n = (n << 6) | next();
    n = (n << 6) | next();
  }
  Graph g(static_cast<int>(n));
  int acc = 0, left = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (left == 0) {
        acc = next();
        left = 6;
      }
      if ((acc >> (left - 1)) & 1) g.add_edge(u, v);
      --left;
    }
  if (pos != s.size()) bad_format("trailing bytes in graph6 string");
  return g;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string content = buf.str();
  std::istringstream scan(content);
  std::string line, sig;
  while (std::getline(scan, line)) {
    sig = strip(line);
    if (!sig.empty()) break;
  }
  if (sig.empty()) bad_format("empty file: " + path);
  std::istringstream hdr(sig);
  long long n, m;
  std::string rest;
  if (hdr >> n >> m && !(hdr >> rest)) {
    std::istringstream whole(content);
    return read_edge_list(whole);
  }
  return from_graph6(sig);
}

void save_graph_file(const std::string& path, const Graph& g, const std::string& format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  if (format == "graph6") {
    out << to_graph6(g) << "\n";
  } else if (format == "edgelist") {
    write_edge_list(out, g);
  } else {
    throw std::invalid_argument("unknown graph format: " + format);
  }
}

}  // namespace efsub
