#include "sccay/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "sccay/error.hpp"

namespace sccay {

std::string to_graph6(const DenseGraph& g) {
  const int n = g.size();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits) out += static_cast<char>((acc << (6 - nbits)) + 63);
  return out;
}

DenseGraph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char ch : text) {
    if (ch < 63 || ch > 126) throw ParseError("graph6: byte outside 63..126");
  }
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw ParseError("graph6: unsupported size header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - 63);
    pos = 4;
  }
  if (n < 1) throw ParseError("graph6: graph has no vertices");
  if (n > DenseGraph::kMaxVertices) throw ParseError("graph6: graph exceeds dense size budget");
  const std::int64_t pairs = std::int64_t{n} * (n - 1) / 2;
  const std::int64_t expected = (pairs + 5) / 6;
  if (static_cast<std::int64_t>(text.size() - pos) != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes for n = " +
                     std::to_string(n) + ", got " + std::to_string(text.size() - pos));
  }
  GraphBuilder b(n);
  std::int64_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + static_cast<std::size_t>(bit / 6)] - 63;
      if ((byte >> (5 - bit % 6)) & 1) b.add_edge(i, j);
    }
  }
  const int tail = static_cast<int>(expected * 6 - pairs);
  if (tail && ((text.back() - 63) & ((1 << tail) - 1))) throw ParseError("graph6: nonzero padding bits");
  return std::move(b).build();
}

std::string to_edge_list(const DenseGraph& g) {
  std::string out = "n " + std::to_string(g.size()) + "\n";
  for (int u = 0; u < g.size(); ++u) {
    for (int v : g.neighbors(u)) {
      if (u < v) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
  }
  return out;
}

DenseGraph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  int max_label = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "n") {
      if (!(ls >> n) || n < 1) throw ParseError("edge list line " + std::to_string(lineno) + ": bad vertex count");
      continue;
    }
    int u = 0, v = 0;
    std::istringstream fs(first);
    if (!(fs >> u) || !fs.eof() || !(ls >> v)) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
    }
    std::string extra;
    if (ls >> extra) throw ParseError("edge list line " + std::to_string(lineno) + ": trailing data");
    if (u < 0 || v < 0) throw ParseError("edge list line " + std::to_string(lineno) + ": negative label");
    edges.emplace_back(u, v);
    max_label = std::max({max_label, u, v});
  }
  if (n < 0) n = max_label + 1;
  if (n < 1) throw ParseError("edge list: no vertices");
  if (max_label >= n) throw ParseError("edge list: label exceeds declared vertex count");
  GraphBuilder b(n);
  try {
    for (auto [u, v] : edges) b.add_edge(u, v);
  } catch (const StructuralError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
  return std::move(b).build();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << contents;
}

}  // namespace sccay
