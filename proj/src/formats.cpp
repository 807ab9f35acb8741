#include "submatch/formats.hpp"

#include <sstream>

#include "submatch/errors.hpp"

namespace submatch {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  for (auto& l : lines)
    if (!l.empty() && l.back() == '\r') l.pop_back();
  return lines;
}

bool parse_ints(const std::string& line, int want, long long* out) {
  std::istringstream ss(line);
  for (int i = 0; i < want; ++i)
    if (!(ss >> out[i])) return false;
  std::string rest;
  if (ss >> rest) return false;
  return true;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty input", 1);
  long long hdr[2];
  if (!parse_ints(lines[0], 2, hdr)) throw ParseError("expected header \"n m\"", 1);
  long long n = hdr[0], m = hdr[1];
  if (n < 0 || m < 0) throw ParseError("negative count in header", 1);
  if (static_cast<long long>(lines.size()) < 1 + m)
    throw ParseError("expected " + std::to_string(m) + " edge lines", static_cast<int>(lines.size()) + 1);
  for (std::size_t i = 1 + m; i < lines.size(); ++i) {
    std::istringstream ss(lines[i]);
    std::string tok;
    if (ss >> tok) throw ParseError("unexpected content after edge list", static_cast<int>(i) + 1);
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (long long i = 0; i < m; ++i) {
    int line_no = static_cast<int>(i) + 2;
    long long uv[2];
    if (!parse_ints(lines[1 + i], 2, uv)) throw ParseError("expected \"u v\"", line_no);
    if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n)
      throw ParseError("vertex out of range", line_no);
    if (uv[0] == uv[1])
      throw SimplicityViolation("loop at line " + std::to_string(line_no));
    edges.push_back({static_cast<int>(uv[0]), static_cast<int>(uv[1])});
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(const std::string& line) {
  if (line.empty()) throw ParseError("empty graph6 line", 1);
  std::size_t pos = 0;
  auto byte = [&](std::size_t i) -> int {
    if (i >= line.size()) throw ParseError("graph6 line truncated", 1);
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 character out of range", 1);
    return c - 63;
  };

  long long n;
  if (byte(0) < 63) {
    n = byte(0);
    pos = 1;
  } else if (line.size() >= 2 && byte(1) < 63) {
    n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    n = 0;
    for (int i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    pos = 8;
  }
  if (n > 100000) throw ParseError("vertex count too large", 1);

  long long nbits = n * (n - 1) / 2;
  long long nbytes = (nbits + 5) / 6;
  if (static_cast<long long>(line.size()) != static_cast<long long>(pos) + nbytes)
    throw ParseError("graph6 payload length mismatch", 1);

  std::vector<char> bits(nbits, 0);
  for (long long i = 0; i < nbytes; ++i) {
    int value = byte(pos + i);
    for (int b = 0; b < 6; ++b) {
      long long bit_index = i * 6 + b;
      int bit = (value >> (5 - b)) & 1;
      if (bit_index < nbits) {
        bits[bit_index] = static_cast<char>(bit);
      } else if (bit != 0) {
        throw ParseError("nonzero padding bits", 1);
      }
    }
  }

  // Bit order is (0,1),(0,2),(1,2),(0,3),...; collect adjacency, then emit
  // edges row-major.
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  long long idx = 0;
  for (long long v = 1; v < n; ++v)
    for (long long u = 0; u < v; ++u, ++idx)
      if (bits[idx]) adj[u][v] = 1;
  std::vector<std::pair<int, int>> edges;
  for (long long u = 0; u < n; ++u)
    for (long long v = u + 1; v < n; ++v)
      if (adj[u][v]) edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string encode_graph6(const Graph& g) {
  long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
    out.push_back(static_cast<char>((n & 0x3f) + 63));
  } else {
    throw InvalidParameter("graph too large for graph6 encoder");
  }
  long long nbits = n * (n - 1) / 2;
  std::vector<char> bits(nbits, 0);
  auto bit_index = [&](long long u, long long v) {  // u < v
    return v * (v - 1) / 2 + u;
  };
  for (auto [a, b] : g.edges()) {
    long long u = std::min(a, b), v = std::max(a, b);
    bits[bit_index(u, v)] = 1;
  }
  for (long long i = 0; i < nbits; i += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) {
      value <<= 1;
      if (i + b < nbits && bits[i + b]) value |= 1;
    }
    out.push_back(static_cast<char>(value + 63));
  }
  return out;
}

std::vector<Graph> parse_graph6_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind(">>graph6<<", 0) == 0) {
      line = line.substr(10);
      if (line.empty()) continue;
    }
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(e.raw, line_no);
    }
  }
  return graphs;
}

}  // namespace submatch
