#include "gradv/edgelist_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "gradv/format.hpp"

namespace gradv {

namespace {

bool is_integer_token(const std::string& token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

double parse_length(const std::string& token, int line_no) {
  double value = 0.0;
  auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
    fail(Errc::parse_error,
         "line " + std::to_string(line_no) + ": bad length '" + token + "'");
  }
  return value;
}

struct RawEdge {
  std::string src, dst;
  double length;
};

}  // namespace

Graph read_edge_list(std::istream& is) {
  std::vector<RawEdge> raw;
  bool any_integer = false;
  bool any_label = false;

  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;

    std::istringstream fields(line);
    std::string src, dst, len;
    if (!(fields >> src >> dst >> len)) {
      fail(Errc::parse_error,
           "line " + std::to_string(line_no) + ": expected src dst length");
    }
    std::string extra;
    if (fields >> extra) {
      fail(Errc::parse_error,
           "line " + std::to_string(line_no) + ": trailing token '" + extra + "'");
    }
    for (const std::string& token : {src, dst}) {
      (is_integer_token(token) ? any_integer : any_label) = true;
    }
    raw.push_back({src, dst, parse_length(len, line_no)});
  }
  if (is.bad()) fail(Errc::io_error, "read failure");
  if (any_integer && any_label) {
    fail(Errc::parse_error, "mixed integer and label node tokens");
  }

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  if (any_label) {
    // Label mode: indices by first appearance.
    std::unordered_map<std::string, NodeId> index;
    std::vector<std::string> labels;
    auto intern = [&](const std::string& token) {
      auto [it, inserted] = index.emplace(token, static_cast<NodeId>(labels.size()));
      if (inserted) labels.push_back(token);
      return it->second;
    };
    for (const RawEdge& e : raw) {
      edges.push_back({intern(e.src), intern(e.dst), e.length});
    }
    auto n = static_cast<NodeId>(labels.size());
    return Graph::from_edges(std::move(edges), n, std::move(labels));
  }
  auto parse_index = [](const std::string& token) {
    NodeId id = 0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), id);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
      fail(Errc::parse_error, "node index '" + token + "' out of range");
    }
    return id;
  };
  for (const RawEdge& e : raw) {
    edges.push_back({parse_index(e.src), parse_index(e.dst), e.length});
  }
  return Graph::from_edges(std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) fail(Errc::io_error, "cannot open '" + path + "'");
  return read_edge_list(is);
}

void write_edge_list(const Graph& g, std::ostream& os) {
  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Edge& ea = g.edge(a);
    const Edge& eb = g.edge(b);
    return std::tie(ea.src, ea.dst) < std::tie(eb.src, eb.dst);
  });
  for (std::size_t i : order) {
    const Edge& e = g.edge(i);
    os << g.label(e.src) << '\t' << g.label(e.dst) << '\t'
       << format_double(e.length) << "\n";
  }
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream os(path);
  if (!os) fail(Errc::io_error, "cannot open '" + path + "' for writing");
  write_edge_list(g, os);
  if (!os) fail(Errc::io_error, "write failure on '" + path + "'");
}

void write_coordinates(const Graph& g,
                       const std::vector<std::pair<double, double>>& coords,
                       std::ostream& os) {
  if (static_cast<NodeId>(coords.size()) != g.node_count()) {
    fail(Errc::dimension_mismatch, "coordinate count does not match graph");
  }
  for (NodeId u = 0; u < g.node_count(); ++u) {
    os << g.label(u) << '\t'
       << format_double(coords[static_cast<std::size_t>(u)].first) << '\t'
       << format_double(coords[static_cast<std::size_t>(u)].second) << "\n";
  }
}

NodeId resolve_node(const Graph& g, const std::string& token) {
  if (g.has_labels()) {
    if (auto id = g.find_label(token)) return *id;
    fail(Errc::unknown_node, "no node labeled '" + token + "'");
  }
  if (!is_integer_token(token)) {
    fail(Errc::unknown_node, "graph is unlabeled, expected an index, got '" +
                                 token + "'");
  }
  NodeId id = 0;
  auto res = std::from_chars(token.data(), token.data() + token.size(), id);
  if (res.ec != std::errc{} || id < 0 || id >= g.node_count()) {
    fail(Errc::unknown_node, "node index '" + token + "' out of range");
  }
  return id;
}

StateVector read_mass_file(const Graph& g, std::istream& is) {
  StateVector f(static_cast<std::size_t>(g.node_count()), 0.0);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    std::string node, value;
    if (!(fields >> node >> value)) {
      fail(Errc::parse_error,
           "line " + std::to_string(line_no) + ": expected node value");
    }
    f[static_cast<std::size_t>(resolve_node(g, node))] =
        parse_length(value, line_no);
  }
  if (is.bad()) fail(Errc::io_error, "read failure");
  return f;
}

}  // namespace gradv
