#include "critgroup/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <ostream>
#include <sstream>

#include "critgroup/error.hpp"

namespace critgroup {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw Error(ErrorKind::InvalidGraph, "negative vertex count");
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(ErrorKind::InvalidGraph, "edge {" + std::to_string(a) + ", " +
                                               std::to_string(b) + "} out of range");
    }
    if (a == b) throw Error(ErrorKind::InvalidGraph, "loop at vertex " + std::to_string(a));
    edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw Error(ErrorKind::InvalidGraph, "parallel edge {" + std::to_string(dup->u) + ", " +
                                             std::to_string(dup->v) + "}");
  }
  incidence_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[static_cast<std::size_t>(i)];
    incidence_[static_cast<std::size_t>(e.u)].push_back({e.v, i});
    incidence_[static_cast<std::size_t>(e.v)].push_back({e.u, i});
  }
  for (auto& inc : incidence_) {
    std::sort(inc.begin(), inc.end(),
              [](const Incidence& x, const Incidence& y) { return x.neighbor < y.neighbor; });
  }
}

std::optional<int> Graph::find_edge(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return std::nullopt;
  for (const auto& inc : incidence(a)) {
    if (inc.neighbor == b) return inc.edge;
  }
  return std::nullopt;
}

std::vector<int> Graph::component_labels() const {
  std::vector<int> label(static_cast<std::size_t>(n_), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& inc : incidence(v)) {
        auto& l = label[static_cast<std::size_t>(inc.neighbor)];
        if (l < 0) {
          l = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  return label;
}

int Graph::component_count() const {
  auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool Graph::is_connected() const { return component_count() <= 1; }

std::optional<std::vector<int>> Graph::bipartition() const {
  std::vector<int> color(static_cast<std::size_t>(n_), -1);
  std::deque<int> queue;
  for (int s = 0; s < n_; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const auto& inc : incidence(v)) {
        auto& c = color[static_cast<std::size_t>(inc.neighbor)];
        if (c < 0) {
          c = 1 - color[static_cast<std::size_t>(v)];
          queue.push_back(inc.neighbor);
        } else if (c == color[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

namespace {

int parse_int(const std::string& token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorKind::ParseError, "expected an integer, got '" + token + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream lines{std::string(text)};
  for (std::string line; std::getline(lines, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    for (std::string w; words >> w;) tokens.push_back(w);
  }
  if (tokens.size() < 2) throw Error(ErrorKind::ParseError, "missing 'n m' header");
  const int n = parse_int(tokens[0]);
  const int m = parse_int(tokens[1]);
  if (m < 0) throw Error(ErrorKind::ParseError, "negative edge count");
  if (tokens.size() != 2 + 2 * static_cast<std::size_t>(m)) {
    throw Error(ErrorKind::ParseError, "header announces " + std::to_string(m) +
                                           " edges but the body has " +
                                           std::to_string(tokens.size() - 2) + " numbers");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(parse_int(tokens[2 + 2 * static_cast<std::size_t>(i)]),
                       parse_int(tokens[3 + 2 * static_cast<std::size_t>(i)]));
  }
  return Graph(n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + ' ' + std::to_string(g.edge_count()) + '\n';
  for (const auto& e : g.edges()) out += std::to_string(e.u) + ' ' + std::to_string(e.v) + '\n';
  return out;
}

std::string compact_descriptor(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + ':';
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(g.edges()[i].u) + '-' + std::to_string(g.edges()[i].v);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Graph& g) { return os << to_edge_list(g); }

Orientation canonical_orientation(const Graph& g) {
  return Orientation(static_cast<std::size_t>(g.edge_count()), 1);
}

}  // namespace critgroup
