#include "critgroup/families.hpp"

#include <algorithm>
#include <charconv>

#include "critgroup/error.hpp"

namespace critgroup {

Graph complete_graph(int n) {
  if (n < 1) throw Error(ErrorKind::BadParams, "complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, std::move(e));
}

Graph complete_bipartite_graph(int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw Error(ErrorKind::BadParams, "complete bipartite graph needs sides >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) e.emplace_back(i, n1 + j);
  }
  return Graph(n1 + n2, std::move(e));
}

Graph cube_graph(int d) {
  if (d < 1 || d > 12) throw Error(ErrorKind::BadParams, "cube dimension must be in 1..12");
  const int n = 1 << d;
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < n; ++x) {
    for (int b = 0; b < d; ++b) {
      if (!(x & (1 << b))) e.emplace_back(x, x | (1 << b));
    }
  }
  return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::BadParams, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph path_graph(int n) {
  if (n < 1) throw Error(ErrorKind::BadParams, "path needs n >= 1 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph star_graph(int leaves) {
  if (leaves < 1) throw Error(ErrorKind::BadParams, "star needs at least one leaf");
  return complete_bipartite_graph(1, leaves);
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, std::move(e));
}

Graph octahedron_graph() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (!(j == i + 1 && i % 2 == 0)) e.emplace_back(i, j);
    }
  }
  return Graph(6, std::move(e));
}

Graph dodecahedron_graph() {
  // Outer pentagon a_i = i, middle 10-cycle b_j = 5 + j, inner pentagon c_i = 15 + i.
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, 5 + 2 * i);
    e.emplace_back(5 + 2 * i + 1, 15 + i);
    e.emplace_back(15 + i, 15 + (i + 1) % 5);
  }
  for (int j = 0; j < 10; ++j) e.emplace_back(5 + j, 5 + (j + 1) % 10);
  return Graph(20, std::move(e));
}

Graph icosahedron_graph() {
  // Apex 0, upper ring 1..5, lower ring 6..10, apex 11.
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= 5; ++i) {
    const int next = i % 5 + 1;
    e.emplace_back(0, i);
    e.emplace_back(i, next);
    e.emplace_back(5 + i, 5 + next);
    e.emplace_back(5 + i, 11);
    e.emplace_back(i, 5 + i);
    e.emplace_back(i, 5 + next);
  }
  return Graph(12, std::move(e));
}

namespace {

void expect_params(std::string_view family, const std::vector<int>& params, std::size_t count) {
  if (params.size() != count) {
    throw Error(ErrorKind::BadParams, std::string(family) + " takes " + std::to_string(count) +
                                          " parameter(s), got " + std::to_string(params.size()));
  }
}

}  // namespace

std::vector<std::string> family_names() {
  return {"complete", "complete-bipartite", "cube",        "cycle",
          "path",     "star",               "petersen",    "tetrahedron",
          "octahedron", "dodecahedron",     "icosahedron"};
}

Graph generate_named(std::string_view family, const std::vector<int>& params) {
  const auto names = family_names();
  if (std::find(names.begin(), names.end(), family) == names.end()) {
    throw Error(ErrorKind::UnknownFamily, "unknown family '" + std::string(family) + "'");
  }
  if (family == "complete") {
    expect_params(family, params, 1);
    return complete_graph(params[0]);
  }
  if (family == "complete-bipartite") {
    expect_params(family, params, 2);
    return complete_bipartite_graph(params[0], params[1]);
  }
  if (family == "cube") {
    expect_params(family, params, 1);
    return cube_graph(params[0]);
  }
  if (family == "cycle") {
    expect_params(family, params, 1);
    return cycle_graph(params[0]);
  }
  if (family == "path") {
    expect_params(family, params, 1);
    return path_graph(params[0]);
  }
  if (family == "star") {
    expect_params(family, params, 1);
    return star_graph(params[0]);
  }
  expect_params(family, params, 0);
  if (family == "petersen") return petersen_graph();
  if (family == "tetrahedron") return complete_graph(4);
  if (family == "octahedron") return octahedron_graph();
  if (family == "dodecahedron") return dodecahedron_graph();
  if (family == "icosahedron") return icosahedron_graph();
  throw Error(ErrorKind::UnknownFamily, "unknown family '" + std::string(family) + "'");
}

Graph generate_from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = spec.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view tok = rest.substr(0, comma);
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw Error(ErrorKind::BadParams, "bad family parameter '" + std::string(tok) + "'");
      }
      params.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return generate_named(name, params);
}

ConnectedGraphEnumerator::ConnectedGraphEnumerator(int n_max) : n_max_(n_max), n_(1) {
  if (n_max > kMaxVertices) {
    throw Error(ErrorKind::TooLarge, "enumeration is limited to " +
                                         std::to_string(kMaxVertices) + " vertices");
  }
}

bool ConnectedGraphEnumerator::advance() {
  if (mask_ + 1 < mask_end_) {
    ++mask_;
    return true;
  }
  if (n_ >= n_max_) return false;
  ++n_;
  pairs_.clear();
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) pairs_.emplace_back(i, j);
  }
  mask_ = 0;
  mask_end_ = std::uint32_t{1} << pairs_.size();
  return true;
}

std::optional<Graph> ConnectedGraphEnumerator::next() {
  while (advance()) {
    // Connectivity by repeated neighborhood closure on a vertex bitmask.
    std::uint32_t adj[kMaxVertices] = {};
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      if (mask_ & (std::uint32_t{1} << k)) {
        adj[pairs_[k].first] |= 1u << pairs_[k].second;
        adj[pairs_[k].second] |= 1u << pairs_[k].first;
      }
    }
    std::uint32_t reach = 1;
    for (std::uint32_t prev = 0; prev != reach;) {
      prev = reach;
      for (int v = 0; v < n_; ++v) {
        if (reach & (1u << v)) reach |= adj[v];
      }
    }
    if (reach != (1u << n_) - 1) continue;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      if (mask_ & (std::uint32_t{1} << k)) edges.push_back(pairs_[k]);
    }
    return Graph(n_, std::move(edges));
  }
  return std::nullopt;
}

std::vector<Graph> enumerate_connected(int n_max) {
  ConnectedGraphEnumerator it(n_max);
  std::vector<Graph> out;
  while (auto g = it.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace critgroup
