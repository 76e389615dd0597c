#include "trm/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace trm {

Graph::Graph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges,
             std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> bipartition)
    : labels_(std::move(vertices)), adjacency_(labels_.size()) {
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw GraphError("duplicate vertex '" + l + "'");
  }
  std::set<Edge> edge_set;
  for (const auto& [a, b] : edges) {
    std::size_t i = index_of(a);
    std::size_t j = index_of(b);
    if (i == j) throw GraphError("self-loop at '" + a + "'");
    Edge e = std::minmax(i, j);
    if (!edge_set.insert(e).second) throw GraphError("duplicate edge {" + a + ", " + b + "}");
    edges_.push_back(e);
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());

  if (bipartition) {
    Bipartition bp;
    std::vector<int> side(labels_.size(), -1);
    for (const auto& l : bipartition->first) {
      std::size_t v = index_of(l);
      if (side[v] != -1) throw GraphError("vertex '" + l + "' listed twice in bipartition");
      side[v] = 0;
      bp.x_side.push_back(v);
    }
    for (const auto& l : bipartition->second) {
      std::size_t v = index_of(l);
      if (side[v] != -1) throw GraphError("vertex '" + l + "' listed twice in bipartition");
      side[v] = 1;
      bp.y_side.push_back(v);
    }
    for (std::size_t v = 0; v < labels_.size(); ++v) {
      if (side[v] == -1) throw GraphError("vertex '" + labels_[v] + "' missing from bipartition");
    }
    for (const auto& [i, j] : edges_) {
      if (side[i] == side[j]) {
        throw GraphError("not bipartite: edge {" + labels_[i] + ", " + labels_[j] + "} within one side");
      }
    }
    std::sort(bp.x_side.begin(), bp.x_side.end());
    std::sort(bp.y_side.begin(), bp.y_side.end());
    bipartition_ = std::move(bp);
  } else {
    detect_bipartition();
  }
}

void Graph::detect_bipartition() {
  std::vector<int> color(labels_.size(), -1);
  for (std::size_t start = 0; start < labels_.size(); ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::queue<std::size_t> q;
    q.push(start);
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      for (std::size_t w : adjacency_[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return;
        }
      }
    }
  }
  Bipartition bp;
  for (std::size_t v = 0; v < labels_.size(); ++v) (color[v] == 0 ? bp.x_side : bp.y_side).push_back(v);
  bipartition_ = std::move(bp);
}

std::size_t Graph::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw GraphError("unknown vertex '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

bool Graph::adjacent(std::size_t a, std::size_t b) const {
  const auto& adj = adjacency_.at(a);
  return std::binary_search(adj.begin(), adj.end(), b);
}

bool Graph::on_x_side(std::size_t v) const {
  if (!bipartition_) throw PreconditionError("graph is not bipartite");
  const auto& xs = bipartition_->x_side;
  return std::binary_search(xs.begin(), xs.end(), v);
}

bool Graph::is_connected() const { return is_connected_without({}); }

bool Graph::is_connected_without(const std::vector<std::size_t>& removed) const {
  return components_without(*this, removed).size() <= 1;
}

Graph Graph::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw GraphError("graph file must be a JSON object");
  if (!j.contains("vertices") || !j.at("vertices").is_array()) throw GraphError("missing 'vertices' array");
  if (!j.contains("edges") || !j.at("edges").is_array()) throw GraphError("missing 'edges' array");
  std::vector<std::string> vertices;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string()) throw GraphError("vertex labels must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw GraphError("each edge must be a pair of vertex labels");
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> bp;
  if (j.contains("bipartition")) {
    const auto& b = j.at("bipartition");
    if (!b.is_array() || b.size() != 2 || !b[0].is_array() || !b[1].is_array()) {
      throw GraphError("'bipartition' must be a pair of label lists");
    }
    try {
      bp.emplace(b[0].get<std::vector<std::string>>(), b[1].get<std::vector<std::string>>());
    } catch (const nlohmann::json::exception&) {
      throw GraphError("bipartition labels must be strings");
    }
  }
  return Graph(std::move(vertices), edges, std::move(bp));
}

nlohmann::json Graph::to_json() const {
  nlohmann::json j;
  j["vertices"] = labels_;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : edges_) edges.push_back({labels_[a], labels_[b]});
  j["edges"] = edges;
  if (bipartition_) {
    std::vector<std::string> xs;
    std::vector<std::string> ys;
    for (std::size_t v : bipartition_->x_side) xs.push_back(labels_[v]);
    for (std::size_t v : bipartition_->y_side) ys.push_back(labels_[v]);
    j["bipartition"] = nlohmann::json::array({xs, ys});
  }
  return j;
}

Graph load_graph(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(std::string("graph parse error: ") + e.what());
  }
  return Graph::from_json(j);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str());
}

Graph ten_vertex_graph() {
  std::vector<std::string> xs = {"x1", "x2", "x3", "x4", "x5"};
  std::vector<std::string> ys = {"y1", "y2", "y3", "y4", "y5"};
  std::vector<std::string> vertices = xs;
  vertices.insert(vertices.end(), ys.begin(), ys.end());
  std::vector<std::pair<std::string, std::string>> edges = {
      {"x1", "y1"}, {"x1", "y2"}, {"x2", "y1"}, {"x2", "y2"},
      {"x3", "y3"}, {"x3", "y4"}, {"x4", "y3"}, {"x4", "y4"},
  };
  for (int i = 1; i <= 4; ++i) edges.emplace_back("x" + std::to_string(i), "y5");
  for (int j = 1; j <= 4; ++j) edges.emplace_back("x5", "y" + std::to_string(j));
  return Graph(vertices, edges, std::make_pair(xs, ys));
}

std::vector<std::vector<std::size_t>> components_without(const Graph& g, const std::vector<std::size_t>& removed) {
  std::vector<bool> gone(g.vertex_count(), false);
  for (std::size_t v : removed) gone.at(v) = true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (gone[s] || seen[s]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (std::size_t w : g.neighbors(v)) {
        if (!gone[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool has_triangle(const Graph& g) {
  for (const auto& [a, b] : g.edges()) {
    for (std::size_t c : g.neighbors(a)) {
      if (c != b && g.adjacent(b, c)) return true;
    }
  }
  return false;
}

bool has_cycle(const Graph& g) {
  // Union-find: an edge inside an existing component closes a cycle.
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [a, b] : g.edges()) {
    std::size_t ra = find(a);
    std::size_t rb = find(b);
    if (ra == rb) return true;
    parent[ra] = rb;
  }
  return false;
}

bool is_valid_build_order(const Graph& g, const std::vector<std::size_t>& order) {
  if (order.size() != g.vertex_count()) return false;
  std::vector<bool> placed(g.vertex_count(), false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t v = order[i];
    if (v >= g.vertex_count() || placed[v]) return false;
    if (i >= 2) {
      std::size_t back = 0;
      for (std::size_t w : g.neighbors(v)) back += placed[w] ? 1 : 0;
      if (back < 2) return false;
    }
    placed[v] = true;
  }
  return true;
}

namespace {

std::vector<std::size_t> label_sorted(const Graph& g) {
  std::vector<std::size_t> idx(g.vertex_count());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return g.label(a) < g.label(b); });
  return idx;
}

}  // namespace

std::optional<std::vector<std::size_t>> build_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 2) {
    std::vector<std::size_t> order = label_sorted(g);
    return order;
  }
  // Once a start pair is fixed, adding an eligible vertex never makes another
  // vertex ineligible, so the greedy closure decides each start exactly.
  const auto by_label = label_sorted(g);
  for (std::size_t ia = 0; ia < n; ++ia) {
    for (std::size_t ib = ia + 1; ib < n; ++ib) {
      std::vector<std::size_t> order{by_label[ia], by_label[ib]};
      std::vector<bool> placed(n, false);
      placed[by_label[ia]] = placed[by_label[ib]] = true;
      std::vector<std::size_t> back(n, 0);
      for (std::size_t s : order) {
        for (std::size_t w : g.neighbors(s)) ++back[w];
      }
      bool progress = true;
      while (order.size() < n && progress) {
        progress = false;
        for (std::size_t v : by_label) {
          if (placed[v] || back[v] < 2) continue;
          placed[v] = true;
          order.push_back(v);
          for (std::size_t w : g.neighbors(v)) ++back[w];
          progress = true;
          break;
        }
      }
      if (order.size() == n) return order;
    }
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> disconnecting_pair(const Graph& g) {
  if (!g.is_bipartite()) throw PreconditionError("disconnecting_pair requires a bipartite graph");
  auto xs = g.bipartition()->x_side;
  auto ys = g.bipartition()->y_side;
  auto by_label = [&](std::size_t a, std::size_t b) { return g.label(a) < g.label(b); };
  std::sort(xs.begin(), xs.end(), by_label);
  std::sort(ys.begin(), ys.end(), by_label);
  for (std::size_t x : xs) {
    for (std::size_t y : ys) {
      if (!g.is_connected_without({x, y})) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

ConditionReport necessary_conditions(const Graph& g) {
  ConditionReport r;
  r.connected = g.is_connected();
  if (!r.connected) throw PreconditionError("necessary_conditions requires a connected graph");
  const std::size_t n = g.vertex_count();
  const std::size_t e = g.edge_count();
  r.bipartite = g.is_bipartite();
  r.edge_count_ok = 2 * n >= 4 && e == 2 * n - 4;
  r.triangle_free = !has_triangle(g);
  r.leaf_free = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) == 1) r.leaf_free = false;
  }
  r.tree = e + 1 == n;
  r.build_order = build_order(g);
  if (r.bipartite) r.disconnecting_pair = disconnecting_pair(g);
  return r;
}

}  // namespace trm
