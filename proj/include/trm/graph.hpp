#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace trm {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A call made outside the operation's stated domain (e.g. a disconnected
/// graph handed to a check that needs connectivity).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Simple undirected graph with labelled vertices and an optional
/// bipartition. Vertex indices follow declaration order.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;  // first < second

  struct Bipartition {
    std::vector<std::size_t> x_side;
    std::vector<std::size_t> y_side;
  };

  Graph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges,
        std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> bipartition = std::nullopt);

  static Graph from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  std::size_t index_of(const std::string& label) const;
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  bool adjacent(std::size_t a, std::size_t b) const;
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }

  const std::optional<Bipartition>& bipartition() const { return bipartition_; }
  bool is_bipartite() const { return bipartition_.has_value(); }
  /// True for vertices on the X side of the bipartition.
  bool on_x_side(std::size_t v) const;

  bool is_connected() const;
  /// Connectivity of the subgraph induced on all vertices except `removed`.
  bool is_connected_without(const std::vector<std::size_t>& removed) const;

 private:
  void detect_bipartition();

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::optional<Bipartition> bipartition_;
};

Graph load_graph(const std::string& text);
Graph load_graph_file(const std::string& path);

/// The ten-vertex bipartite graph: two copies of K_{2,2} on {x1,x2,y1,y2} and
/// {x3,x4,y3,y4}, with x5 joined to y1..y4 and y5 joined to x1..x4.
Graph ten_vertex_graph();

struct ConditionReport {
  bool connected = false;
  bool bipartite = false;
  bool edge_count_ok = false;  // e == 2n - 4
  bool triangle_free = false;
  bool leaf_free = false;
  bool tree = false;           // e == n - 1
  std::optional<std::vector<std::size_t>> build_order;
  std::optional<std::pair<std::size_t, std::size_t>> disconnecting_pair;
};

/// Combinatorial necessary conditions. Throws PreconditionError when g is
/// disconnected.
ConditionReport necessary_conditions(const Graph& g);

/// An ordering v1..vn where every vi with i >= 3 has at least two neighbours
/// among v1..v(i-1), or nullopt when none exists.
std::optional<std::vector<std::size_t>> build_order(const Graph& g);
bool is_valid_build_order(const Graph& g, const std::vector<std::size_t>& order);

/// First cross pair (x, y), in label order, whose removal disconnects the
/// induced subgraph. Throws PreconditionError when g is not bipartite.
std::optional<std::pair<std::size_t, std::size_t>> disconnecting_pair(const Graph& g);

/// Connected components of the graph with `removed` deleted, each sorted by
/// index, ordered by smallest member.
std::vector<std::vector<std::size_t>> components_without(const Graph& g, const std::vector<std::size_t>& removed);

bool has_triangle(const Graph& g);
bool has_cycle(const Graph& g);

}  // namespace trm
