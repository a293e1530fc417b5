#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbsplice/exactlin.hpp"

namespace orbsplice {

using VertexId = std::string;
using Edge = std::pair<VertexId, VertexId>;  // first < second

/// Weighted plumbing graph: vertices carry the self-intersection E_i.E_i.
/// Vertex order is lexicographic by id everywhere (matrices, generators, output).
class PlumbingGraph {
 public:
  void add_vertex(const VertexId& id, std::int64_t euler);
  void add_edge(const VertexId& a, const VertexId& b);
  void remove_edge(const VertexId& a, const VertexId& b);
  void remove_vertex(const VertexId& id);
  void set_euler(const VertexId& id, std::int64_t euler);

  bool has_vertex(const VertexId& id) const { return euler_.count(id) > 0; }
  bool has_edge(const VertexId& a, const VertexId& b) const;
  std::int64_t euler(const VertexId& id) const;

  std::size_t vertex_count() const { return euler_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::vector<VertexId> vertex_ids() const;
  const std::set<Edge>& edges() const { return edges_; }
  const std::set<VertexId>& neighbors(const VertexId& id) const;
  std::size_t valence(const VertexId& id) const { return neighbors(id).size(); }
  std::size_t index_of(const VertexId& id) const;

  bool is_connected() const;
  bool is_tree() const { return is_connected() && edges_.size() + 1 == euler_.size(); }
  /// Vertices of valence <= 1 (a one-vertex graph has one leaf).
  bool is_leaf(const VertexId& id) const { return valence(id) <= 1; }
  std::vector<VertexId> leaves() const;
  /// Vertices of valence >= 3.
  std::vector<VertexId> nodes() const;

  friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;

 private:
  std::map<VertexId, std::int64_t> euler_;
  std::map<VertexId, std::set<VertexId>> adjacency_;
  std::set<Edge> edges_;
};

/// A plumbing graph plus orbifold weights n_i >= 1. Only weights > 1 are stored.
class DecoratedGraph {
 public:
  DecoratedGraph() = default;
  explicit DecoratedGraph(PlumbingGraph graph) : graph_(std::move(graph)) {}

  const PlumbingGraph& graph() const { return graph_; }
  PlumbingGraph& graph() { return graph_; }

  std::int64_t weight(const VertexId& id) const;
  void set_weight(const VertexId& id, std::int64_t n);
  const std::map<VertexId, std::int64_t>& weights() const { return weights_; }
  /// Weights in canonical vertex order, absent entries as 1.
  std::vector<std::int64_t> weight_vector() const;

  /// Weighted vertices that are not leaves.
  std::vector<VertexId> decorated_interior() const;
  /// Throws DecoratedInterior when some non-leaf carries a weight > 1.
  void require_leaf_decorations() const;

  friend bool operator==(const DecoratedGraph&, const DecoratedGraph&) = default;

 private:
  PlumbingGraph graph_;
  std::map<VertexId, std::int64_t> weights_;
};

bool is_valid_vertex_id(std::string_view id);

/// Parses the line-oriented graph format:
///   vertex <id> <euler>
///   edge <id> <id>
///   weight <id> <n>
/// '#' starts a comment. Edges and weights may refer to vertices declared later.
DecoratedGraph parse_graph(std::string_view text);
DecoratedGraph load_graph(const std::string& path);
std::string serialize_graph(const DecoratedGraph& g);

/// Symmetric matrix with M_ii = euler(i) and M_ij = 1 on edges, canonical order.
IntMatrix intersection_matrix(const PlumbingGraph& g);

struct ValidationReport {
  bool is_tree = false;
  bool is_negative_definite = false;
  bool is_quasi_minimal = false;
  Integer determinant;
  std::vector<std::string> violations;
};

ValidationReport validate(const DecoratedGraph& g);
bool is_negative_definite(const PlumbingGraph& g);
/// Throws NotATree or NotNegativeDefinite.
void require_negative_definite_tree(const PlumbingGraph& g);

/// Maximal connected sets of vertices of valence <= 2, each in canonical order.
std::vector<std::vector<VertexId>> maximal_strings(const PlumbingGraph& g);

/// "<base>_b<k>" with the smallest k >= 1 not already used.
VertexId fresh_vertex_id(const PlumbingGraph& g, const VertexId& base);

/// New -1 leaf attached to v; euler(v) drops by one.
DecoratedGraph blow_up_free(const DecoratedGraph& g, const VertexId& v);
/// Replaces edge v-w by a -1 vertex adjacent to both; both eulers drop by one.
DecoratedGraph blow_up_edge(const DecoratedGraph& g, const VertexId& v, const VertexId& w);
/// Contracts an undecorated -1 vertex of valence <= 2.
DecoratedGraph blow_down(const DecoratedGraph& g, const VertexId& u);

}  // namespace orbsplice
