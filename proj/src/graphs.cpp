#include "orbsplice/graphs.hpp"

#include <algorithm>
#include <deque>

namespace orbsplice {

namespace {

Edge make_edge(const VertexId& a, const VertexId& b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

void PlumbingGraph::add_vertex(const VertexId& id, std::int64_t euler) {
  if (!is_valid_vertex_id(id)) throw Error(ErrorCode::InvalidArgument, "invalid vertex id '" + id + "'");
  if (has_vertex(id)) throw Error(ErrorCode::DuplicateVertex, "duplicate vertex '" + id + "'");
  euler_[id] = euler;
  adjacency_[id];
}

void PlumbingGraph::add_edge(const VertexId& a, const VertexId& b) {
  if (!has_vertex(a)) throw Error(ErrorCode::UnknownVertexInEdge, "edge refers to unknown vertex '" + a + "'");
  if (!has_vertex(b)) throw Error(ErrorCode::UnknownVertexInEdge, "edge refers to unknown vertex '" + b + "'");
  if (a == b) throw Error(ErrorCode::InvalidArgument, "self-loop at '" + a + "'");
  if (!edges_.insert(make_edge(a, b)).second)
    throw Error(ErrorCode::InvalidArgument, "duplicate edge " + a + " " + b);
  adjacency_[a].insert(b);
  adjacency_[b].insert(a);
}

void PlumbingGraph::remove_edge(const VertexId& a, const VertexId& b) {
  if (edges_.erase(make_edge(a, b)) == 0)
    throw Error(ErrorCode::UnknownEdge, "no edge between '" + a + "' and '" + b + "'");
  adjacency_[a].erase(b);
  adjacency_[b].erase(a);
}

void PlumbingGraph::remove_vertex(const VertexId& id) {
  for (const auto& n : neighbors(id)) {
    edges_.erase(make_edge(id, n));
    adjacency_[n].erase(id);
  }
  adjacency_.erase(id);
  euler_.erase(id);
}

void PlumbingGraph::set_euler(const VertexId& id, std::int64_t euler) {
  auto it = euler_.find(id);
  if (it == euler_.end()) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + id + "'");
  it->second = euler;
}

bool PlumbingGraph::has_edge(const VertexId& a, const VertexId& b) const {
  return edges_.count(make_edge(a, b)) > 0;
}

std::int64_t PlumbingGraph::euler(const VertexId& id) const {
  auto it = euler_.find(id);
  if (it == euler_.end()) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + id + "'");
  return it->second;
}

std::vector<VertexId> PlumbingGraph::vertex_ids() const {
  std::vector<VertexId> ids;
  ids.reserve(euler_.size());
  for (const auto& [id, e] : euler_) ids.push_back(id);
  return ids;
}

const std::set<VertexId>& PlumbingGraph::neighbors(const VertexId& id) const {
  auto it = adjacency_.find(id);
  if (it == adjacency_.end()) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + id + "'");
  return it->second;
}

std::size_t PlumbingGraph::index_of(const VertexId& id) const {
  auto it = euler_.find(id);
  if (it == euler_.end()) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + id + "'");
  return static_cast<std::size_t>(std::distance(euler_.begin(), it));
}

bool PlumbingGraph::is_connected() const {
  if (euler_.empty()) return false;
  std::set<VertexId> seen{euler_.begin()->first};
  std::deque<VertexId> queue{euler_.begin()->first};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto& n : adjacency_.at(v))
      if (seen.insert(n).second) queue.push_back(n);
  }
  return seen.size() == euler_.size();
}

std::vector<VertexId> PlumbingGraph::leaves() const {
  std::vector<VertexId> out;
  for (const auto& [id, nbrs] : adjacency_)
    if (nbrs.size() <= 1) out.push_back(id);
  return out;
}

std::vector<VertexId> PlumbingGraph::nodes() const {
  std::vector<VertexId> out;
  for (const auto& [id, nbrs] : adjacency_)
    if (nbrs.size() >= 3) out.push_back(id);
  return out;
}

std::int64_t DecoratedGraph::weight(const VertexId& id) const {
  if (!graph_.has_vertex(id)) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + id + "'");
  auto it = weights_.find(id);
  return it == weights_.end() ? 1 : it->second;
}

void DecoratedGraph::set_weight(const VertexId& id, std::int64_t n) {
  if (!graph_.has_vertex(id)) throw Error(ErrorCode::UnknownVertex, "weight on unknown vertex '" + id + "'");
  if (n < 1) throw Error(ErrorCode::NonPositiveWeight, "orbifold weight must be >= 1 at '" + id + "'");
  if (n == 1)
    weights_.erase(id);
  else
    weights_[id] = n;
}

std::vector<std::int64_t> DecoratedGraph::weight_vector() const {
  std::vector<std::int64_t> w;
  for (const auto& id : graph_.vertex_ids()) w.push_back(weight(id));
  return w;
}

std::vector<VertexId> DecoratedGraph::decorated_interior() const {
  std::vector<VertexId> out;
  for (const auto& [id, n] : weights_)
    if (!graph_.is_leaf(id)) out.push_back(id);
  return out;
}

void DecoratedGraph::require_leaf_decorations() const {
  auto bad = decorated_interior();
  if (!bad.empty())
    throw Error(ErrorCode::DecoratedInterior, "orbifold weight on interior vertex '" + bad.front() + "'");
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
  const auto ids = g.vertex_ids();
  IntMatrix m(ids.size(), ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) m(i, i) = static_cast<long>(g.euler(ids[i]));
  for (const auto& [a, b] : g.edges()) {
    const std::size_t i = g.index_of(a);
    const std::size_t j = g.index_of(b);
    m(i, j) = 1;
    m(j, i) = 1;
  }
  return m;
}

bool is_negative_definite(const PlumbingGraph& g) {
  if (g.vertex_count() == 0) return false;
  IntMatrix neg = intersection_matrix(g);
  for (std::size_t i = 0; i < neg.rows(); ++i)
    for (std::size_t j = 0; j < neg.cols(); ++j) neg(i, j) = -neg(i, j);
  auto minors = leading_principal_minors(neg);
  if (minors.size() < neg.rows()) return false;
  return std::all_of(minors.begin(), minors.end(), [](const Integer& x) { return x > 0; });
}

void require_negative_definite_tree(const PlumbingGraph& g) {
  if (!g.is_tree()) throw Error(ErrorCode::NotATree, "graph is not a tree");
  if (!is_negative_definite(g)) throw Error(ErrorCode::NotNegativeDefinite, "intersection matrix is not negative definite");
}

std::vector<std::vector<VertexId>> maximal_strings(const PlumbingGraph& g) {
  std::vector<std::vector<VertexId>> strings;
  std::set<VertexId> seen;
  for (const auto& id : g.vertex_ids()) {
    if (g.valence(id) >= 3 || seen.count(id)) continue;
    std::vector<VertexId> component;
    std::deque<VertexId> queue{id};
    seen.insert(id);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      component.push_back(v);
      for (const auto& n : g.neighbors(v))
        if (g.valence(n) < 3 && seen.insert(n).second) queue.push_back(n);
    }
    std::sort(component.begin(), component.end());
    strings.push_back(std::move(component));
  }
  return strings;
}

ValidationReport validate(const DecoratedGraph& dg) {
  const PlumbingGraph& g = dg.graph();
  ValidationReport r;
  if (g.vertex_count() == 0) {
    r.violations.push_back("graph has no vertices");
    r.determinant = 1;
    return r;
  }
  r.is_tree = g.is_tree();
  if (!g.is_connected()) r.violations.push_back("graph is not connected");
  if (g.edge_count() + 1 > g.vertex_count()) r.violations.push_back("graph contains a cycle");

  IntMatrix m = intersection_matrix(g);
  r.determinant = determinant(m);
  IntMatrix neg = m;
  for (std::size_t i = 0; i < neg.rows(); ++i)
    for (std::size_t j = 0; j < neg.cols(); ++j) neg(i, j) = -neg(i, j);
  auto minors = leading_principal_minors(neg);
  const auto ids = g.vertex_ids();
  r.is_negative_definite = true;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k < minors.size() && minors[k] > 0) continue;
    r.is_negative_definite = false;
    const std::string value = k < minors.size() ? minors[k].get_str() : "undefined";
    r.violations.push_back("not negative definite: leading principal minor of -M through vertex '" + ids[k] +
                           "' is " + value);
    break;
  }

  r.is_quasi_minimal = true;
  for (const auto& s : maximal_strings(g)) {
    if (s.size() == 1) continue;
    for (const auto& v : s)
      if (g.euler(v) == -1) {
        r.is_quasi_minimal = false;
        std::string members;
        for (const auto& w : s) members += (members.empty() ? "" : ",") + w;
        r.violations.push_back("not quasi-minimal: string {" + members + "} contains the -1 vertex '" + v + "'");
        break;
      }
  }

  for (const auto& v : dg.decorated_interior())
    r.violations.push_back("orbifold weight on interior vertex '" + v + "'");
  return r;
}

VertexId fresh_vertex_id(const PlumbingGraph& g, const VertexId& base) {
  for (std::size_t k = 1;; ++k) {
    VertexId id = base + "_b" + std::to_string(k);
    if (!g.has_vertex(id)) return id;
  }
}

DecoratedGraph blow_up_free(const DecoratedGraph& g, const VertexId& v) {
  if (!g.graph().has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + v + "'");
  DecoratedGraph out = g;
  PlumbingGraph& pg = out.graph();
  const VertexId u = fresh_vertex_id(pg, v);
  pg.add_vertex(u, -1);
  pg.add_edge(u, v);
  pg.set_euler(v, pg.euler(v) - 1);
  return out;
}

DecoratedGraph blow_up_edge(const DecoratedGraph& g, const VertexId& v, const VertexId& w) {
  if (!g.graph().has_vertex(v) || !g.graph().has_vertex(w) || !g.graph().has_edge(v, w))
    throw Error(ErrorCode::UnknownEdge, "no edge between '" + v + "' and '" + w + "'");
  DecoratedGraph out = g;
  PlumbingGraph& pg = out.graph();
  const VertexId u = fresh_vertex_id(pg, v);
  pg.remove_edge(v, w);
  pg.add_vertex(u, -1);
  pg.add_edge(u, v);
  pg.add_edge(u, w);
  pg.set_euler(v, pg.euler(v) - 1);
  pg.set_euler(w, pg.euler(w) - 1);
  return out;
}

DecoratedGraph blow_down(const DecoratedGraph& g, const VertexId& u) {
  const PlumbingGraph& pg = g.graph();
  if (!pg.has_vertex(u)) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + u + "'");
  if (pg.euler(u) != -1) throw Error(ErrorCode::NotBlowDownable, "vertex '" + u + "' does not have euler number -1");
  if (pg.valence(u) > 2) throw Error(ErrorCode::NotBlowDownable, "vertex '" + u + "' has valence > 2");
  if (pg.valence(u) == 0) throw Error(ErrorCode::NotBlowDownable, "cannot blow down the only vertex '" + u + "'");
  if (g.weight(u) != 1) throw Error(ErrorCode::NotBlowDownable, "vertex '" + u + "' carries an orbifold weight");
  const std::vector<VertexId> nbrs(pg.neighbors(u).begin(), pg.neighbors(u).end());
  DecoratedGraph out = g;
  PlumbingGraph& og = out.graph();
  og.remove_vertex(u);
  for (const auto& n : nbrs) og.set_euler(n, og.euler(n) + 1);
  if (nbrs.size() == 2) og.add_edge(nbrs[0], nbrs[1]);
  return out;
}

}  // namespace orbsplice
