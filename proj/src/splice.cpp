#include "orbsplice/splice.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <set>

namespace orbsplice {

namespace {

// Vertices of the component of g - {removed} that contains start.
std::vector<VertexId> component_without(const PlumbingGraph& g, const VertexId& removed, const VertexId& start) {
  std::set<VertexId> seen{removed, start};
  std::deque<VertexId> queue{start};
  std::vector<VertexId> out;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    out.push_back(v);
    for (const auto& n : g.neighbors(v))
      if (seen.insert(n).second) queue.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntMatrix induced_matrix(const PlumbingGraph& g, const std::vector<VertexId>& vs) {
  IntMatrix m(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    m(i, i) = static_cast<long>(g.euler(vs[i]));
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (i != j && g.has_edge(vs[i], vs[j])) m(i, j) = 1;
  }
  return m;
}

std::uint64_t to_u64(const Integer& x, const char* what) {
  if (x < 0 || !x.fits_ulong_p()) throw Error(ErrorCode::InvalidArgument, std::string(what) + " too large");
  return x.get_ui();
}

// Upper bound on DP table sizes.
constexpr std::uint64_t kMaxSemigroupTarget = 5'000'000;

}  // namespace

const SpliceEdge& SpliceDiagram::edge(const VertexId& node, const VertexId& toward) const {
  auto it = edges.find(node);
  if (it == edges.end()) throw Error(ErrorCode::InvalidArgument, "'" + node + "' is not a node");
  for (const auto& e : it->second)
    if (e.toward == toward) return e;
  throw Error(ErrorCode::UnknownEdge, "node '" + node + "' has no edge toward '" + toward + "'");
}

const SpliceEdge& SpliceDiagram::edge_containing(const VertexId& node, const VertexId& leaf) const {
  auto it = edges.find(node);
  if (it == edges.end()) throw Error(ErrorCode::InvalidArgument, "'" + node + "' is not a node");
  for (const auto& e : it->second)
    if (std::binary_search(e.beyond.begin(), e.beyond.end(), leaf)) return e;
  throw Error(ErrorCode::NotALeaf, "'" + leaf + "' is not a leaf beyond node '" + node + "'");
}

Integer SpliceDiagram::node_weight(const VertexId& node) const {
  auto it = edges.find(node);
  if (it == edges.end()) throw Error(ErrorCode::InvalidArgument, "'" + node + "' is not a node");
  Integer w = 1;
  for (const auto& e : it->second) w *= e.weight;
  return w;
}

bool SpliceDiagram::is_node(const VertexId& v) const { return edges.count(v) > 0; }

std::vector<VertexId> SpliceDiagram::diagram_neighbors(const VertexId& v) const {
  std::vector<VertexId> out;
  if (is_node(v)) {
    for (const auto& e : edges.at(v)) out.push_back(e.endpoint);
    return out;
  }
  for (const auto& [node, es] : edges)
    for (const auto& e : es)
      if (e.endpoint == v) out.push_back(node);
  return out;
}

SpliceDiagram splice_diagram(const PlumbingGraph& g) {
  require_negative_definite_tree(g);
  SpliceDiagram d;
  d.nodes = g.nodes();
  if (d.nodes.empty()) throw Error(ErrorCode::NoNodes, "graph has no vertex of valence >= 3");
  for (const auto& id : g.vertex_ids())
    if (g.valence(id) == 1) d.leaves.push_back(id);

  for (const auto& v : d.nodes) {
    std::vector<SpliceEdge> es;
    for (const auto& u : g.neighbors(v)) {
      SpliceEdge e;
      e.node = v;
      e.toward = u;
      VertexId prev = v, cur = u;
      while (g.valence(cur) == 2) {
        e.chain.push_back(cur);
        const auto& nb = g.neighbors(cur);
        VertexId next = *nb.begin() == prev ? *std::next(nb.begin()) : *nb.begin();
        prev = cur;
        cur = next;
      }
      e.endpoint = cur;
      const auto side = component_without(g, v, u);
      e.weight = abs(determinant(induced_matrix(g, side)));
      for (const auto& s : side)
        if (g.valence(s) == 1) e.beyond.push_back(s);
      es.push_back(std::move(e));
    }
    d.edges[v] = std::move(es);
  }
  return d;
}

Integer path_weight(const SpliceDiagram& d, const VertexId& v, const VertexId& w, bool include_v) {
  if (v == w) throw Error(ErrorCode::InvalidArgument, "path weight needs two distinct vertices");
  // Diagram path by BFS over nodes and leaves.
  std::map<VertexId, VertexId> parent{{v, v}};
  std::deque<VertexId> queue{v};
  while (!queue.empty() && !parent.count(w)) {
    VertexId x = queue.front();
    queue.pop_front();
    for (const auto& n : d.diagram_neighbors(x))
      if (!parent.count(n)) {
        parent[n] = x;
        queue.push_back(n);
      }
  }
  if (!parent.count(w)) throw Error(ErrorCode::InvalidArgument, "'" + w + "' is not in the splice diagram");
  std::vector<VertexId> path{w};
  while (path.back() != v) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());

  Integer product = 1;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const VertexId& x = path[i];
    if (!d.is_node(x) || (i == 0 && !include_v)) continue;
    for (const auto& e : d.edges.at(x)) {
      const bool on_path = (i > 0 && e.endpoint == path[i - 1]) || (i + 1 < path.size() && e.endpoint == path[i + 1]);
      if (!on_path) product *= e.weight;
    }
  }
  return product;
}

LeafWeights leaf_weights(const SpliceDiagram& d, const VertexId& node) {
  if (!d.is_node(node)) throw Error(ErrorCode::InvalidArgument, "'" + node + "' is not a node");
  LeafWeights lw;
  lw.node = node;
  lw.node_weight = d.node_weight(node);
  for (const auto& w : d.leaves) {
    lw.full[w] = path_weight(d, node, w, true);
    lw.outer[w] = path_weight(d, node, w, false);
  }
  return lw;
}

bool semigroup_contains(std::span<const std::uint64_t> gens, std::uint64_t target) {
  if (target == 0) return true;
  if (target > kMaxSemigroupTarget) throw Error(ErrorCode::InvalidArgument, "semigroup target too large");
  std::vector<char> reach(target + 1, 0);
  reach[0] = 1;
  for (std::uint64_t g : gens) {
    if (g == 0 || g > target) continue;
    for (std::uint64_t r = g; r <= target; ++r)
      if (reach[r - g]) reach[r] = 1;
  }
  return reach[target] != 0;
}

std::vector<EdgeSemigroupCheck> SemigroupReport::failures() const {
  std::vector<EdgeSemigroupCheck> out;
  for (const auto& e : edges)
    if (!e.pass) out.push_back(e);
  return out;
}

SemigroupReport semigroup_check(const SpliceDiagram& d) {
  SemigroupReport report;
  for (const auto& v : d.nodes) {
    for (const auto& e : d.edges.at(v)) {
      EdgeSemigroupCheck c;
      c.node = v;
      c.toward = e.toward;
      c.target = e.weight;
      std::vector<std::uint64_t> gens;
      for (const auto& w : e.beyond) {
        Integer l = path_weight(d, v, w, false);
        c.generators.emplace_back(w, l);
        gens.push_back(to_u64(l, "leaf weight"));
      }
      c.pass = semigroup_contains(gens, to_u64(e.weight, "edge weight"));
      report.pass = report.pass && c.pass;
      report.edges.push_back(std::move(c));
    }
  }
  return report;
}

std::vector<MonomialExponent> admissible_monomials(const SpliceDiagram& d, const VertexId& node, const VertexId& toward,
                                                   std::size_t cap, bool* truncated) {
  const SpliceEdge& e = d.edge(node, toward);
  const std::uint64_t target = to_u64(e.weight, "edge weight");
  if (target > kMaxSemigroupTarget) throw Error(ErrorCode::InvalidArgument, "edge weight too large to enumerate");
  std::vector<std::uint64_t> gens;
  for (const auto& w : e.beyond) gens.push_back(to_u64(path_weight(d, node, w, false), "leaf weight"));
  const std::size_t k = gens.size();

  // suffix[i][r]: r is reachable using generators i..k-1.
  std::vector<std::vector<char>> suffix(k + 1, std::vector<char>(target + 1, 0));
  suffix[k][0] = 1;
  for (std::size_t i = k; i-- > 0;)
    for (std::uint64_t r = 0; r <= target; ++r) {
      if (suffix[i + 1][r]) suffix[i][r] = 1;
      else if (gens[i] > 0 && r >= gens[i] && suffix[i][r - gens[i]]) suffix[i][r] = 1;
    }

  std::vector<MonomialExponent> out;
  if (truncated) *truncated = false;
  if (!suffix[0][target]) return out;
  std::vector<std::int64_t> a(k, 0);
  bool stop = false;
  std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t i, std::uint64_t rest) {
    if (stop) return;
    if (i == k) {
      if (rest != 0) return;
      if (out.size() == cap) {
        stop = true;
        if (truncated) *truncated = true;
        return;
      }
      MonomialExponent m;
      for (std::size_t j = 0; j < k; ++j)
        if (a[j] != 0) m[e.beyond[j]] = a[j];
      out.push_back(std::move(m));
      return;
    }
    const std::uint64_t top = gens[i] == 0 ? 0 : rest / gens[i];
    for (std::uint64_t x = 0; x <= top && !stop; ++x) {
      const std::uint64_t left = rest - x * gens[i];
      if (!suffix[i + 1][left]) continue;
      a[i] = static_cast<std::int64_t>(x);
      walk(i + 1, left);
    }
    a[i] = 0;
  };
  walk(0, target);
  return out;
}

CongruenceReport congruence_check(const PlumbingGraph& g, std::size_t cap) {
  const SpliceDiagram d = splice_diagram(g);
  const SemigroupReport semigroup = semigroup_check(d);
  const AbelianGroup group = discriminant_group(g);
  CongruenceReport report;
  for (const auto& v : d.nodes) {
    NodeCongruence nc;
    nc.node = v;
    for (const auto& c : semigroup.edges)
      if (c.node == v && !c.pass) nc.failing_edges.push_back(c.toward);
    if (!nc.failing_edges.empty()) {
      nc.applicable = false;
      report.pass = false;
      report.nodes.push_back(std::move(nc));
      continue;
    }
    // For each edge, the least monomial realizing each character.
    std::vector<std::map<Character, MonomialExponent>> per_edge;
    for (const auto& e : d.edges.at(v)) {
      bool cut = false;
      std::map<Character, MonomialExponent> by_char;
      for (auto& m : admissible_monomials(d, v, e.toward, cap, &cut)) {
        Character ch = monomial_character(m, g, group);
        by_char.emplace(std::move(ch), std::move(m));
      }
      nc.truncated = nc.truncated || cut;
      per_edge.push_back(std::move(by_char));
    }
    std::vector<Character> common;
    for (const auto& [ch, m] : per_edge.front()) {
      bool everywhere = std::all_of(per_edge.begin() + 1, per_edge.end(),
                                    [&](const auto& bc) { return bc.count(ch) > 0; });
      if (everywhere) common.push_back(ch);
    }
    if (!common.empty()) {
      auto trivial = std::find_if(common.begin(), common.end(), [](const Character& c) { return c.is_trivial(); });
      const Character chosen = trivial != common.end() ? *trivial : common.front();
      nc.pass = true;
      nc.character = chosen;
      const auto& es = d.edges.at(v);
      for (std::size_t i = 0; i < es.size(); ++i) nc.witness[es[i].toward] = per_edge[i].at(chosen);
    } else {
      report.pass = false;
    }
    report.nodes.push_back(std::move(nc));
  }
  return report;
}

}  // namespace orbsplice
