#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbsplice/exactlin.hpp"
#include "orbsplice/graphs.hpp"
#include "orbsplice/reps.hpp"

namespace orbsplice {

/// One emanating edge of a node. The edge is named by the neighbor of the node
/// in the plumbing graph ("toward"); valence-two vertices along it are collapsed.
struct SpliceEdge {
  VertexId node;
  VertexId toward;
  VertexId endpoint;             // node or leaf at the far end
  std::vector<VertexId> chain;   // collapsed valence-two vertices, from node outwards
  Integer weight;                // |det| of the subgraph cut off in this direction
  std::vector<VertexId> beyond;  // leaves of the graph on the far side, canonical order
};

struct SpliceDiagram {
  std::vector<VertexId> nodes;   // canonical order
  std::vector<VertexId> leaves;  // canonical order
  std::map<VertexId, std::vector<SpliceEdge>> edges;  // per node, sorted by toward

  const SpliceEdge& edge(const VertexId& node, const VertexId& toward) const;
  /// Edge at node whose far side contains leaf.
  const SpliceEdge& edge_containing(const VertexId& node, const VertexId& leaf) const;
  /// d_v: product of the edge weights at the node.
  Integer node_weight(const VertexId& node) const;
  bool is_node(const VertexId& v) const;
  /// Diagram vertices (nodes and leaves) adjacent to v.
  std::vector<VertexId> diagram_neighbors(const VertexId& v) const;
};

/// Throws NoNodes when the graph has no vertex of valence >= 3.
SpliceDiagram splice_diagram(const PlumbingGraph& g);

/// Product, over the diagram vertices on the path from v to w, of the weights
/// on edges leaving the path. The weights at v count only when include_v.
Integer path_weight(const SpliceDiagram& d, const VertexId& v, const VertexId& w, bool include_v);

struct LeafWeights {
  VertexId node;
  Integer node_weight;
  std::map<VertexId, Integer> full;    // l_vw
  std::map<VertexId, Integer> outer;   // l'_vw
};

LeafWeights leaf_weights(const SpliceDiagram& d, const VertexId& node);

/// Membership of target in the numerical semigroup generated by gens (DP).
bool semigroup_contains(std::span<const std::uint64_t> gens, std::uint64_t target);

struct EdgeSemigroupCheck {
  VertexId node;
  VertexId toward;
  Integer target;                                   // d_ve
  std::vector<std::pair<VertexId, Integer>> generators;  // (leaf, l'_vw) beyond the edge
  bool pass = false;
};

struct SemigroupReport {
  bool pass = true;
  std::vector<EdgeSemigroupCheck> edges;

  std::vector<EdgeSemigroupCheck> failures() const;
};

SemigroupReport semigroup_check(const SpliceDiagram& d);

/// Nonnegative solutions of sum_w a_w l'_vw = d_ve over the leaves beyond the
/// edge, in ascending lexicographic order of (a_w) over canonical leaf order.
std::vector<MonomialExponent> admissible_monomials(const SpliceDiagram& d, const VertexId& node,
                                                   const VertexId& toward, std::size_t cap,
                                                   bool* truncated = nullptr);

inline constexpr std::size_t kDefaultMonomialCap = 10000;

struct NodeCongruence {
  VertexId node;
  bool applicable = true;  // false when some edge fails the semigroup condition
  bool pass = false;
  bool truncated = false;  // enumeration hit the cap on some edge
  std::optional<Character> character;
  std::map<VertexId, MonomialExponent> witness;  // toward -> monomial
  std::vector<VertexId> failing_edges;           // semigroup failures (when not applicable)
};

struct CongruenceReport {
  bool pass = true;
  std::vector<NodeCongruence> nodes;
};

CongruenceReport congruence_check(const PlumbingGraph& g, std::size_t cap = kDefaultMonomialCap);

struct Term {
  Rational coefficient;
  MonomialExponent exponents;  // leaf id -> exponent (zero exponents omitted)

  friend bool operator==(const Term&, const Term&) = default;
};

struct SpliceEquation {
  VertexId node;  // empty for equations read from text
  std::vector<Term> terms;

  friend bool operator==(const SpliceEquation&, const SpliceEquation&) = default;
};

struct SpliceEquationSet {
  std::vector<VertexId> leaf_order;
  std::vector<SpliceEquation> equations;
  bool power_substituted = false;
  std::vector<std::int64_t> substitution_exponents;  // per leaf; all 1 before substitution

  char variable_prefix() const { return power_substituted ? 'z' : 'x'; }
  friend bool operator==(const SpliceEquationSet&, const SpliceEquationSet&) = default;
};

/// node -> (toward -> monomial)
using SpliceWitness = std::map<VertexId, std::map<VertexId, MonomialExponent>>;

/// Per node of valence k, k - 2 equations M_{e_i} + i M_{e_{k-1}} + i^2 M_{e_k},
/// edges in canonical order. Throws ConditionsFail when the semigroup or
/// congruence condition fails (or a supplied witness is inconsistent).
SpliceEquationSet generate_equations(const PlumbingGraph& g, const std::optional<SpliceWitness>& witness = {},
                                     std::size_t cap = kDefaultMonomialCap);

/// x_w -> z_w^{n_w}. Weights must sit on leaves of the graph the equations came from.
SpliceEquationSet substitute_powers(const SpliceEquationSet& eqs, const DecoratedGraph& g);

struct EquivarianceFailure {
  std::size_t equation = 0;
  std::size_t generator = 0;
  std::vector<Rational> term_values;  // value of each term's character on the generator
};

struct EquivarianceReport {
  bool pass = true;
  std::vector<EquivarianceFailure> failures;
};

/// Every equation must transform by a single character of rep.group.
EquivarianceReport verify_equivariance(const SpliceEquationSet& eqs, const DiagonalRepresentation& rep);

/// One equation per line: "c*x_i^a*x_j^b + ... = 0", variables indexed 1..t in
/// leaf order, terms sorted by (variable, exponent) sequence.
std::string format_equations(const SpliceEquationSet& eqs);
std::string format_equation(const SpliceEquationSet& eqs, const SpliceEquation& eq);

/// Reads the text form back (also accepts "-x_1", bare "x_2^2" and missing
/// "= 0"). Variable indices refer to leaf_order.
SpliceEquationSet parse_equations(std::string_view text, std::vector<VertexId> leaf_order);

}  // namespace orbsplice
