// Acceptance run: one PASS/FAIL line per criterion; nonzero exit if any fails.
#include <fstream>
#include <iostream>
#include <sstream>

#include "orbsplice/splice.hpp"
#include "properties.hpp"

using namespace orbsplice;

namespace {

// Collects the first failed expectation of a criterion.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

std::map<VertexId, Integer> node_weights(const SpliceDiagram& d, const VertexId& v) {
  std::map<VertexId, Integer> out;
  for (const auto& e : d.edges.at(v)) out[e.toward] = e.weight;
  return out;
}

std::multiset<Integer> weight_set(const SpliceDiagram& d, const VertexId& v) {
  std::multiset<Integer> out;
  for (const auto& e : d.edges.at(v)) out.insert(e.weight);
  return out;
}

GroupElement vertex_class(const AbelianGroup& grp, const PlumbingGraph& g, const VertexId& v, long k) {
  std::vector<Integer> combo(g.vertex_count(), 0);
  combo[g.index_of(v)] = k;
  return grp.class_of(combo);
}

AbelianGroup diagonal_group(std::initializer_list<long> orders) {
  IntMatrix m(orders.size(), orders.size());
  std::size_t i = 0;
  for (long n : orders) {
    m(i, i) = n;
    ++i;
  }
  return cokernel(m);
}

void d4_example(Criterion& c) {
  const DecoratedGraph g = support::fixture("d4_decorated.graph");
  const PlumbingGraph& pg = g.graph();
  c.expect(discriminant_group(pg).invariant_factors() == ints({2, 2}), "D = [2,2]");
  const AbelianGroup orb = orbifold_homology(g);
  c.expect(orb.invariant_factors() == ints({2, 4, 4}), "D* = [2,4,4]");
  c.expect(orb.order() == Integer(32), "|D*| = 32");
  const GroupHom phi = projection_hom(g);
  c.expect(kernel_type(phi).invariant_factors() == ints({2, 2, 2}), "ker = [2,2,2]");
  const auto gens = kernel_generators(phi);
  const std::vector<GroupElement> named{vertex_class(orb, pg, "e1", 2), vertex_class(orb, pg, "e2", 2),
                                        vertex_class(orb, pg, "f", 1)};
  for (const auto& x : named) c.expect(phi.apply(x).is_zero() && orb.contains(gens, x), "2e1, 2e2, f lie in the kernel");
  c.expect(orb.subgroup(named).invariant_factors() == ints({2, 2, 2}), "2e1, 2e2, f span the kernel");
}

void unimodular_example(Criterion& c) {
  const DecoratedGraph g = support::fixture("unimodular4.graph");
  c.expect(discriminant_group(g.graph()).is_trivial(), "D trivial");
  c.expect(orbifold_homology(g).invariant_factors() == ints({210}), "(2,3,5,7) gives [210]");
  c.expect(orbifold_homology(g).isomorphic_to(diagonal_group({2, 3, 5, 7})), "(2,3,5,7) gives Z/2+Z/3+Z/5+Z/7");
  c.expect(orbifold_homology(support::fixture("unimodular4_2222.graph")).invariant_factors() == ints({2, 2, 2, 2}),
           "(2,2,2,2) gives [2,2,2,2]");
}

void rank_seven_example(Criterion& c) {
  const DecoratedGraph g = support::fixture("rank7.graph");
  const PlumbingGraph& pg = g.graph();
  c.expect(discriminant_group(pg).invariant_factors() == ints({2, 2}), "D = [2,2]");
  const DiagonalRepresentation rep = diagonal_rep(pg);
  const Rational half(1, 2);
  for (const auto& x : rep.group.elements()) {
    const QmodZVector im = rep.image_of(x);
    c.expect(im[3] == 0 && im[4] == 0, "representation trivial on x4, x5");
    for (std::size_t i = 0; i < 3; ++i) c.expect(im[i] == 0 || im[i] == half, "sign changes on x1, x2, x3");
  }
  c.expect(orbifold_homology(g).invariant_factors() == ints({2, 30}), "(p,q) = (3,5) gives [2,30]");
  c.expect(orbifold_homology(g).isomorphic_to(diagonal_group({2, 6, 5})), "orders 2, 2p, q");
  c.expect(orbifold_homology(support::fixture("rank7_plain.graph")).invariant_factors() == ints({2, 2}),
           "(p,q) = (1,1) gives [2,2]");

  std::ifstream in(support::fixture_path("rank7.eqs"));
  std::ostringstream text;
  text << in.rdbuf();
  const SpliceEquationSet eqs = parse_equations(text.str(), pg.leaves());
  c.expect(eqs.equations.size() == 3, "three equations");
  c.expect(verify_equivariance(eqs, rep).pass, "the stated equations are equivariant");
}

void e237_example(Criterion& c) {
  const SpliceDiagram minimal = splice_diagram(support::fixture("e237.graph").graph());
  c.expect(minimal.nodes.size() == 1, "one node");
  c.expect(weight_set(minimal, minimal.nodes.front()) == std::multiset<Integer>{2, 3, 7}, "weights {2,3,7}");
  c.expect(semigroup_check(minimal).pass, "minimal graph satisfies the semigroup condition");

  const SpliceDiagram blown = splice_diagram(support::fixture("e237_blown.graph").graph());
  c.expect(blown.nodes == std::vector<VertexId>{"c", "n"}, "two nodes");
  c.expect(weight_set(blown, "n") == std::multiset<Integer>{2, 3, 7}, "first node weights (2,3,7)");
  c.expect(weight_set(blown, "c") == std::multiset<Integer>{1, 1, 1}, "second node weights (1,1,1)");
  c.expect(node_weights(blown, "n").at("c") == 7, "weight 7 toward the second node");
  const SemigroupReport r = semigroup_check(blown);
  const auto failures = r.failures();
  c.expect(!r.pass && failures.size() == 1, "exactly one failing edge");
  c.expect(!failures.empty() && failures[0].node == "c" && failures[0].toward == "n",
           "failure at the (1,1,1) node toward the (2,3,7) node");
}

void star_pipeline(Criterion& c) {
  const DecoratedGraph g = support::fixture("star4.graph");
  const SpliceEquationSet eqs = substitute_powers(generate_equations(g.graph()), g);
  c.expect(eqs.equations.size() == 2, "two equations");
  const std::vector<VertexId> leaves = g.graph().leaves();
  std::set<std::pair<Rational, Rational>> pairs;
  for (std::size_t i = 0; i < eqs.equations.size(); ++i) {
    std::map<VertexId, std::pair<Rational, std::int64_t>> by_leaf;
    for (const auto& t : eqs.equations[i].terms) {
      c.expect(t.exponents.size() == 1, "pure-power terms");
      by_leaf[t.exponents.begin()->first] = {t.coefficient, t.exponents.begin()->second};
    }
    c.expect(by_leaf.size() == 3 && by_leaf.count(leaves[i]) && by_leaf.count(leaves[2]) && by_leaf.count(leaves[3]),
             "terms in z_i, z_3, z_4");
    if (by_leaf.size() != 3 || !by_leaf.count(leaves[i]) || !by_leaf.count(leaves[2]) || !by_leaf.count(leaves[3])) return;
    c.expect(by_leaf[leaves[i]].second == g.weight(leaves[i]) && by_leaf[leaves[2]].second == 4 &&
                 by_leaf[leaves[3]].second == 5,
             "exponents n_i, 4, 5");
    const Rational lead = by_leaf[leaves[i]].first;
    const Rational a = by_leaf[leaves[2]].first / lead, b = by_leaf[leaves[3]].first / lead;
    c.expect(a != 0 && b != 0, "nonzero coefficients");
    pairs.insert({a, b});
  }
  c.expect(pairs.size() == 2, "distinct coefficient pairs");
  if (pairs.size() == 2) {
    const auto& [a1, b1] = *pairs.begin();
    const auto& [a2, b2] = *std::next(pairs.begin());
    c.expect(a1 * b2 - a2 * b1 != 0, "generic coefficient pairs");
  }
  c.expect(orbifold_homology(g).isomorphic_to(diagonal_group({2, 3, 4, 5})), "D* = Z/2+Z/3+Z/4+Z/5");
}

void blow_up_scripts(Criterion& c) {
  DecoratedGraph d4 = support::fixture("d4.graph");
  c.expect(abs(determinant(intersection_matrix(d4.graph()))) == 4, "|det| = 4 before");
  d4 = blow_up_free(d4, "f");
  d4 = blow_up_edge(d4, "f", "f_b1");
  d4 = blow_up_free(d4, "f_b2");
  c.expect(support::isomorphic_trees(d4, support::fixture("rank7_plain.graph")), "D4 script gives the rank-seven graph");
  c.expect(abs(determinant(intersection_matrix(d4.graph()))) == 4, "|det| = 4 after");
  std::multiset<std::int64_t> eulers;
  for (const auto& v : d4.graph().vertex_ids()) eulers.insert(d4.graph().euler(v));
  c.expect(eulers == std::multiset<std::int64_t>{-2, -2, -2, -4, -2, -2, -1}, "Euler numbers");

  DecoratedGraph e = support::fixture("e237.graph");
  e = blow_up_free(blow_up_free(e, "c"), "c");
  c.expect(e == support::fixture("e237_blown.graph"), "two free blow-ups on the -7 vertex");
}

void property_suites(Criterion& c) {
  constexpr int kTrees = 60;
  std::mt19937 rng(2024);
  for (int trial = 0; trial < kTrees; ++trial) {
    const DecoratedGraph g = support::random_tree(rng);
    for (const auto& [label, failure] :
         {std::pair{"(a)", properties::order_law(g)}, std::pair{"(b)", properties::kernel_is_sum_of_weights(g)},
          std::pair{"(c)", properties::representations_injective(g)}, std::pair{"(d)", properties::square_commutes(g)},
          std::pair{"(e)", properties::blow_up_invariance(g, rng)},
          std::pair{"(f)", properties::factor_bound_and_generation(g)},
          std::pair{"(g)", properties::smith_identities(g)}})
      c.expect(failure.empty(), std::string(label) + " " + failure);
  }
}

void semigroup_oracle(Criterion& c) {
  std::size_t queries = 0;
  std::mt19937 rng(2025);
  for (int trial = 0; trial < 60; ++trial) {
    const PlumbingGraph g = support::random_tree(rng).graph();
    if (g.nodes().empty()) continue;
    for (const auto& e : semigroup_check(splice_diagram(g)).edges) {
      std::vector<std::uint64_t> gens;
      for (const auto& [leaf, l] : e.generators) gens.push_back(l.get_ui());
      for (std::uint64_t target = 0; target <= 200; ++target, ++queries)
        c.expect(semigroup_contains(gens, target) == support::semigroup_brute(gens, target), "diagram edge query");
      if (e.target <= 200) c.expect(e.pass == support::semigroup_brute(gens, e.target.get_ui()), "edge verdict");
    }
  }
  std::uniform_int_distribution<std::uint64_t> gen(1, 40), count(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint64_t> gens(count(rng));
    for (auto& x : gens) x = gen(rng);
    for (std::uint64_t target = 0; target <= 200; ++target, ++queries)
      c.expect(semigroup_contains(gens, target) == support::semigroup_brute(gens, target), "random query");
  }
  c.expect(queries > 10000, "enough queries");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Criterion&)>> criteria{
      {"D4 discriminant, orbifold group and kernel", d4_example},
      {"unimodular four-leaf graph orbifold groups", unimodular_example},
      {"rank-seven graph groups, representation and equations", rank_seven_example},
      {"(2,3,7) splice diagrams and semigroup failure location", e237_example},
      {"four-line star equations and group", star_pipeline},
      {"blow-up scripts", blow_up_scripts},
      {"randomized property suites", property_suites},
      {"semigroup membership against exhaustive search", semigroup_oracle},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failure().empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!ok) std::cout << " -- " << c.failure();
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
