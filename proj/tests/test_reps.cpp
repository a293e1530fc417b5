#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orbsplice/reps.hpp"
#include "support.hpp"

using namespace orbsplice;

namespace {

QmodZVector vec(std::initializer_list<Rational> xs) { return QmodZVector(std::vector<Rational>(xs)); }

Rational q(long n, long d) { return make_rational(Integer(n), Integer(d)); }

QmodZVector image_of_vertex(const DiagonalRepresentation& rep, const PlumbingGraph& g, const VertexId& v) {
  std::vector<Integer> combo(g.vertex_count(), 0);
  combo[g.index_of(v)] = 1;
  return rep.image_of(rep.group.class_of(combo));
}

// Brute force: all images distinct across the group.
bool injective_by_enumeration(const DiagonalRepresentation& rep) {
  std::set<QmodZVector> seen;
  for (const auto& x : rep.group.elements())
    if (!seen.insert(rep.image_of(x)).second) return false;
  return true;
}

std::set<QmodZVector> closure(const std::vector<QmodZVector>& gens, std::size_t length) {
  std::set<QmodZVector> out{QmodZVector::zero(length)};
  std::vector<QmodZVector> frontier{QmodZVector::zero(length)};
  while (!frontier.empty()) {
    std::vector<QmodZVector> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        QmodZVector y = x + g;
        if (out.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("Q/Z vectors reduce into [0, 1)") {
  const QmodZVector v = vec({q(-1, 2), q(5, 4), 0});
  CHECK(v[0] == q(1, 2));
  CHECK(v[1] == q(1, 4));
  CHECK((v + v)[0] == 0);
  CHECK(v.scaled(4).is_zero());
  CHECK(format_qmodz(v) == "(1/2, 1/4, 0)");
}

TEST_CASE("diagonal representation over a trivial group") {
  const DiagonalRepresentation rep = diagonal_rep(support::fixture("e237.graph").graph());
  CHECK(rep.group.is_trivial());
  CHECK(rep.images.empty());
  CHECK(rep.image_of(rep.group.zero()).is_zero());
  CHECK(rep.is_faithful());
}

TEST_CASE("diagonal representation of D4") {
  const PlumbingGraph g = support::fixture("d4.graph").graph();
  const DiagonalRepresentation rep = diagonal_rep(g);
  CHECK(rep.leaf_order == std::vector<VertexId>{"e1", "e2", "e3"});
  CHECK(image_of_vertex(rep, g, "e1") == vec({0, q(1, 2), q(1, 2)}));
  CHECK(image_of_vertex(rep, g, "e2") == vec({q(1, 2), 0, q(1, 2)}));
  CHECK(image_of_vertex(rep, g, "f") == QmodZVector::zero(3));
  CHECK(rep.is_faithful());
  CHECK(injective_by_enumeration(rep));
}

TEST_CASE("rank-seven graph: sign changes on the first three coordinates") {
  const PlumbingGraph g = support::fixture("rank7_plain.graph").graph();
  const DiagonalRepresentation rep = diagonal_rep(g);
  CHECK(rep.leaf_order == std::vector<VertexId>{"x1", "x2", "x3", "x4", "x5"});
  for (const auto& x : rep.group.elements()) {
    const QmodZVector im = rep.image_of(x);
    CHECK(im[3] == 0);
    CHECK(im[4] == 0);
    for (std::size_t i = 0; i < 3; ++i) CHECK((im[i] == 0 || im[i] == q(1, 2)));
  }
  CHECK(injective_by_enumeration(rep));
}

TEST_CASE("orbifold diagonal representation") {
  SUBCASE("weights 1 agree with the plain representation") {
    const DecoratedGraph g = support::fixture("d4.graph");
    const DiagonalRepresentation a = orbifold_diagonal_rep(g), b = diagonal_rep(g.graph());
    CHECK(a.images == b.images);
  }
  SUBCASE("D4 with weights 2") {
    const DecoratedGraph g = support::fixture("d4_decorated.graph");
    const DiagonalRepresentation rep = orbifold_diagonal_rep(g);
    CHECK(image_of_vertex(rep, g.graph(), "e1") == vec({q(1, 2), q(3, 4), q(3, 4)}));
    std::vector<Integer> e1(4, 0);
    e1[g.graph().index_of("e1")] = 1;
    CHECK(rep.group.element_order(rep.group.class_of(e1)) == 4);
    CHECK(rep.is_faithful());
    CHECK(injective_by_enumeration(rep));
  }
  SUBCASE("rank-seven graph, (p, q) = (3, 5): the three stated generators span the image") {
    const DecoratedGraph g = support::fixture("rank7.graph");
    const DiagonalRepresentation rep = orbifold_diagonal_rep(g);
    std::set<QmodZVector> image;
    for (const auto& x : rep.group.elements()) image.insert(rep.image_of(x));
    CHECK(image.size() == 60);
    const long p = 3, qq = 5;
    const std::vector<QmodZVector> stated{vec({q(1, 2), 0, q(1, 2), 0, 0}), vec({q(p, 2 * p), q(1, 2 * p), 0, 0, 0}),
                                          vec({0, 0, 0, 0, q(1, qq)})};
    CHECK(closure(stated, 5) == image);
  }
  SUBCASE("interior decorations are rejected") {
    DecoratedGraph g = support::fixture("d4.graph");
    g.set_weight("f", 2);
    CHECK_THROWS_AS(orbifold_diagonal_rep(g), Error);
  }
}

TEST_CASE("power map square") {
  for (const auto* name : {"d4.graph", "d4_decorated.graph", "unimodular4.graph", "rank7.graph", "star4.graph"}) {
    CAPTURE(name);
    const SquareCheck sq = power_map_square_check(support::fixture(name));
    CHECK(sq.pass);
    CHECK(sq.failures.empty());
  }
  CHECK(power_map(support::fixture("unimodular4.graph")).exponents == std::vector<std::int64_t>{2, 5, 3, 7});
}

TEST_CASE("kernel elements map to generators of ker N") {
  // The class of the (unscaled) relation of leaf w lies in ker Phi and maps to 1/n_w at w.
  for (const auto* name : {"d4_decorated.graph", "unimodular4.graph", "rank7.graph", "star4.graph"}) {
    CAPTURE(name);
    const DecoratedGraph g = support::fixture(name);
    const PlumbingGraph& pg = g.graph();
    const DiagonalRepresentation rep = orbifold_diagonal_rep(g);
    const GroupHom phi = projection_hom(g);
    const IntMatrix m = intersection_matrix(pg);
    for (std::size_t k = 0; k < rep.leaf_order.size(); ++k) {
      const VertexId& w = rep.leaf_order[k];
      const GroupElement x = rep.group.class_of(m.row(pg.index_of(w)));
      CHECK(phi.apply(x).is_zero());
      std::vector<Rational> expected(rep.leaf_order.size(), 0);
      expected[k] = q(1, g.weight(w));
      CHECK(rep.image_of(x) == QmodZVector(expected));
    }
  }
}

TEST_CASE("monomial characters") {
  const PlumbingGraph d4 = support::fixture("d4.graph").graph();
  CHECK(monomial_character({{"e1", 2}}, d4).is_trivial());
  const Character c1 = monomial_character({{"e1", 1}}, d4);
  CHECK_FALSE(c1.is_trivial());
  CHECK(c1.value == discriminant_group(d4).generator(d4.index_of("e1")));
  CHECK_FALSE(c1 == monomial_character({{"e2", 1}}, d4));
  CHECK(monomial_character({{"a", 5}, {"c", 3}}, support::fixture("e237.graph").graph()).is_trivial());
  try {
    monomial_character({{"f", 1}}, d4);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotALeaf);
  }
}

TEST_CASE("random trees: faithfulness and character additivity") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<std::int64_t> expo(0, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const DecoratedGraph g = support::random_tree(rng);
    const PlumbingGraph& pg = g.graph();
    const DiagonalRepresentation plain = diagonal_rep(pg), orb = orbifold_diagonal_rep(g);
    CHECK(plain.is_faithful());
    CHECK(orb.is_faithful());
    if (*plain.group.order() <= 10000) CHECK(injective_by_enumeration(plain));
    if (*orb.group.order() <= 10000) CHECK(injective_by_enumeration(orb));

    MonomialExponent a, b, sum;
    for (const auto& w : pg.leaves()) {
      a[w] = expo(rng);
      b[w] = expo(rng);
      sum[w] = a[w] + b[w];
    }
    const AbelianGroup d = discriminant_group(pg);
    CHECK(monomial_character(sum, pg, d).value ==
          d.add(monomial_character(a, pg, d).value, monomial_character(b, pg, d).value));
  }
}
