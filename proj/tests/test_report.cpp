#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orbsplice/report.hpp"
#include "support.hpp"

using namespace orbsplice;

namespace {

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

const CheckResult& check_named(const InvariantReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  FAIL("missing check " << name);
  return r.checks.front();
}

}  // namespace

TEST_CASE("invariant report of the rank-seven graph") {
  const InvariantReport r = invariant_report("rank7", support::fixture("rank7.graph"));
  CHECK(r.determinant == "-4");
  CHECK(r.discriminant == std::vector<std::string>{"2", "2"});
  CHECK(r.orbifold == std::vector<std::string>{"2", "30"});
  CHECK(r.kernel == std::vector<std::string>{"15"});
  CHECK(r.images.size() == 2);
  CHECK(r.passed());

  const Json j = to_json(r);
  CHECK(j.at("orbifold").at("invariant_factors").at(1).is_string());
  CHECK(j.at("determinant").is_string());
  CHECK(invariant_report_from_json(j) == r);
  CHECK(invariant_report_from_json(Json::parse(j.dump())) == r);
}

TEST_CASE("invariant report marks inapplicable checks") {
  const InvariantReport chain = invariant_report("chain", parse_graph("vertex a -2\nvertex b -2\nedge a b\nweight a 3\n"));
  CHECK_FALSE(check_named(chain, "semigroup").pass.has_value());
  CHECK(chain.passed());
  CHECK(to_json(chain).at("checks").at("semigroup").at("pass").is_null());
  CHECK(invariant_report_from_json(to_json(chain)) == chain);

  const InvariantReport blown = invariant_report("blown", support::fixture("e237_blown.graph"));
  CHECK(check_named(blown, "semigroup").pass == false);
  CHECK_FALSE(check_named(blown, "congruence").pass.has_value());
  CHECK_FALSE(blown.passed());

  const InvariantReport indefinite = invariant_report("zero", parse_graph("vertex a 0\n"));
  CHECK(check_named(indefinite, "negative_definite").pass == false);
  CHECK(indefinite.orbifold.empty());
}

TEST_CASE("reports are deterministic") {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const DecoratedGraph g = support::random_tree(rng);
    CHECK(format_invariant_report(invariant_report("g", g)) == format_invariant_report(invariant_report("g", g)));
    CHECK(to_json(invariant_report("g", g)).dump() == to_json(invariant_report("g", g)).dump());
    CHECK(report_homology(g, true, true).text == report_homology(g, true, true).text);
    CHECK(report_rep(g, true, false).text == report_rep(g, true, false).text);
  }
}

TEST_CASE("equation sets survive JSON") {
  const DecoratedGraph g = support::fixture("rank7.graph");
  for (bool substitute : {false, true}) {
    SpliceEquationSet eqs = generate_equations(g.graph());
    if (substitute) eqs = substitute_powers(eqs, g);
    const Json j = to_json(eqs);
    CHECK(j.at("variable_prefix") == (substitute ? "z" : "x"));
    const SpliceEquationSet back = equations_from_json(Json::parse(j.dump()));
    CHECK(back == eqs);
    CHECK(format_equations(back) == format_equations(eqs));
  }
}

TEST_CASE("command reports") {
  SUBCASE("orbifold homology JSON") {
    const Json j = Json::parse(report_homology(support::fixture("d4_decorated.graph"), true, true).text);
    CHECK(j.at("invariant_factors") == Json({"2", "4", "4"}));
    CHECK(j.at("order") == "32");
    CHECK(j.at("kernel").at("invariant_factors") == Json({"2", "2", "2"}));
    for (const auto* name : {"order_law", "kernel_is_sum_of_weights", "factor_bound", "generator_selection"})
      CHECK(j.at("checks").at(name).at("pass") == true);
  }
  SUBCASE("interior weights make the kernel check inapplicable") {
    DecoratedGraph g = support::fixture("d4.graph");
    g.set_weight("f", 3);
    const Json j = Json::parse(report_homology(g, true, true).text);
    CHECK(j.at("checks").at("order_law").at("pass") == true);
    CHECK(j.at("checks").at("kernel_is_sum_of_weights").at("pass").is_null());
  }
  SUBCASE("splice conditions") {
    const CommandOutput bad = report_splice(support::fixture("e237_blown.graph"), true, false, false);
    CHECK_FALSE(bad.passed);
    CHECK(bad.text.find("node c toward n: 1 not in <3,2>") != std::string::npos);
    CHECK(report_splice(support::fixture("rank7.graph"), true, true, false).passed);
  }
  SUBCASE("equations") {
    const CommandOutput out = report_equations(support::fixture("star4.graph"), true, kDefaultMonomialCap, false);
    CHECK(out.passed);
    CHECK(out.text.find("1*z_1^2 + 1*z_3^4 + 1*z_4^5 = 0") != std::string::npos);
    CHECK(out.text.rfind("# z_1=l1 z_2=l2", 0) == 0);
    CHECK_THROWS_AS(report_equations(support::fixture("e237_blown.graph"), false, kDefaultMonomialCap, false), Error);
  }
  SUBCASE("validate flags problems without throwing") {
    const CommandOutput out = report_validate(parse_graph("vertex a -1\nvertex b -1\nedge a b\n"), true);
    CHECK_FALSE(out.passed);
    CHECK(Json::parse(out.text).at("checks").at("negative_definite").at("pass") == false);
  }
}

TEST_CASE("DOT rendering") {
  SUBCASE("single vertex") {
    const std::string dot = render_dot(parse_graph("vertex v -3\n"));
    CHECK(count(dot, "[label=") == 1);
    CHECK(count(dot, " -- ") == 0);
  }
  SUBCASE("decorated D4") {
    const std::string dot = render_dot(support::fixture("d4_decorated.graph"));
    CHECK(count(dot, "[label=\"") == 4);
    CHECK(count(dot, "label=\"n=2\"") == 3);
    CHECK(count(dot, "[dir=forward]") == 3);
    CHECK(dot.rfind("graph plumbing {", 0) == 0);
  }
  SUBCASE("splice diagram of (2,3,7)") {
    const std::string dot = render_dot(splice_diagram(support::fixture("e237.graph").graph()));
    CHECK(count(dot, "shape=point") == 1);
    CHECK(count(dot, "taillabel=") == 3);
    CHECK(dot.find("\"n\" -- \"c\" [taillabel=\"7\"]") != std::string::npos);
  }
  SUBCASE("node-to-node edges carry both weights") {
    const std::string dot = render_dot(splice_diagram(support::fixture("rank7_plain.graph").graph()));
    CHECK(dot.find("\"b\" -- \"c\" [taillabel=\"20\", headlabel=\"1\"]") != std::string::npos);
    CHECK(count(dot, " -- ") == 6);
  }
}

TEST_CASE("roots of unity") {
  CHECK(root_of_unity_token(Rational(0)) == "1");
  CHECK(root_of_unity_token(Rational(3, 4)) == "zeta_4^3");
  CHECK(root_of_unity_token(Rational(-1, 3)) == "zeta_3^2");
  CHECK(root_of_unity_token(Rational(5, 2)) == "zeta_2^1");
}
