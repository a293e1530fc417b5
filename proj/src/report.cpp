#include "orbsplice/report.hpp"

#include <algorithm>
#include <sstream>

#include "orbsplice/homology.hpp"
#include "orbsplice/reps.hpp"

namespace orbsplice {

namespace {

std::vector<std::string> strings(const std::vector<Integer>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

std::vector<std::string> strings(const QmodZVector& v) {
  std::vector<std::string> out;
  for (const auto& x : v.entries()) out.push_back(to_string(x));
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::string tuple(const std::vector<std::string>& xs) { return "(" + join(xs, ", ") + ")"; }

std::string format_monomial(const MonomialExponent& m) {
  std::string s;
  for (const auto& [w, a] : m) s += (s.empty() ? "" : "*") + w + "^" + std::to_string(a);
  return s.empty() ? "1" : s;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass.value_or(true); });
}

std::string verdict(const CheckResult& c) { return c.pass ? (*c.pass ? "PASS" : "FAIL") : "N/A"; }

std::string format_checks(const std::vector<CheckResult>& checks) {
  std::string s;
  for (const auto& c : checks) {
    s += "check " + c.name + ": " + verdict(c) + "\n";
    for (const auto& w : c.witnesses) s += "  " + w + "\n";
  }
  return s;
}

Json checks_json(const std::vector<CheckResult>& checks) {
  Json j = Json::object();
  for (const auto& c : checks) j[c.name] = to_json(c);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<std::vector<std::string>> image_table(const std::vector<GroupElement>& xs) {
  std::vector<std::vector<std::string>> out;
  for (const auto& x : xs) out.push_back(strings(x.coordinates));
  return out;
}

std::vector<std::vector<std::string>> image_rows(const AbelianGroup& g) {
  std::vector<GroupElement> xs;
  for (std::size_t j = 0; j < g.generator_count(); ++j) xs.push_back(g.generator(j));
  return image_table(xs);
}

Integer weight_product(const DecoratedGraph& g) {
  Integer p = 1;
  for (const auto& [v, n] : g.weights()) p *= Integer(static_cast<long>(n));
  return p;
}

AbelianGroup cyclic_sum(const DecoratedGraph& g) {
  const auto& ws = g.weights();
  IntMatrix rel(ws.size(), ws.size());
  std::size_t i = 0;
  for (const auto& [v, n] : ws) {
    rel(i, i) = static_cast<long>(n);
    ++i;
  }
  return cokernel(rel, ws.size());
}

std::optional<VertexId> default_center(const PlumbingGraph& g) {
  const auto ids = g.vertex_ids();
  if (ids.size() <= 2) return ids.front();
  for (const auto& v : ids)
    if (g.valence(v) >= 2) return v;
  return std::nullopt;
}

std::vector<CheckResult> orbifold_checks(const DecoratedGraph& g, const AbelianGroup& orb, const AbelianGroup& kernel) {
  std::vector<CheckResult> checks;
  const Integer det = abs(determinant(intersection_matrix(g.graph())));
  const Integer expected = det * weight_product(g);
  checks.push_back({"order_law", orb.order() == expected,
                    {"|D*| = " + to_string(*orb.order()) + ", |det| * prod(n) = " + to_string(expected)}});
  CheckResult exact{"kernel_is_sum_of_weights", std::nullopt, {}};
  CheckResult selection{"generator_selection", std::nullopt, {}};
  CheckResult bound{"factor_bound", std::nullopt, {}};
  if (!g.decorated_interior().empty()) {
    exact.witnesses.push_back("weights on interior vertices");
    selection.witnesses.push_back("weights on interior vertices");
    bound.witnesses.push_back("weights on interior vertices");
  } else {
    const AbelianGroup expected_kernel = cyclic_sum(g);
    exact.pass = kernel.isomorphic_to(expected_kernel);
    exact.witnesses.push_back("kernel " + format_group(kernel) + ", expected " + format_group(expected_kernel));
    const std::size_t t = g.graph().leaves().size();
    bound.pass = orb.invariant_factors().size() <= t;
    bound.witnesses.push_back(std::to_string(orb.invariant_factors().size()) + " invariant factors, " +
                              std::to_string(t) + " leaves");
    if (auto center = default_center(g.graph())) {
      try {
        const auto sel = select_generators(g, *center);
        selection.pass = orb.generated_by(sel.classes);
        selection.witnesses.push_back("center " + sel.center + ", green " + join(sel.green, ",") + ", red " +
                                      join(sel.red, ","));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::GenerationFailure) throw;
        selection.pass = false;
        selection.witnesses.push_back(e.what());
      }
    }
  }
  checks.push_back(std::move(exact));
  checks.push_back(std::move(bound));
  checks.push_back(std::move(selection));
  return checks;
}

}  // namespace

Json to_json(const CheckResult& c) {
  Json j;
  j["pass"] = c.pass ? Json(*c.pass) : Json(nullptr);
  j["witnesses"] = c.witnesses;
  return j;
}

std::string root_of_unity_token(const Rational& r) {
  const Rational f = frac_part(r);
  if (f == 0) return "1";
  return "zeta_" + to_string(Integer(f.get_den())) + "^" + to_string(Integer(f.get_num()));
}

CommandOutput report_validate(const DecoratedGraph& g, bool json) {
  const ValidationReport r = validate(g);
  std::vector<CheckResult> checks{{"tree", r.is_tree, {}},
                                  {"negative_definite", r.is_negative_definite, {}},
                                  {"quasi_minimal", r.is_quasi_minimal, {}},
                                  {"leaf_decorations", g.decorated_interior().empty(), {}}};
  for (const auto& v : r.violations) {
    std::size_t slot = 0;
    if (v.starts_with("not negative definite")) slot = 1;
    else if (v.starts_with("not quasi-minimal")) slot = 2;
    else if (v.starts_with("orbifold weight")) slot = 3;
    checks[slot].witnesses.push_back(v);
  }
  CommandOutput out;
  out.passed = all_pass(checks);
  if (json) {
    Json j;
    j["vertex_order"] = g.graph().vertex_ids();
    j["determinant"] = to_string(r.determinant);
    j["checks"] = checks_json(checks);
    out.text = dump(j);
  } else {
    out.text = "vertices: " + join(g.graph().vertex_ids()) + "\ndeterminant: " + to_string(r.determinant) + "\n" +
               format_checks(checks);
  }
  return out;
}

CommandOutput report_homology(const DecoratedGraph& g, bool orbifold, bool json) {
  const PlumbingGraph& pg = g.graph();
  require_negative_definite_tree(pg);
  const AbelianGroup group = orbifold ? orbifold_homology(g) : discriminant_group(pg);
  std::optional<AbelianGroup> kernel;
  std::vector<CheckResult> checks;
  if (orbifold) {
    kernel = kernel_type(projection_hom(g));
    checks = orbifold_checks(g, group, *kernel);
  }
  const auto ids = pg.vertex_ids();
  const auto rows = image_rows(group);
  CommandOutput out;
  out.passed = all_pass(checks);
  if (json) {
    Json j;
    j["group"] = orbifold ? "orbifold" : "discriminant";
    j["vertex_order"] = ids;
    j["invariant_factors"] = strings(group.invariant_factors());
    j["order"] = to_string(*group.order());
    j["generator_images"] = rows;
    if (orbifold) {
      j["kernel"] = {{"invariant_factors", strings(kernel->invariant_factors())},
                     {"generators", image_table(kernel_generators(projection_hom(g)))}};
      j["checks"] = checks_json(checks);
    }
    out.text = dump(j);
  } else {
    std::string s = std::string(orbifold ? "orbifold homology" : "discriminant group") + ": " + format_group(group) +
                    "\ninvariant factors: [" + join(strings(group.invariant_factors()), ", ") +
                    "]\norder: " + to_string(*group.order()) + "\ngenerator images:\n";
    for (std::size_t j = 0; j < ids.size(); ++j) s += "  " + ids[j] + " -> " + tuple(rows[j]) + "\n";
    if (orbifold) s += "kernel of projection: " + format_group(*kernel) + "\n" + format_checks(checks);
    out.text = s;
  }
  return out;
}

CommandOutput report_linking(const DecoratedGraph& g, bool json) {
  const RatMatrix l = linking_matrix(g.graph());
  const auto ids = g.graph().vertex_ids();
  std::vector<std::vector<std::string>> rows(l.rows());
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = 0; j < l.cols(); ++j) rows[i].push_back(to_string(l(i, j)));
  CommandOutput out;
  if (json) {
    out.text = dump(Json{{"vertex_order", ids}, {"linking_matrix", rows}});
  } else {
    std::string s = "vertices: " + join(ids) + "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) s += ids[i] + ": " + join(rows[i]) + "\n";
    out.text = s;
  }
  return out;
}

CommandOutput report_rep(const DecoratedGraph& g, bool orbifold, bool json) {
  const DiagonalRepresentation rep = orbifold ? orbifold_diagonal_rep(g) : diagonal_rep(g.graph());
  std::vector<CheckResult> checks{{"faithful", rep.is_faithful(), {}}};
  if (orbifold) {
    const SquareCheck sq = power_map_square_check(g);
    CheckResult c{"power_map_square", sq.pass, {}};
    for (const auto& f : sq.failures)
      c.witnesses.push_back("generator " + std::to_string(f.generator) + ": N(rho*(x)) = " +
                            format_qmodz(f.power_of_orbifold_image) + ", rho(Phi(x)) = " +
                            format_qmodz(f.image_of_projection));
    checks.push_back(std::move(c));
  }
  std::vector<std::vector<std::string>> images, display;
  for (const auto& im : rep.images) {
    images.push_back(strings(im));
    std::vector<std::string> row;
    for (const auto& e : im.entries()) row.push_back(root_of_unity_token(e));
    display.push_back(std::move(row));
  }
  CommandOutput out;
  out.passed = all_pass(checks);
  if (json) {
    Json j;
    j["leaf_order"] = rep.leaf_order;
    j["invariant_factors"] = strings(rep.group.invariant_factors());
    j["generator_images"] = images;
    j["display"] = display;
    j["checks"] = checks_json(checks);
    out.text = dump(j);
  } else {
    std::string s = "group: " + format_group(rep.group) + "\nleaf order: " + join(rep.leaf_order) + "\n";
    for (std::size_t k = 0; k < images.size(); ++k)
      s += "g" + std::to_string(k + 1) + " -> " + tuple(images[k]) + "  " + tuple(display[k]) + "\n";
    out.text = s + format_checks(checks);
  }
  return out;
}

CommandOutput report_splice(const DecoratedGraph& g, bool check_semigroup, bool check_congruence, bool json) {
  const SpliceDiagram d = splice_diagram(g.graph());
  std::vector<CheckResult> checks;
  if (check_semigroup) {
    const SemigroupReport sr = semigroup_check(d);
    CheckResult c{"semigroup", sr.pass, {}};
    for (const auto& f : sr.failures()) {
      std::vector<std::string> gens;
      for (const auto& [w, l] : f.generators) gens.push_back(to_string(l));
      c.witnesses.push_back("node " + f.node + " toward " + f.toward + ": " + to_string(f.target) +
                            " not in <" + join(gens, ",") + ">");
    }
    checks.push_back(std::move(c));
  }
  if (check_congruence) {
    const CongruenceReport cr = congruence_check(g.graph());
    CheckResult c{"congruence", cr.pass, {}};
    for (const auto& n : cr.nodes) {
      std::string w = "node " + n.node + ": ";
      if (!n.applicable) {
        w += "not applicable (semigroup fails toward " + join(n.failing_edges, ",") + ")";
      } else if (n.pass) {
        std::vector<std::string> ms;
        for (const auto& [toward, m] : n.witness) ms.push_back(toward + ":" + format_monomial(m));
        w += "character " + tuple(strings(n.character->value.coordinates)) + " via " + join(ms, " ");
      } else {
        w += n.truncated ? "no common character (enumeration truncated)" : "no common character";
      }
      c.witnesses.push_back(w);
    }
    checks.push_back(std::move(c));
  }
  CommandOutput out;
  out.passed = all_pass(checks);
  if (json) {
    Json nodes = Json::array();
    for (const auto& v : d.nodes) {
      Json edges = Json::array();
      for (const auto& e : d.edges.at(v))
        edges.push_back({{"toward", e.toward},
                         {"endpoint", e.endpoint},
                         {"chain", e.chain},
                         {"weight", to_string(e.weight)},
                         {"beyond", e.beyond}});
      const LeafWeights lw = leaf_weights(d, v);
      Json leaves = Json::object();
      for (const auto& w : d.leaves) leaves[w] = {{"full", to_string(lw.full.at(w))}, {"outer", to_string(lw.outer.at(w))}};
      nodes.push_back({{"node", v}, {"node_weight", to_string(lw.node_weight)}, {"edges", edges}, {"leaf_weights", leaves}});
    }
    Json j;
    j["leaf_order"] = d.leaves;
    j["nodes"] = nodes;
    j["checks"] = checks_json(checks);
    out.text = dump(j);
  } else {
    std::string s = "leaves: " + join(d.leaves) + "\n";
    for (const auto& v : d.nodes) {
      s += "node " + v + " (d = " + to_string(d.node_weight(v)) + ")\n";
      for (const auto& e : d.edges.at(v)) {
        s += "  toward " + e.toward + " -> " + e.endpoint + ": weight " + to_string(e.weight);
        if (!e.chain.empty()) s += " (collapses " + join(e.chain, ",") + ")";
        s += "\n";
      }
    }
    out.text = s + format_checks(checks);
  }
  return out;
}

CommandOutput report_equations(const DecoratedGraph& g, bool substitute, std::size_t cap, bool json) {
  SpliceEquationSet eqs = generate_equations(g.graph(), std::nullopt, cap);
  if (substitute) eqs = substitute_powers(eqs, g);
  const DiagonalRepresentation rep = substitute ? orbifold_diagonal_rep(g) : diagonal_rep(g.graph());
  const EquivarianceReport er = verify_equivariance(eqs, rep);
  CheckResult c{"equivariance", er.pass, {}};
  for (const auto& f : er.failures) {
    std::vector<std::string> vals;
    for (const auto& v : f.term_values) vals.push_back(to_string(v));
    c.witnesses.push_back("equation " + std::to_string(f.equation + 1) + ", generator " +
                          std::to_string(f.generator + 1) + ": term characters " + tuple(vals));
  }
  std::vector<CheckResult> checks{c};
  CommandOutput out;
  out.passed = all_pass(checks);
  if (json) {
    Json j = to_json(eqs);
    j["checks"] = checks_json(checks);
    out.text = dump(j);
  } else {
    std::string s = "#";
    for (std::size_t i = 0; i < eqs.leaf_order.size(); ++i)
      s += std::string(" ") + eqs.variable_prefix() + "_" + std::to_string(i + 1) + "=" + eqs.leaf_order[i];
    s += "\n" + format_equations(eqs);
    if (!er.pass) s += format_checks(checks);
    out.text = s;
  }
  return out;
}

CommandOutput report_graph(const DecoratedGraph& g, bool json) {
  CommandOutput out;
  if (json) {
    Json weights = Json::object();
    for (const auto& [v, n] : g.weights()) weights[v] = std::to_string(n);
    Json vertices = Json::array();
    for (const auto& v : g.graph().vertex_ids()) vertices.push_back({{"id", v}, {"euler", std::to_string(g.graph().euler(v))}});
    Json edges = Json::array();
    for (const auto& [a, b] : g.graph().edges()) edges.push_back({a, b});
    out.text = dump(Json{{"vertices", vertices}, {"edges", edges}, {"weights", weights}});
  } else {
    out.text = serialize_graph(g);
  }
  return out;
}

std::string render_dot(const DecoratedGraph& g) {
  const PlumbingGraph& pg = g.graph();
  std::ostringstream s;
  s << "graph plumbing {\n  node [shape=circle];\n";
  for (const auto& v : pg.vertex_ids()) s << "  \"" << v << "\" [label=\"" << v << "\\n" << pg.euler(v) << "\"];\n";
  for (const auto& [a, b] : pg.edges()) s << "  \"" << a << "\" -- \"" << b << "\";\n";
  for (const auto& [v, n] : g.weights()) {
    s << "  \"" << v << "/arrow\" [shape=plaintext, label=\"n=" << n << "\"];\n";
    s << "  \"" << v << "\" -- \"" << v << "/arrow\" [dir=forward];\n";
  }
  s << "}\n";
  return s.str();
}

std::string render_dot(const SpliceDiagram& d) {
  std::ostringstream s;
  s << "graph splice {\n";
  for (const auto& v : d.nodes) s << "  \"" << v << "\" [shape=point, width=0.12, xlabel=\"" << v << "\"];\n";
  for (const auto& w : d.leaves) s << "  \"" << w << "\" [shape=plaintext];\n";
  for (const auto& v : d.nodes)
    for (const auto& e : d.edges.at(v)) {
      if (!d.is_node(e.endpoint)) {
        s << "  \"" << v << "\" -- \"" << e.endpoint << "\" [taillabel=\"" << to_string(e.weight) << "\"];\n";
      } else if (v < e.endpoint) {
        const SpliceEdge* back = nullptr;
        for (const auto& f : d.edges.at(e.endpoint))
          if (f.endpoint == v) back = &f;
        s << "  \"" << v << "\" -- \"" << e.endpoint << "\" [taillabel=\"" << to_string(e.weight) << "\", headlabel=\""
          << to_string(back->weight) << "\"];\n";
      }
    }
  s << "}\n";
  return s.str();
}

bool InvariantReport::passed() const { return all_pass(checks); }

InvariantReport invariant_report(const std::string& name, const DecoratedGraph& g) {
  const PlumbingGraph& pg = g.graph();
  InvariantReport r;
  r.name = name;
  const ValidationReport vr = validate(g);
  r.determinant = to_string(vr.determinant);
  r.leaf_order = pg.leaves();
  r.checks.push_back({"negative_definite", vr.is_tree && vr.is_negative_definite, {}});
  r.checks.push_back({"quasi_minimal", vr.is_quasi_minimal, {}});
  CheckResult semigroup{"semigroup", std::nullopt, {}};
  CheckResult congruence{"congruence", std::nullopt, {}};
  if (vr.is_tree && vr.is_negative_definite) {
    r.discriminant = strings(discriminant_group(pg).invariant_factors());
    r.orbifold = strings(orbifold_homology(g).invariant_factors());
    r.kernel = strings(kernel_type(projection_hom(g)).invariant_factors());
    if (g.decorated_interior().empty())
      for (const auto& im : orbifold_diagonal_rep(g).images) r.images.push_back(strings(im));
    if (pg.nodes().empty()) {
      semigroup.witnesses.push_back("no nodes");
      congruence.witnesses.push_back("no nodes");
    } else {
      const SemigroupReport sr = semigroup_check(splice_diagram(pg));
      semigroup.pass = sr.pass;
      for (const auto& f : sr.failures()) semigroup.witnesses.push_back("node " + f.node + " toward " + f.toward);
      if (sr.pass) {
        const CongruenceReport cr = congruence_check(pg);
        congruence.pass = cr.pass;
        for (const auto& n : cr.nodes)
          if (!n.pass) congruence.witnesses.push_back("node " + n.node);
      } else {
        congruence.witnesses.push_back("semigroup condition fails");
      }
    }
  }
  r.checks.push_back(std::move(semigroup));
  r.checks.push_back(std::move(congruence));
  return r;
}

std::string format_invariant_report(const InvariantReport& r) {
  auto factors = [](const std::vector<std::string>& xs) { return "[" + join(xs, ", ") + "]"; };
  std::string s = "== " + r.name + "\ndeterminant: " + r.determinant + "\n";
  s += "discriminant: " + factors(r.discriminant) + "\norbifold: " + factors(r.orbifold) +
       "\nkernel: " + factors(r.kernel) + "\nleaf order: " + join(r.leaf_order) + "\n";
  for (const auto& row : r.images) s += "  " + tuple(row) + "\n";
  return s + format_checks(r.checks);
}

Json to_json(const InvariantReport& r) {
  Json j;
  j["name"] = r.name;
  j["determinant"] = r.determinant;
  j["discriminant"] = {{"invariant_factors", r.discriminant}};
  j["orbifold"] = {{"invariant_factors", r.orbifold}};
  j["kernel"] = {{"invariant_factors", r.kernel}};
  j["leaf_order"] = r.leaf_order;
  j["generator_images"] = r.images;
  j["checks"] = checks_json(r.checks);
  return j;
}

InvariantReport invariant_report_from_json(const Json& j) {
  InvariantReport r;
  r.name = j.at("name").get<std::string>();
  r.determinant = j.at("determinant").get<std::string>();
  r.discriminant = j.at("discriminant").at("invariant_factors").get<std::vector<std::string>>();
  r.orbifold = j.at("orbifold").at("invariant_factors").get<std::vector<std::string>>();
  r.kernel = j.at("kernel").at("invariant_factors").get<std::vector<std::string>>();
  r.leaf_order = j.at("leaf_order").get<std::vector<VertexId>>();
  r.images = j.at("generator_images").get<std::vector<std::vector<std::string>>>();
  for (const auto& [name, c] : j.at("checks").items()) {
    CheckResult check{name, std::nullopt, c.at("witnesses").get<std::vector<std::string>>()};
    if (!c.at("pass").is_null()) check.pass = c.at("pass").get<bool>();
    r.checks.push_back(std::move(check));
  }
  return r;
}

Json to_json(const SpliceEquationSet& eqs) {
  Json j;
  j["leaf_order"] = eqs.leaf_order;
  j["variable_prefix"] = std::string(1, eqs.variable_prefix());
  j["power_substituted"] = eqs.power_substituted;
  std::vector<std::string> subs;
  for (auto n : eqs.substitution_exponents) subs.push_back(std::to_string(n));
  j["substitution_exponents"] = subs;
  Json list = Json::array();
  for (const auto& eq : eqs.equations) {
    Json terms = Json::array();
    for (const auto& t : eq.terms) {
      Json exps = Json::object();
      for (const auto& [w, a] : t.exponents) exps[w] = std::to_string(a);
      terms.push_back({{"coefficient", to_string(t.coefficient)}, {"exponents", exps}});
    }
    list.push_back({{"node", eq.node}, {"text", format_equation(eqs, eq)}, {"terms", terms}});
  }
  j["equations"] = list;
  return j;
}

SpliceEquationSet equations_from_json(const Json& j) {
  SpliceEquationSet eqs;
  eqs.leaf_order = j.at("leaf_order").get<std::vector<VertexId>>();
  eqs.power_substituted = j.at("power_substituted").get<bool>();
  for (const auto& n : j.at("substitution_exponents")) eqs.substitution_exponents.push_back(std::stoll(n.get<std::string>()));
  for (const auto& e : j.at("equations")) {
    SpliceEquation eq;
    eq.node = e.at("node").get<std::string>();
    for (const auto& t : e.at("terms")) {
      Term term;
      term.coefficient = Rational(t.at("coefficient").get<std::string>());
      term.coefficient.canonicalize();
      for (const auto& [w, a] : t.at("exponents").items()) term.exponents[w] = std::stoll(a.get<std::string>());
      eq.terms.push_back(std::move(term));
    }
    eqs.equations.push_back(std::move(eq));
  }
  return eqs;
}

}  // namespace orbsplice
