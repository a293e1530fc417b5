#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbsplice/graphs.hpp"
#include "orbsplice/splice.hpp"

namespace orbsplice {

using Json = nlohmann::ordered_json;

/// Result of one named check. pass is empty when the check does not apply.
struct CheckResult {
  std::string name;
  std::optional<bool> pass;
  std::vector<std::string> witnesses;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// Rendered command output plus the overall verdict of the checks it ran.
struct CommandOutput {
  std::string text;
  bool passed = true;
};

CommandOutput report_validate(const DecoratedGraph& g, bool json);
CommandOutput report_homology(const DecoratedGraph& g, bool orbifold, bool json);
CommandOutput report_linking(const DecoratedGraph& g, bool json);
CommandOutput report_rep(const DecoratedGraph& g, bool orbifold, bool json);
CommandOutput report_splice(const DecoratedGraph& g, bool check_semigroup, bool check_congruence, bool json);
/// Throws ConditionsFail when equations cannot be generated.
CommandOutput report_equations(const DecoratedGraph& g, bool substitute, std::size_t cap, bool json);
CommandOutput report_graph(const DecoratedGraph& g, bool json);

/// Decorated graph: one node per vertex, an arrow node "n=<w>" per weight > 1.
std::string render_dot(const DecoratedGraph& g);
/// Splice diagram: edge weights as labels at the node end of each edge.
std::string render_dot(const SpliceDiagram& d);

/// "zeta_d^k" for k/d, "1" for 0.
std::string root_of_unity_token(const Rational& r);

struct InvariantReport {
  std::string name;
  std::string determinant;
  std::vector<std::string> discriminant;
  std::vector<std::string> orbifold;
  std::vector<std::string> kernel;
  std::vector<VertexId> leaf_order;
  std::vector<std::vector<std::string>> images;  // orbifold representation, one row per generator
  std::vector<CheckResult> checks;

  bool passed() const;
  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

InvariantReport invariant_report(const std::string& name, const DecoratedGraph& g);
std::string format_invariant_report(const InvariantReport& r);

Json to_json(const CheckResult& c);
Json to_json(const InvariantReport& r);
InvariantReport invariant_report_from_json(const Json& j);
Json to_json(const SpliceEquationSet& eqs);
SpliceEquationSet equations_from_json(const Json& j);

}  // namespace orbsplice
