#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "orbsplice/splice.hpp"

namespace orbsplice {

namespace {

Integer edge_outer_sum(const SpliceDiagram& d, const VertexId& node, const SpliceEdge& e, const MonomialExponent& m) {
  Integer sum = 0;
  for (const auto& [w, a] : m) {
    if (!std::binary_search(e.beyond.begin(), e.beyond.end(), w))
      throw Error(ErrorCode::ConditionsFail,
                  "witness monomial at node '" + node + "' uses leaf '" + w + "' outside edge toward '" + e.toward + "'");
    if (a < 0) throw Error(ErrorCode::ConditionsFail, "negative exponent in witness monomial");
    sum += path_weight(d, node, w, false) * Integer(static_cast<long>(a));
  }
  return sum;
}

}  // namespace

SpliceEquationSet generate_equations(const PlumbingGraph& g, const std::optional<SpliceWitness>& witness,
                                     std::size_t cap) {
  const SpliceDiagram d = splice_diagram(g);
  const SemigroupReport semigroup = semigroup_check(d);
  if (!semigroup.pass) {
    const auto f = semigroup.failures().front();
    throw Error(ErrorCode::ConditionsFail,
                "semigroup condition fails at node '" + f.node + "' toward '" + f.toward + "'");
  }
  const CongruenceReport congruence = congruence_check(g, cap);
  const AbelianGroup group = discriminant_group(g);

  SpliceEquationSet eqs;
  eqs.leaf_order = g.leaves();
  eqs.substitution_exponents.assign(eqs.leaf_order.size(), 1);

  for (const auto& nc : congruence.nodes) {
    const VertexId& v = nc.node;
    const auto& es = d.edges.at(v);
    std::map<VertexId, MonomialExponent> chosen;
    if (witness && witness->count(v)) {
      const auto& supplied = witness->at(v);
      std::optional<Character> common;
      for (const auto& e : es) {
        auto it = supplied.find(e.toward);
        if (it == supplied.end())
          throw Error(ErrorCode::InvalidArgument, "witness for node '" + v + "' lacks edge toward '" + e.toward + "'");
        if (edge_outer_sum(d, v, e, it->second) != e.weight)
          throw Error(ErrorCode::ConditionsFail,
                      "witness monomial at node '" + v + "' toward '" + e.toward + "' is not admissible");
        Character ch = monomial_character(it->second, g, group);
        if (common && !(*common == ch))
          throw Error(ErrorCode::ConditionsFail, "witness monomials at node '" + v + "' have different characters");
        common = ch;
        chosen[e.toward] = it->second;
      }
    } else {
      if (!nc.pass)
        throw Error(ErrorCode::ConditionsFail, "congruence condition fails at node '" + v + "'" +
                                                   (nc.truncated ? " (monomial enumeration truncated)" : ""));
      chosen = nc.witness;
    }
    const std::size_t k = es.size();
    for (std::size_t i = 0; i + 2 < k; ++i) {
      const long c = static_cast<long>(i + 1);
      SpliceEquation eq;
      eq.node = v;
      eq.terms.push_back({Rational(1), chosen.at(es[i].toward)});
      eq.terms.push_back({Rational(c), chosen.at(es[k - 2].toward)});
      eq.terms.push_back({Rational(c * c), chosen.at(es[k - 1].toward)});
      eqs.equations.push_back(std::move(eq));
    }
  }
  return eqs;
}

SpliceEquationSet substitute_powers(const SpliceEquationSet& eqs, const DecoratedGraph& g) {
  g.require_leaf_decorations();
  if (eqs.leaf_order != g.graph().leaves())
    throw Error(ErrorCode::InvalidArgument, "equations were not generated from this graph's leaves");
  if (eqs.power_substituted) throw Error(ErrorCode::InvalidArgument, "powers already substituted");
  SpliceEquationSet out = eqs;
  out.power_substituted = true;
  for (std::size_t i = 0; i < out.leaf_order.size(); ++i) out.substitution_exponents[i] = g.weight(out.leaf_order[i]);
  for (auto& eq : out.equations)
    for (auto& term : eq.terms)
      for (auto& [w, a] : term.exponents) a *= g.weight(w);
  return out;
}

EquivarianceReport verify_equivariance(const SpliceEquationSet& eqs, const DiagonalRepresentation& rep) {
  if (eqs.leaf_order != rep.leaf_order)
    throw Error(ErrorCode::InvalidArgument, "equation variables do not match the representation's leaf order");
  std::map<VertexId, std::size_t> slot;
  for (std::size_t i = 0; i < rep.leaf_order.size(); ++i) slot[rep.leaf_order[i]] = i;

  EquivarianceReport report;
  for (std::size_t q = 0; q < eqs.equations.size(); ++q) {
    const auto& eq = eqs.equations[q];
    for (std::size_t k = 0; k < rep.images.size(); ++k) {
      std::vector<Rational> values;
      for (const auto& term : eq.terms) {
        Rational value = 0;
        for (const auto& [w, a] : term.exponents) value += Rational(static_cast<long>(a)) * rep.images[k][slot.at(w)];
        values.push_back(frac_part(value));
      }
      if (std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) != values.end()) {
        report.pass = false;
        report.failures.push_back({q, k, std::move(values)});
      }
    }
  }
  return report;
}

namespace {

using TermKey = std::vector<std::pair<std::size_t, std::int64_t>>;

TermKey term_key(const SpliceEquationSet& eqs, const Term& t) {
  TermKey key;
  for (const auto& [w, a] : t.exponents) {
    auto it = std::find(eqs.leaf_order.begin(), eqs.leaf_order.end(), w);
    if (it == eqs.leaf_order.end()) throw Error(ErrorCode::InvalidArgument, "term uses unknown variable '" + w + "'");
    if (a != 0) key.emplace_back(static_cast<std::size_t>(it - eqs.leaf_order.begin()), a);
  }
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

std::string format_equation(const SpliceEquationSet& eqs, const SpliceEquation& eq) {
  std::vector<std::pair<TermKey, const Term*>> keyed;
  for (const auto& t : eq.terms) keyed.emplace_back(term_key(eqs, t), &t);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string s;
  for (const auto& [key, t] : keyed) {
    const bool negative = t->coefficient < 0;
    if (!s.empty()) s += negative ? " - " : " + ";
    else if (negative) s += "-";
    s += to_string(abs(t->coefficient));
    for (const auto& [var, a] : key) s += "*" + std::string(1, eqs.variable_prefix()) + "_" + std::to_string(var + 1) + "^" + std::to_string(a);
  }
  if (s.empty()) s = "0";
  return s + " = 0";
}

std::string format_equations(const SpliceEquationSet& eqs) {
  std::string out;
  for (const auto& eq : eqs.equations) out += format_equation(eqs, eq) + "\n";
  return out;
}

namespace {

class EquationParser {
 public:
  EquationParser(std::string_view line, std::size_t line_no, const std::vector<VertexId>& leaves, char& prefix)
      : s_(line), line_(line_no), leaves_(leaves), prefix_(prefix) {}

  SpliceEquation parse() {
    SpliceEquation eq;
    skip();
    bool first = true;
    for (;;) {
      skip();
      if (done() || peek() == '=') break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++i_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      eq.terms.push_back(term(sign));
      first = false;
    }
    if (!done()) {
      ++i_;  // '='
      skip();
      if (done() || peek() != '0') fail("expected '= 0'");
      ++i_;
      skip();
      if (!done()) fail("trailing characters");
    }
    if (eq.terms.empty()) fail("empty equation");
    return eq;
  }

 private:
  bool done() const { return i_ >= s_.size(); }
  char peek() const { return s_[i_]; }
  void skip() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
  }
  [[noreturn]] void fail(const std::string& why) const { throw ParseError(line_, i_ + 1, why); }

  Integer integer() {
    std::size_t start = i_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    if (start == i_) fail("expected a number");
    return Integer(std::string(s_.substr(start, i_ - start)));
  }

  Term term(int sign) {
    Term t;
    t.coefficient = sign;
    skip();
    if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = integer();
      Integer den = 1;
      if (!done() && peek() == '/') {
        ++i_;
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      t.coefficient = make_rational(num * sign, den);
      skip();
      if (done() || peek() != '*') return t;
      ++i_;
      skip();
    }
    for (;;) {
      factor(t);
      skip();
      if (done() || peek() != '*') break;
      ++i_;
      skip();
    }
    return t;
  }

  void factor(Term& t) {
    if (done() || (peek() != 'x' && peek() != 'z')) fail("expected a variable x_<k> or z_<k>");
    const char p = peek();
    if (prefix_ == 0) prefix_ = p;
    if (p != prefix_) fail("mixed x and z variables");
    ++i_;
    if (done() || peek() != '_') fail("expected '_' after variable prefix");
    ++i_;
    Integer idx = integer();
    if (idx < 1 || idx > static_cast<long>(leaves_.size())) fail("variable index out of range");
    std::int64_t exp = 1;
    skip();
    if (!done() && peek() == '^') {
      ++i_;
      skip();
      Integer e = integer();
      if (!e.fits_slong_p()) fail("exponent too large");
      exp = e.get_si();
    }
    if (exp != 0) t.exponents[leaves_[idx.get_ui() - 1]] += exp;
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t line_;
  const std::vector<VertexId>& leaves_;
  char& prefix_;
};

}  // namespace

SpliceEquationSet parse_equations(std::string_view text, std::vector<VertexId> leaf_order) {
  SpliceEquationSet eqs;
  eqs.leaf_order = std::move(leaf_order);
  eqs.substitution_exponents.assign(eqs.leaf_order.size(), 1);
  char prefix = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    eqs.equations.push_back(EquationParser(line, line_no, eqs.leaf_order, prefix).parse());
  }
  eqs.power_substituted = prefix == 'z';
  return eqs;
}

}  // namespace orbsplice
