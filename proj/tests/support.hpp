// Shared helpers for the test binaries: fixture loading, random graph
// generation and brute-force oracles that avoid the library's own algorithms.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "orbsplice/graphs.hpp"

namespace support {

using orbsplice::DecoratedGraph;
using orbsplice::IntMatrix;
using orbsplice::Integer;
using orbsplice::PlumbingGraph;
using orbsplice::Rational;
using orbsplice::VertexId;

inline std::string fixture_path(const std::string& name) { return std::string(ORBSPLICE_FIXTURE_DIR) + "/" + name; }

inline DecoratedGraph fixture(const std::string& name) { return orbsplice::load_graph(fixture_path(name)); }

inline IntMatrix rows(std::vector<std::vector<long>> rs) {
  IntMatrix m(rs.size(), rs.empty() ? 0 : rs[0].size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < rs[i].size(); ++j) m(i, j) = rs[i][j];
  return m;
}

// ---- determinants and invariant factors by cofactor expansion ----

inline Integer cofactor_det(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    const Integer term = a[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  if (k > n) return;
  for (;;) {
    f(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

struct MinorInvariants {
  std::vector<Integer> factors;  // invariant factors > 1
  std::size_t rank = 0;
};

// d_k = D_k / D_{k-1}, D_k the gcd of all k x k minors.
inline MinorInvariants invariants_by_minors(const IntMatrix& m) {
  MinorInvariants out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    Integer g = 0;
    subsets(m.rows(), k, [&](const std::vector<std::size_t>& rs) {
      subsets(m.cols(), k, [&](const std::vector<std::size_t>& cs) {
        std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) a[i][j] = m(rs[i], cs[j]);
        g = gcd(g, cofactor_det(a));
      });
    });
    if (g == 0) break;
    out.rank = k;
    Integer d = g / prev;
    if (d != 1) out.factors.push_back(d);
    prev = g;
  }
  return out;
}

// ---- tree determinant by leaf elimination (continued fractions) ----

// det of the intersection matrix restricted to `keep` (a subtree), computed by
// rooting it and folding children into parents: f(v) = e_v - sum 1/f(child).
// Meant for negative-definite subtrees, where every f(v) is negative.
inline Rational tree_det(const PlumbingGraph& g, const std::set<VertexId>& keep) {
  if (keep.empty()) return 1;
  const VertexId root = *keep.begin();
  Rational product = 1;
  std::function<Rational(const VertexId&, const VertexId&)> fold = [&](const VertexId& v, const VertexId& parent) {
    Rational f = Rational(static_cast<long>(g.euler(v)));
    for (const auto& c : g.neighbors(v)) {
      if (c == parent || !keep.count(c)) continue;
      Rational fc = fold(c, v);
      product *= fc;
      f -= 1 / fc;
    }
    return f;
  };
  const Rational top = fold(root, "");
  return product * top;
}

inline Rational tree_det(const PlumbingGraph& g) {
  const auto ids = g.vertex_ids();
  return tree_det(g, std::set<VertexId>(ids.begin(), ids.end()));
}

// ---- numerical semigroup membership by exhaustive search ----

inline bool semigroup_brute(const std::vector<std::uint64_t>& gens, std::uint64_t target, std::size_t i = 0) {
  if (target == 0) return true;
  if (i == gens.size()) return false;
  if (gens[i] == 0) return semigroup_brute(gens, target, i + 1);
  for (std::uint64_t k = 0; k * gens[i] <= target; ++k)
    if (semigroup_brute(gens, target - k * gens[i], i + 1)) return true;
  return false;
}

// ---- tree isomorphism (eulers and weights respected, ids ignored) ----

inline std::string rooted_code(const DecoratedGraph& g, const VertexId& v, const VertexId& parent) {
  std::vector<std::string> kids;
  for (const auto& c : g.graph().neighbors(v))
    if (c != parent) kids.push_back(rooted_code(g, c, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(" + std::to_string(g.graph().euler(v)) + "/" + std::to_string(g.weight(v));
  for (const auto& k : kids) s += k;
  return s + ")";
}

inline std::string tree_canonical_form(const DecoratedGraph& g) {
  std::string best;
  for (const auto& v : g.graph().vertex_ids()) {
    std::string c = rooted_code(g, v, "");
    if (best.empty() || c < best) best = c;
  }
  return best;
}

inline bool isomorphic_trees(const DecoratedGraph& a, const DecoratedGraph& b) {
  return a.graph().vertex_count() == b.graph().vertex_count() && tree_canonical_form(a) == tree_canonical_form(b);
}

// ---- random negative-definite decorated trees ----

struct TreeOptions {
  std::size_t max_vertices = 12;
  std::int64_t max_weight = 6;
  bool interior_weights = false;
};

// Random tree; Euler numbers are drawn until the form is negative definite.
inline DecoratedGraph random_tree(std::mt19937& rng, const TreeOptions& opt = {}) {
  std::uniform_int_distribution<std::size_t> size_dist(1, opt.max_vertices);
  const std::size_t n = size_dist(rng);
  std::vector<std::size_t> parent(n, 0);
  for (std::size_t i = 1; i < n; ++i) parent[i] = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
  std::vector<std::size_t> valence(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    ++valence[i];
    ++valence[parent[i]];
  }
  auto name = [](std::size_t i) { return "v" + std::string(i < 10 ? "0" : "") + std::to_string(i); };
  for (;;) {
    PlumbingGraph g;
    const bool dominant = std::bernoulli_distribution(0.5)(rng);
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t e;
      if (dominant) {
        e = -static_cast<std::int64_t>(std::max<std::size_t>(valence[i], 1)) -
            std::uniform_int_distribution<std::int64_t>(0, 2)(rng);
      } else {
        e = std::uniform_int_distribution<std::int64_t>(-6, -1)(rng);
      }
      g.add_vertex(name(i), e);
    }
    for (std::size_t i = 1; i < n; ++i) g.add_edge(name(i), name(parent[i]));
    if (!orbsplice::is_negative_definite(g)) continue;
    DecoratedGraph dg(g);
    std::uniform_int_distribution<std::int64_t> wdist(1, opt.max_weight);
    for (const auto& v : g.vertex_ids())
      if ((g.is_leaf(v) || opt.interior_weights) && std::bernoulli_distribution(0.6)(rng)) dg.set_weight(v, wdist(rng));
    return dg;
  }
}

}  // namespace support
