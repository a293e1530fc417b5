#include "orbsplice/reps.hpp"

#include <algorithm>

namespace orbsplice {

QmodZVector::QmodZVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  for (auto& e : entries_) e = frac_part(e);
}

bool QmodZVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r == 0; });
}

QmodZVector QmodZVector::operator+(const QmodZVector& other) const {
  if (other.size() != size()) throw Error(ErrorCode::InvalidArgument, "Q/Z vector length mismatch");
  std::vector<Rational> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[i] + other.entries_[i];
  return QmodZVector(std::move(out));
}

QmodZVector QmodZVector::scaled(const Integer& k) const {
  std::vector<Rational> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[i] * Rational(k);
  return QmodZVector(std::move(out));
}

std::string format_qmodz(const QmodZVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

QmodZVector DiagonalRepresentation::image_of(const GroupElement& x) const {
  QmodZVector acc = QmodZVector::zero(leaf_order.size());
  for (std::size_t k = 0; k < images.size(); ++k)
    if (x.coordinates.at(k) != 0) acc = acc + images[k].scaled(x.coordinates[k]);
  return acc;
}

bool DiagonalRepresentation::is_faithful() const {
  if (group.is_trivial()) return true;
  const std::size_t t = leaf_order.size();
  Integer denom = 1;
  for (const auto& img : images)
    for (const auto& e : img.entries()) denom = lcm(denom, Integer(e.get_den()));
  IntMatrix target_rel(t, t);
  for (std::size_t i = 0; i < t; ++i) target_rel(i, i) = denom;
  AbelianGroup target = cokernel(target_rel, t);
  // Map the scaled images into the canonical form of (Z/L)^t.
  IntMatrix mapped(group.rank(), target.rank());
  for (std::size_t k = 0; k < images.size(); ++k) {
    std::vector<Integer> combo(t);
    for (std::size_t w = 0; w < t; ++w) {
      Rational scaled = images[k][w] * Rational(denom);
      combo[w] = scaled.get_num();
    }
    GroupElement img = target.class_of(combo);
    for (std::size_t l = 0; l < target.rank(); ++l) mapped(k, l) = img.coordinates[l];
  }
  auto kernel = group.kernel_generators(mapped, target);
  return group.subgroup(kernel).is_trivial();
}

namespace {

DiagonalRepresentation build_rep(const DecoratedGraph& dg, AbelianGroup group, bool divide_by_weights) {
  const PlumbingGraph& g = dg.graph();
  DiagonalRepresentation rep;
  rep.leaf_order = g.leaves();
  rep.group = std::move(group);
  const RatMatrix pairing = rational_inverse(intersection_matrix(g));
  std::vector<std::size_t> leaf_index;
  for (const auto& w : rep.leaf_order) leaf_index.push_back(g.index_of(w));

  for (std::size_t k = 0; k < rep.group.rank(); ++k) {
    auto lift = rep.group.generator_lifts().row(k);
    std::vector<Rational> entries(rep.leaf_order.size());
    for (std::size_t w = 0; w < leaf_index.size(); ++w) {
      Rational acc = 0;
      for (std::size_t j = 0; j < lift.size(); ++j)
        if (lift[j] != 0) acc += Rational(lift[j]) * pairing(j, leaf_index[w]);
      if (divide_by_weights) acc /= Rational(dg.weight(rep.leaf_order[w]));
      entries[w] = acc;
    }
    rep.images.emplace_back(std::move(entries));
  }
  for (std::size_t k = 0; k < rep.group.invariant_factors().size(); ++k)
    if (!rep.images[k].scaled(rep.group.invariant_factors()[k]).is_zero())
      throw Error(ErrorCode::Internal, "diagonal representation does not respect the group relations");
  return rep;
}

}  // namespace

DiagonalRepresentation diagonal_rep(const PlumbingGraph& g) {
  return build_rep(DecoratedGraph(g), discriminant_group(g), false);
}

DiagonalRepresentation orbifold_diagonal_rep(const DecoratedGraph& g) {
  require_negative_definite_tree(g.graph());
  g.require_leaf_decorations();
  return build_rep(g, orbifold_homology(g), true);
}

QmodZVector PowerMap::apply(const QmodZVector& v) const {
  if (v.size() != exponents.size()) throw Error(ErrorCode::InvalidArgument, "power map length mismatch");
  std::vector<Rational> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * Rational(static_cast<long>(exponents[i]));
  return QmodZVector(std::move(out));
}

PowerMap power_map(const DecoratedGraph& g) {
  PowerMap n;
  for (const auto& w : g.graph().leaves()) n.exponents.push_back(g.weight(w));
  return n;
}

SquareCheck power_map_square_check(const DecoratedGraph& g) {
  const DiagonalRepresentation top = orbifold_diagonal_rep(g);
  const DiagonalRepresentation bottom = diagonal_rep(g.graph());
  const GroupHom phi = projection_hom(g);
  const PowerMap n = power_map(g);
  SquareCheck check;
  for (std::size_t k = 0; k < top.group.rank(); ++k) {
    const GroupElement x = top.group.canonical_generator(k);
    QmodZVector around_top = n.apply(top.image_of(x));
    QmodZVector around_bottom = bottom.image_of(phi.apply(x));
    ++check.generators_checked;
    if (around_top != around_bottom) {
      check.pass = false;
      check.failures.push_back({k, std::move(around_top), std::move(around_bottom)});
    }
  }
  return check;
}

Character monomial_character(const MonomialExponent& exponents, const PlumbingGraph& g,
                             const AbelianGroup& discriminant) {
  std::vector<Integer> combo(g.vertex_count(), 0);
  for (const auto& [w, a] : exponents) {
    if (!g.has_vertex(w)) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + w + "'");
    if (!g.is_leaf(w)) throw Error(ErrorCode::NotALeaf, "'" + w + "' is not a leaf");
    if (a < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent on '" + w + "'");
    combo[g.index_of(w)] += static_cast<long>(a);
  }
  return Character{discriminant.class_of(combo)};
}

Character monomial_character(const MonomialExponent& exponents, const PlumbingGraph& g) {
  return monomial_character(exponents, g, discriminant_group(g));
}

}  // namespace orbsplice
