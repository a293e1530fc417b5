#include "orbsplice/homology.hpp"

#include <algorithm>
#include <deque>

namespace orbsplice {

RelationSystem relation_system(const DecoratedGraph& g) {
  RelationSystem rs;
  rs.vertex_order = g.graph().vertex_ids();
  rs.weights = g.weight_vector();
  rs.matrix = intersection_matrix(g.graph());
  for (std::size_t i = 0; i < rs.matrix.rows(); ++i)
    for (std::size_t j = 0; j < rs.matrix.cols(); ++j) rs.matrix(i, j) *= static_cast<long>(rs.weights[i]);
  return rs;
}

GroupElement GroupHom::apply(const GroupElement& x) const {
  std::vector<Integer> c(target.rank(), 0);
  for (std::size_t k = 0; k < source.rank(); ++k) {
    if (x.coordinates.at(k) == 0) continue;
    for (std::size_t l = 0; l < target.rank(); ++l) c[l] += x.coordinates[k] * images(k, l);
  }
  return target.reduce(std::move(c));
}

bool GroupHom::is_surjective() const {
  std::vector<GroupElement> imgs;
  for (std::size_t k = 0; k < source.rank(); ++k) imgs.push_back(apply(source.canonical_generator(k)));
  return target.generated_by(imgs);
}

GroupHom make_group_hom(AbelianGroup source, AbelianGroup target, IntMatrix images) {
  if (images.rows() != source.rank() || (source.rank() > 0 && images.cols() != target.rank()))
    throw Error(ErrorCode::InvalidArgument, "homomorphism image matrix has the wrong shape");
  GroupHom h{std::move(source), std::move(target), std::move(images)};
  for (std::size_t k = 0; k < h.source.invariant_factors().size(); ++k) {
    const GroupElement img = h.apply(h.source.canonical_generator(k));
    if (!h.target.scale(img, h.source.invariant_factors()[k]).is_zero())
      throw Error(ErrorCode::Internal, "homomorphism is not well defined");
  }
  return h;
}

AbelianGroup discriminant_group(const PlumbingGraph& g) {
  require_negative_definite_tree(g);
  return cokernel(intersection_matrix(g));
}

AbelianGroup orbifold_homology(const DecoratedGraph& g) {
  require_negative_definite_tree(g.graph());
  return cokernel(relation_system(g).matrix);
}

RatMatrix linking_matrix(const PlumbingGraph& g) {
  require_negative_definite_tree(g);
  RatMatrix inv = rational_inverse(intersection_matrix(g));
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j) inv(i, j) = -inv(i, j);
  return inv;
}

GroupHom projection_hom(const DecoratedGraph& g) {
  AbelianGroup source = orbifold_homology(g);
  AbelianGroup target = discriminant_group(g.graph());
  IntMatrix images(source.rank(), target.rank());
  for (std::size_t k = 0; k < source.rank(); ++k) {
    auto lift = source.generator_lifts().row(k);
    GroupElement img = target.class_of(lift);
    for (std::size_t l = 0; l < target.rank(); ++l) images(k, l) = img.coordinates[l];
  }
  return make_group_hom(std::move(source), std::move(target), std::move(images));
}

std::vector<GroupElement> kernel_generators(const GroupHom& h) {
  return h.source.kernel_generators(h.images, h.target);
}

AbelianGroup kernel_type(const GroupHom& h) {
  return h.source.subgroup(kernel_generators(h));
}

GeneratorSelection select_generators(const DecoratedGraph& g, const VertexId& center) {
  const PlumbingGraph& pg = g.graph();
  require_negative_definite_tree(pg);
  g.require_leaf_decorations();
  if (!pg.has_vertex(center)) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + center + "'");

  GeneratorSelection sel;
  sel.center = center;
  if (pg.vertex_count() <= 2) {
    sel.green = pg.vertex_ids();
  } else {
    if (pg.valence(center) < 2)
      throw Error(ErrorCode::NoInteriorVertex, "center '" + center + "' is not an interior vertex");
    std::set<VertexId> red;
    std::set<VertexId> green{center};
    std::deque<std::pair<VertexId, VertexId>> queue{{center, ""}};  // vertex, parent
    while (!queue.empty()) {
      auto [v, parent] = queue.front();
      queue.pop_front();
      std::vector<VertexId> children;
      for (const auto& n : pg.neighbors(v))
        if (n != parent) children.push_back(n);
      if (children.empty()) continue;
      // One red arrow per interior vertex, to its least child; the rest are green.
      red.insert(children.front());
      for (std::size_t i = 1; i < children.size(); ++i) green.insert(children[i]);
      for (const auto& c : children) queue.emplace_back(c, v);
    }
    sel.green.assign(green.begin(), green.end());
    sel.red.assign(red.begin(), red.end());
  }

  AbelianGroup group = orbifold_homology(g);
  for (const auto& v : sel.green) sel.classes.push_back(group.generator(pg.index_of(v)));
  if (!group.generated_by(sel.classes))
    throw Error(ErrorCode::GenerationFailure, "green vertices do not generate the orbifold discriminant group");
  return sel;
}

}  // namespace orbsplice
