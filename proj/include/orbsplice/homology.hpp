#pragma once

#include <vector>

#include "orbsplice/exactlin.hpp"
#include "orbsplice/graphs.hpp"

namespace orbsplice {

/// Row i is n_i times row i of the intersection matrix.
struct RelationSystem {
  IntMatrix matrix;
  std::vector<std::int64_t> weights;
  std::vector<VertexId> vertex_order;
};

RelationSystem relation_system(const DecoratedGraph& g);

/// Homomorphism between canonical presentations; row k of images is the
/// image of the k-th canonical generator of source.
struct GroupHom {
  AbelianGroup source;
  AbelianGroup target;
  IntMatrix images;

  GroupElement apply(const GroupElement& x) const;
  bool is_surjective() const;
};

/// Checks that every source relation maps to zero; throws Internal otherwise.
GroupHom make_group_hom(AbelianGroup source, AbelianGroup target, IntMatrix images);

/// D(Gamma): cokernel of the intersection matrix, generators e_j in vertex order.
AbelianGroup discriminant_group(const PlumbingGraph& g);
/// D(Gamma*): cokernel of the weight-scaled intersection matrix.
AbelianGroup orbifold_homology(const DecoratedGraph& g);
/// -(intersection matrix)^-1.
RatMatrix linking_matrix(const PlumbingGraph& g);
/// The surjection D(Gamma*) -> D(Gamma) sending e_j to e_j.
GroupHom projection_hom(const DecoratedGraph& g);

std::vector<GroupElement> kernel_generators(const GroupHom& h);
/// Presentation of ker h, generated by kernel_generators(h).
AbelianGroup kernel_type(const GroupHom& h);

struct GeneratorSelection {
  VertexId center;
  std::vector<VertexId> green;  // canonical order
  std::vector<VertexId> red;
  std::vector<GroupElement> classes;  // classes of the green vertices in D(Gamma*)
};

/// Red/green arrow orientation away from center; the green vertices generate
/// D(Gamma*). Graphs with at most two vertices return every vertex.
GeneratorSelection select_generators(const DecoratedGraph& g, const VertexId& center);

}  // namespace orbsplice
