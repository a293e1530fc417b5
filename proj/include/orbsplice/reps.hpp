#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "orbsplice/exactlin.hpp"
#include "orbsplice/graphs.hpp"
#include "orbsplice/homology.hpp"

namespace orbsplice {

/// Element of (Q/Z)^t, every entry kept in [0, 1).
class QmodZVector {
 public:
  QmodZVector() = default;
  explicit QmodZVector(std::vector<Rational> entries);
  static QmodZVector zero(std::size_t length) { return QmodZVector(std::vector<Rational>(length)); }

  std::size_t size() const { return entries_.size(); }
  const std::vector<Rational>& entries() const { return entries_; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  bool is_zero() const;

  QmodZVector operator+(const QmodZVector& other) const;
  QmodZVector scaled(const Integer& k) const;

  friend bool operator==(const QmodZVector&, const QmodZVector&) = default;
  friend bool operator<(const QmodZVector& a, const QmodZVector& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<Rational> entries_;
};

std::string format_qmodz(const QmodZVector& v);

/// e -> (e.e_w)_w over the leaves w, reduced mod 1. Images are stored per
/// canonical generator of the group.
struct DiagonalRepresentation {
  std::vector<VertexId> leaf_order;
  AbelianGroup group;
  std::vector<QmodZVector> images;

  QmodZVector image_of(const GroupElement& x) const;
  /// Trivial kernel, decided by a kernel computation in (Z/L)^t.
  bool is_faithful() const;
};

DiagonalRepresentation diagonal_rep(const PlumbingGraph& g);
/// e -> ((e.e_w) / n_w)_w on D(Gamma*). Weights must sit on leaves.
DiagonalRepresentation orbifold_diagonal_rep(const DecoratedGraph& g);

/// Raises coordinate w to the n_w-th power; additively, multiplies entry w by n_w.
struct PowerMap {
  std::vector<std::int64_t> exponents;

  QmodZVector apply(const QmodZVector& v) const;
};

PowerMap power_map(const DecoratedGraph& g);

struct SquareWitness {
  std::size_t generator = 0;
  QmodZVector power_of_orbifold_image;  // N(rho*(x))
  QmodZVector image_of_projection;      // rho(Phi(x))
};

struct SquareCheck {
  bool pass = true;
  std::size_t generators_checked = 0;
  std::vector<SquareWitness> failures;
};

/// N(rho*(x)) == rho(Phi(x)) on every canonical generator x of D(Gamma*).
SquareCheck power_map_square_check(const DecoratedGraph& g);

using MonomialExponent = std::map<VertexId, std::int64_t>;

/// Class in D(Gamma) of sum_w a_w e_w.
struct Character {
  GroupElement value;

  bool is_trivial() const { return value.is_zero(); }
  friend bool operator==(const Character&, const Character&) = default;
  friend bool operator<(const Character& a, const Character& b) { return a.value < b.value; }
};

Character monomial_character(const MonomialExponent& exponents, const PlumbingGraph& g);
/// Same, with a precomputed D(Gamma).
Character monomial_character(const MonomialExponent& exponents, const PlumbingGraph& g,
                             const AbelianGroup& discriminant);

}  // namespace orbsplice
