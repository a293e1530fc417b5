#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbsplice/error.hpp"

namespace orbsplice {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a rational in lowest terms with positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Representative of r modulo 1 in [0, 1).
Rational frac_part(const Rational& r);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  template <typename V>
  static Matrix from_rows(std::initializer_list<std::initializer_list<V>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
      std::size_t j = 0;
      for (const auto& v : row) m(i, j++) = T(v);
      ++i;
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  const T& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw Error(ErrorCode::InvalidArgument, "matrix index out of range");
    return data_[i * cols_ + j];
  }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Leading principal minors det(M[0..k, 0..k]) for k = 1, 2, ...; stops after
/// the first zero minor.
std::vector<Integer> leading_principal_minors(const IntMatrix& m);

/// U * M * V == S, with S diagonal, d_1 | d_2 | ..., d_i >= 0, U and V unimodular.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  std::vector<Integer> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Exact inverse of a nonsingular square integer matrix; throws SingularMatrix.
RatMatrix rational_inverse(const IntMatrix& m);

/// A vector of canonical coordinates, torsion entries reduced into [0, d_k).
struct GroupElement {
  std::vector<Integer> coordinates;

  bool is_zero() const;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    return a.coordinates < b.coordinates;
  }
};

/// Finitely generated abelian group Z^m / (relation row span), in the canonical
/// form Z/d_1 + ... + Z/d_k + Z^r with d_1 | ... | d_k and every d_i > 1.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  std::size_t free_rank() const { return free_rank_; }
  /// Number of canonical coordinates (torsion + free).
  std::size_t rank() const { return factors_.size() + free_rank_; }
  /// Number of generators of the source presentation.
  std::size_t generator_count() const { return images_.rows(); }

  /// Row j: coordinates of the j-th source generator.
  const IntMatrix& generator_images() const { return images_; }
  /// Row k: the k-th canonical generator as a combination of source generators.
  const IntMatrix& generator_lifts() const { return lifts_; }

  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }
  std::optional<Integer> order() const;

  GroupElement zero() const;
  GroupElement reduce(std::vector<Integer> coordinates) const;
  GroupElement generator(std::size_t j) const;
  GroupElement canonical_generator(std::size_t k) const;
  /// Class of sum_j combination[j] * e_j.
  GroupElement class_of(std::span<const Integer> combination) const;
  /// A combination of source generators representing x.
  std::vector<Integer> lift(const GroupElement& x) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(const GroupElement& a, const Integer& k) const;
  /// Order of x; throws InvalidArgument for elements of infinite order.
  Integer element_order(const GroupElement& x) const;

  /// All elements, in mixed-radix order. Finite groups only.
  std::vector<GroupElement> elements() const;

  /// G / <gens>, presented on the canonical generators of G.
  AbelianGroup quotient(std::span<const GroupElement> gens) const;
  bool generated_by(std::span<const GroupElement> gens) const;
  bool contains(std::span<const GroupElement> gens, const GroupElement& x) const;
  /// Presentation of the subgroup <gens>, with gens as its source generators.
  AbelianGroup subgroup(std::span<const GroupElement> gens) const;

  /// Generators of the kernel of the homomorphism sending canonical generator k
  /// of this group to row k of images, read in target's canonical coordinates.
  std::vector<GroupElement> kernel_generators(const IntMatrix& images,
                                              const AbelianGroup& target) const;

  /// Abstract isomorphism: equal invariant factors and free rank.
  bool isomorphic_to(const AbelianGroup& other) const {
    return factors_ == other.factors_ && free_rank_ == other.free_rank_;
  }

  friend AbelianGroup cokernel(const IntMatrix& relations, std::size_t generators);

 private:
  std::vector<Integer> factors_;
  std::size_t free_rank_ = 0;
  IntMatrix images_;
  IntMatrix lifts_;
};

/// Z^generators / (row span of relations). relations.cols() must equal
/// generators unless relations has no rows.
AbelianGroup cokernel(const IntMatrix& relations, std::size_t generators);
inline AbelianGroup cokernel(const IntMatrix& relations) {
  return cokernel(relations, relations.cols());
}

std::string format_group(const AbelianGroup& g);

}  // namespace orbsplice
