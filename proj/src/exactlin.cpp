#include "orbsplice/exactlin.hpp"

#include <algorithm>
#include <utility>

namespace orbsplice {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::UnknownVertexInEdge: return "UnknownVertexInEdge";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NotBlowDownable: return "NotBlowDownable";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorCode::DecoratedInterior: return "DecoratedInterior";
    case ErrorCode::NotALeaf: return "NotALeaf";
    case ErrorCode::NoInteriorVertex: return "NoInteriorVertex";
    case ErrorCode::GenerationFailure: return "GenerationFailure";
    case ErrorCode::NoNodes: return "NoNodes";
    case ErrorCode::ConditionsFail: return "ConditionsFail";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational frac_part(const Rational& r) {
  Integer n;
  mpz_fdiv_r(n.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return make_rational(n, r.get_den());
}

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Integer> leading_principal_minors(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "minors of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Integer> minors;
  IntMatrix a = m;
  Integer prev = 1;
  // Without pivoting, the k-th Bareiss pivot is the k-th leading principal minor.
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(a(k, k));
    if (a(k, k) == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return minors;
}

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

namespace {

struct SmithState {
  IntMatrix a, u, v, v_inv;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    for (std::size_t c = 0; c < v_inv.cols(); ++c) std::swap(v_inv(i, c), v_inv(j, c));
  }
  // row_dst += q * row_src
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) += q * a(src, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) += q * u(src, c);
  }
  // col_dst += q * col_src; the inverse picks up row_src -= q * row_dst
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) += q * a(r, src);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, dst) += q * v(r, src);
    for (std::size_t c = 0; c < v_inv.cols(); ++c) v_inv(src, c) -= q * v_inv(dst, c);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }

  // Smallest nonzero |entry| in the trailing block, first in row-major order.
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (a(i, j) == 0) continue;
        Integer mag = abs(a(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    return found;
  }
};

SmithState smith_full(const IntMatrix& m) {
  SmithState st{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()),
                IntMatrix::identity(m.cols())};
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    std::size_t pi = 0, pj = 0;
    if (!st.find_pivot(t, pi, pj)) break;
    st.swap_rows(t, pi);
    st.swap_cols(t, pj);
    for (;;) {
      bool clean = true;
      const Integer pivot = st.a(t, t);
      for (std::size_t i = t + 1; i < r; ++i) {
        if (st.a(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), st.a(i, t).get_mpz_t(), pivot.get_mpz_t());
        if (q != 0) st.add_row(i, t, -q);
        if (st.a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (st.a(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), st.a(t, j).get_mpz_t(), pivot.get_mpz_t());
        if (q != 0) st.add_col(j, t, -q);
        if (st.a(t, j) != 0) clean = false;
      }
      if (!clean) {
        st.find_pivot(t, pi, pj);
        st.swap_rows(t, pi);
        st.swap_cols(t, pj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!mpz_divisible_p(st.a(i, j).get_mpz_t(), pivot.get_mpz_t())) {
            st.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (st.a(t, t) < 0) st.negate_row(t);
  }
  return st;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  if (m.empty()) throw Error(ErrorCode::InvalidArgument, "smith normal form of an empty matrix");
  SmithState st = smith_full(m);
  return {std::move(st.u), std::move(st.a), std::move(st.v)};
}

RatMatrix rational_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = to_rational(m);
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    const Rational piv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

bool GroupElement::is_zero() const {
  return std::all_of(coordinates.begin(), coordinates.end(), [](const Integer& x) { return x == 0; });
}

AbelianGroup cokernel(const IntMatrix& relations, std::size_t generators) {
  if (relations.rows() > 0 && relations.cols() != generators)
    throw Error(ErrorCode::InvalidArgument, "relation width does not match generator count");
  AbelianGroup g;
  const std::size_t m = generators;
  std::vector<Integer> diag(m, 0);
  IntMatrix v = IntMatrix::identity(m);
  IntMatrix v_inv = IntMatrix::identity(m);
  if (relations.rows() > 0 && m > 0) {
    SmithState st = smith_full(relations);
    for (std::size_t k = 0; k < std::min(relations.rows(), m); ++k) diag[k] = st.a(k, k);
    v = std::move(st.v);
    v_inv = std::move(st.v_inv);
  }
  // Coordinates with d = 1 vanish; the chain puts torsion before free.
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < m; ++k) {
    if (diag[k] == 1) continue;
    kept.push_back(k);
    if (diag[k] == 0)
      ++g.free_rank_;
    else
      g.factors_.push_back(diag[k]);
  }
  g.images_ = IntMatrix(m, kept.size());
  g.lifts_ = IntMatrix(kept.size(), m);
  for (std::size_t c = 0; c < kept.size(); ++c) {
    const std::size_t k = kept[c];
    for (std::size_t j = 0; j < m; ++j) {
      Integer x = v(j, k);
      if (diag[k] != 0) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), diag[k].get_mpz_t());
      g.images_(j, c) = x;
      g.lifts_(c, j) = v_inv(k, j);
    }
  }
  return g;
}

std::optional<Integer> AbelianGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

GroupElement AbelianGroup::zero() const { return GroupElement{std::vector<Integer>(rank(), 0)}; }

GroupElement AbelianGroup::reduce(std::vector<Integer> coordinates) const {
  if (coordinates.size() != rank()) throw Error(ErrorCode::InvalidArgument, "coordinate vector length mismatch");
  for (std::size_t k = 0; k < factors_.size(); ++k)
    mpz_fdiv_r(coordinates[k].get_mpz_t(), coordinates[k].get_mpz_t(), factors_[k].get_mpz_t());
  return GroupElement{std::move(coordinates)};
}

GroupElement AbelianGroup::generator(std::size_t j) const {
  if (j >= generator_count()) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
  auto r = images_.row(j);
  return GroupElement{std::vector<Integer>(r.begin(), r.end())};
}

GroupElement AbelianGroup::canonical_generator(std::size_t k) const {
  if (k >= rank()) throw Error(ErrorCode::InvalidArgument, "canonical generator index out of range");
  GroupElement e = zero();
  e.coordinates[k] = 1;
  return e;
}

GroupElement AbelianGroup::class_of(std::span<const Integer> combination) const {
  if (combination.size() != generator_count())
    throw Error(ErrorCode::InvalidArgument, "combination length mismatch");
  std::vector<Integer> c(rank(), 0);
  for (std::size_t j = 0; j < combination.size(); ++j) {
    if (combination[j] == 0) continue;
    for (std::size_t k = 0; k < rank(); ++k) c[k] += combination[j] * images_(j, k);
  }
  return reduce(std::move(c));
}

std::vector<Integer> AbelianGroup::lift(const GroupElement& x) const {
  std::vector<Integer> c(generator_count(), 0);
  for (std::size_t k = 0; k < rank(); ++k) {
    if (x.coordinates[k] == 0) continue;
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += x.coordinates[k] * lifts_(k, j);
  }
  return c;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  std::vector<Integer> c(rank());
  for (std::size_t k = 0; k < rank(); ++k) c[k] = a.coordinates.at(k) + b.coordinates.at(k);
  return reduce(std::move(c));
}

GroupElement AbelianGroup::negate(const GroupElement& a) const { return scale(a, -1); }

GroupElement AbelianGroup::scale(const GroupElement& a, const Integer& s) const {
  std::vector<Integer> c(rank());
  for (std::size_t k = 0; k < rank(); ++k) c[k] = a.coordinates.at(k) * s;
  return reduce(std::move(c));
}

Integer AbelianGroup::element_order(const GroupElement& x) const {
  for (std::size_t k = factors_.size(); k < rank(); ++k)
    if (x.coordinates[k] != 0) throw Error(ErrorCode::InvalidArgument, "element of infinite order");
  Integer ord = 1;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    Integer g = gcd(factors_[k], x.coordinates[k]);
    Integer part = factors_[k] / g;
    ord = lcm(ord, part);
  }
  return ord;
}

std::vector<GroupElement> AbelianGroup::elements() const {
  if (!is_finite()) throw Error(ErrorCode::InvalidArgument, "cannot enumerate an infinite group");
  std::vector<GroupElement> out;
  GroupElement cur = zero();
  for (;;) {
    out.push_back(cur);
    std::size_t k = 0;
    while (k < factors_.size()) {
      cur.coordinates[k] += 1;
      if (cur.coordinates[k] < factors_[k]) break;
      cur.coordinates[k] = 0;
      ++k;
    }
    if (k == factors_.size()) break;
  }
  return out;
}

namespace {

// Rows of U spanning the left kernel of m (vectors x with x * m == 0).
IntMatrix left_kernel(const IntMatrix& m) {
  if (m.rows() == 0) return IntMatrix(0, 0);
  if (m.cols() == 0) return IntMatrix::identity(m.rows());
  SmithState st = smith_full(m);
  std::size_t rank = 0;
  while (rank < std::min(m.rows(), m.cols()) && st.a(rank, rank) != 0) ++rank;
  IntMatrix k(m.rows() - rank, m.rows());
  for (std::size_t i = rank; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) k(i - rank, j) = st.u(i, j);
  return k;
}

}  // namespace

AbelianGroup AbelianGroup::quotient(std::span<const GroupElement> gens) const {
  IntMatrix rel(0, rank());
  for (const auto& g : gens) rel.append_row(g.coordinates);
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    std::vector<Integer> row(rank(), 0);
    row[k] = factors_[k];
    rel.append_row(row);
  }
  return cokernel(rel, rank());
}

bool AbelianGroup::generated_by(std::span<const GroupElement> gens) const {
  return quotient(gens).is_trivial();
}

bool AbelianGroup::contains(std::span<const GroupElement> gens, const GroupElement& x) const {
  AbelianGroup q = quotient(gens);
  return q.class_of(x.coordinates).is_zero();
}

AbelianGroup AbelianGroup::subgroup(std::span<const GroupElement> gens) const {
  const std::size_t s = gens.size();
  IntMatrix stacked(0, rank());
  for (const auto& g : gens) stacked.append_row(g.coordinates);
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    std::vector<Integer> row(rank(), 0);
    row[k] = factors_[k];
    stacked.append_row(row);
  }
  // Relations among the gens are the gens-part of the left kernel.
  IntMatrix relations(0, s);
  if (stacked.rows() > 0) {
    if (rank() == 0) {
      relations = IntMatrix::identity(s);
    } else {
      IntMatrix kernel = left_kernel(stacked);
      for (std::size_t i = 0; i < kernel.rows(); ++i) {
        auto r = kernel.row(i);
        relations.append_row(r.subspan(0, s));
      }
    }
  }
  return cokernel(relations, s);
}

std::vector<GroupElement> AbelianGroup::kernel_generators(const IntMatrix& images,
                                                          const AbelianGroup& target) const {
  if (images.rows() != rank() || (images.rows() > 0 && images.cols() != target.rank()))
    throw Error(ErrorCode::InvalidArgument, "homomorphism image matrix has the wrong shape");
  const std::size_t n = rank();
  std::vector<GroupElement> out;
  if (n == 0) return out;
  if (target.rank() == 0) {
    for (std::size_t k = 0; k < n; ++k) out.push_back(canonical_generator(k));
    return out;
  }
  IntMatrix stacked = images;
  for (std::size_t k = 0; k < target.factors_.size(); ++k) {
    std::vector<Integer> row(target.rank(), 0);
    row[k] = target.factors_[k];
    stacked.append_row(row);
  }
  IntMatrix kernel = left_kernel(stacked);
  for (std::size_t i = 0; i < kernel.rows(); ++i) {
    auto r = kernel.row(i);
    GroupElement x = reduce(std::vector<Integer>(r.begin(), r.begin() + n));
    if (!x.is_zero()) out.push_back(std::move(x));
  }
  return out;
}

std::string format_group(const AbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::string s;
  for (const auto& d : g.invariant_factors()) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  for (std::size_t i = 0; i < g.free_rank(); ++i) {
    if (!s.empty()) s += " + ";
    s += "Z";
  }
  return s;
}

}  // namespace orbsplice
