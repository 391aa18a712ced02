// Sparse matrices and vectors over LaurentPoly, the single-site operator set
// and its tensor embedding.  Matrices act on column vectors: entry (r, c) maps
// basis state c to basis state r.  Rows and columns are 0-based offsets, i.e.
// the canonical configuration index minus one.
#ifndef ASEP2_OPERATORS_HPP
#define ASEP2_OPERATORS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asep2/config.hpp"
#include "asep2/laurent.hpp"

namespace asep2 {

/// A 3x3 matrix in the local basis order A, 0, B.
struct SiteOperator {
  std::array<std::array<LaurentPoly, 3>, 3> m{};

  static SiteOperator unit(SiteState row, SiteState col);  // |row)(col|
  static SiteOperator identity();

  const LaurentPoly& operator()(SiteState r, SiteState c) const { return m[code(r)][code(c)]; }

  friend SiteOperator operator+(const SiteOperator& a, const SiteOperator& b);
  friend SiteOperator operator-(const SiteOperator& a, const SiteOperator& b);
  friend SiteOperator operator*(const SiteOperator& a, const SiteOperator& b);
  friend bool operator==(const SiteOperator& a, const SiteOperator& b) { return a.m == b.m; }
  bool is_zero() const;
};

/// Creation (a+, b+), annihilation (a-, b-), exchange (c+-) and projectors.
struct SiteOps {
  SiteOperator a_plus, a_minus, b_plus, b_minus, c_plus, c_minus;
  SiteOperator a_hat, v_hat, b_hat, one;
};
const SiteOps& site_ops();

struct EntryDiff {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  LaurentPoly lhs;
  LaurentPoly rhs;
};

class SparseQMatrix {
 public:
  using Row = std::map<std::uint32_t, LaurentPoly>;

  explicit SparseQMatrix(std::uint64_t dim);
  static SparseQMatrix identity(std::uint64_t dim);
  static SparseQMatrix diagonal(const std::vector<LaurentPoly>& entries);

  std::uint32_t dim() const { return dim_; }
  std::size_t nnz() const;
  LaurentPoly get(std::uint32_t r, std::uint32_t c) const;
  void set(std::uint32_t r, std::uint32_t c, LaurentPoly v);
  void add_to(std::uint32_t r, std::uint32_t c, const LaurentPoly& v);
  const Row& row(std::uint32_t r) const { return rows_[r]; }

  bool is_zero() const { return nnz() == 0; }
  bool is_diagonal() const;

  SparseQMatrix& operator+=(const SparseQMatrix& rhs);
  SparseQMatrix& operator-=(const SparseQMatrix& rhs);
  friend SparseQMatrix operator+(SparseQMatrix a, const SparseQMatrix& b) { return a += b; }
  friend SparseQMatrix operator-(SparseQMatrix a, const SparseQMatrix& b) { return a -= b; }
  friend SparseQMatrix operator*(const SparseQMatrix& a, const SparseQMatrix& b);
  friend bool operator==(const SparseQMatrix& a, const SparseQMatrix& b);

  SparseQMatrix scaled(const LaurentPoly& s) const;
  SparseQMatrix transpose() const;
  /// Applies f to every stored entry, dropping entries that become zero.
  SparseQMatrix map_entries(const std::function<LaurentPoly(const LaurentPoly&)>& f) const;

  /// Row-major iteration over nonzero entries.
  template <typename F>
  void for_each(F&& f) const {
    for (std::uint32_t r = 0; r < dim_; ++r)
      for (const auto& [c, v] : rows_[r]) f(r, c, v);
  }

 private:
  void check_index(std::uint32_t r, std::uint32_t c) const;
  void check_same_dim(const SparseQMatrix& rhs) const;

  std::uint32_t dim_;
  std::vector<Row> rows_;
};

SparseQMatrix commutator(const SparseQMatrix& a, const SparseQMatrix& b);

/// First differing entry in row-major order, if any.
std::optional<EntryDiff> first_difference(const SparseQMatrix& a, const SparseQMatrix& b);

/// D A D^-1 for D diagonal with every diagonal entry a monomial.  Throws
/// std::invalid_argument otherwise.
SparseQMatrix conjugate_by_diagonal(const SparseQMatrix& d, const SparseQMatrix& a);

/// Inverse of a diagonal matrix of monomials.
SparseQMatrix diagonal_inverse(const SparseQMatrix& d);

/// u acting on site k of an L-site lattice, identity elsewhere.
SparseQMatrix embed(const SiteOperator& u, int k, int L);

class QVector {
 public:
  explicit QVector(std::uint64_t dim);
  std::uint32_t dim() const { return dim_; }
  LaurentPoly get(std::uint32_t i) const;
  void set(std::uint32_t i, LaurentPoly v);
  void add_to(std::uint32_t i, const LaurentPoly& v);
  const std::map<std::uint32_t, LaurentPoly>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  QVector scaled(const LaurentPoly& s) const;
  friend bool operator==(const QVector& a, const QVector& b) { return a.dim_ == b.dim_ && a.entries_ == b.entries_; }

 private:
  std::uint32_t dim_;
  std::map<std::uint32_t, LaurentPoly> entries_;
};

/// <v| A, v read as a row vector.
QVector row_times(const QVector& v, const SparseQMatrix& a);
/// A |v>, v read as a column vector.
QVector apply(const SparseQMatrix& a, const QVector& v);
/// sum_i w_i v_i, no conjugation.
LaurentPoly inner(const QVector& w, const QVector& v);

QVector basis_vector(const Configuration& c);
QVector summation_vector(int L);
QVector sector_summation_vector(int L, Sector sector);
/// Tensor product of single-site vectors, site 1 first.
QVector product_vector(const std::vector<std::array<LaurentPoly, 3>>& factors);

/// diag(f(eta)) over all configurations of L sites.
SparseQMatrix diagonal_lift(const std::function<LaurentPoly(const Configuration&)>& f, int L);

/// One line per nonzero entry: "row col polynomial", 1-based canonical indices.
std::string dump(const SparseQMatrix& a);

}  // namespace asep2

#endif  // ASEP2_OPERATORS_HPP
