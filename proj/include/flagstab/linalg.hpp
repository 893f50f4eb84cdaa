#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flagstab/rational.hpp"

namespace flagstab {

using QVector = std::vector<Rat>;

QVector qvec_zero(std::size_t n);
QVector qvec_unit(std::size_t n, std::size_t i);
QVector qvec_add(const QVector& a, const QVector& b);
QVector qvec_sub(const QVector& a, const QVector& b);
QVector qvec_neg(const QVector& a);
QVector qvec_scale(const Rat& c, const QVector& a);
Rat qvec_dot(const QVector& a, const QVector& b);
bool qvec_is_zero(const QVector& a);
// Lexicographic; used wherever a deterministic total order is needed.
bool qvec_less(const QVector& a, const QVector& b);
struct QVectorLess {
  bool operator()(const QVector& a, const QVector& b) const {
    return qvec_less(a, b);
  }
};
std::string qvec_to_string(const QVector& a);

// Scales by the positive rational that makes all entries integer with
// content 1. Zero vectors pass through. Preserves the direction of the ray,
// so inequality normals keep their meaning.
QVector primitive_ray(const QVector& a);
// primitive_ray plus a sign flip making the first nonzero entry positive.
// Only for objects where v and -v are the same thing (hyperplanes, rows of
// linear equations).
QVector primitive_line(const QVector& a);

// Dense rational matrix, row-major.
struct QMatrix {
  std::vector<QVector> rows;

  std::size_t nrows() const { return rows.size(); }
  std::size_t ncols() const { return rows.empty() ? 0 : rows[0].size(); }

  static QMatrix zero(std::size_t r, std::size_t c);
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(std::vector<QVector> rows);
  // Stacks the given vectors as columns.
  static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t dim);

  QVector column(std::size_t j) const;
  QMatrix transposed() const;
  bool operator==(const QMatrix& other) const { return rows == other.rows; }
};

QVector mat_vec(const QMatrix& m, const QVector& v);
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
QMatrix mat_scale(const Rat& c, const QMatrix& m);

// In-place reduced row echelon form; returns the pivot column indices (one
// per nonzero row, increasing). Rows below the rank come out zero.
std::vector<std::size_t> rref_in_place(QMatrix& m);
std::size_t matrix_rank(QMatrix m);
// Canonical nullspace basis: one vector per free column, RREF-derived,
// ordered by free column index.
std::vector<QVector> nullspace(const QMatrix& m);
// Solves m x = b exactly; empty when inconsistent. Of the solutions, returns
// the one with zero free variables.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);
// Inverse of a square matrix; throws std::invalid_argument when singular.
QMatrix mat_inverse(const QMatrix& m);

// Linear subspace of Q^n in canonical form: basis rows are the RREF of any
// spanning set, zero rows dropped. Two subspaces are equal iff their
// canonical bases are equal componentwise.
struct Subspace {
  std::size_t ambient = 0;
  QMatrix basis;  // RREF, no zero rows

  static Subspace from_rows(std::size_t ambient, std::vector<QVector> rows);
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t dim() const { return basis.nrows(); }
  bool contains(const QVector& v) const;
  bool contains_subspace(const Subspace& other) const;
  bool is_full() const { return dim() == ambient; }
  bool operator==(const Subspace& other) const;
  bool operator<(const Subspace& other) const;  // deterministic ordering
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
// Zassenhaus: one RREF of the doubled block matrix yields the intersection.
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

}  // namespace flagstab
