#include "flagstab/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flagstab {

QVector qvec_zero(std::size_t n) { return QVector(n, Rat(0)); }

QVector qvec_unit(std::size_t n, std::size_t i) {
  QVector v(n, Rat(0));
  v.at(i) = 1;
  return v;
}

static void check_same_size(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
}

QVector qvec_add(const QVector& a, const QVector& b) {
  check_same_size(a, b);
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVector qvec_sub(const QVector& a, const QVector& b) {
  check_same_size(a, b);
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVector qvec_neg(const QVector& a) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

QVector qvec_scale(const Rat& c, const QVector& a) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

Rat qvec_dot(const QVector& a, const QVector& b) {
  check_same_size(a, b);
  Rat acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool qvec_is_zero(const QVector& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

bool qvec_less(const QVector& a, const QVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

std::string qvec_to_string(const QVector& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << rat_to_string(a[i]);
  }
  os << ")";
  return os.str();
}

QVector primitive_ray(const QVector& a) {
  if (qvec_is_zero(a)) return a;
  Int den_lcm(1);
  for (const Rat& x : a) {
    Int d = x.get_den();
    Int g = gcd(den_lcm, d);
    den_lcm = den_lcm / g * d;
  }
  Int content(0);
  for (const Rat& x : a) {
    Rat scaled = x * Rat(den_lcm);
    content = gcd(content, scaled.get_num());
  }
  if (content < 0) content = -content;
  Rat factor = Rat(den_lcm) / Rat(content);
  return qvec_scale(factor, a);
}

QVector primitive_line(const QVector& a) {
  QVector p = primitive_ray(a);
  for (const Rat& x : p) {
    if (x > 0) return p;
    if (x < 0) return qvec_neg(p);
  }
  return p;
}

QMatrix QMatrix::zero(std::size_t r, std::size_t c) {
  QMatrix m;
  m.rows.assign(r, qvec_zero(c));
  return m;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m = zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows[i][i] = 1;
  return m;
}

QMatrix QMatrix::from_rows(std::vector<QVector> rows) {
  QMatrix m;
  m.rows = std::move(rows);
  for (const QVector& r : m.rows)
    if (r.size() != m.rows[0].size()) throw std::invalid_argument("ragged matrix rows");
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, std::size_t dim) {
  QMatrix m = zero(dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != dim) throw std::invalid_argument("column size mismatch");
    for (std::size_t i = 0; i < dim; ++i) m.rows[i][j] = cols[j][i];
  }
  return m;
}

QVector QMatrix::column(std::size_t j) const {
  QVector c(nrows());
  for (std::size_t i = 0; i < nrows(); ++i) c[i] = rows[i].at(j);
  return c;
}

QMatrix QMatrix::transposed() const {
  QMatrix t = zero(ncols(), nrows());
  for (std::size_t i = 0; i < nrows(); ++i)
    for (std::size_t j = 0; j < ncols(); ++j) t.rows[j][i] = rows[i][j];
  return t;
}

QVector mat_vec(const QMatrix& m, const QVector& v) {
  if (m.ncols() != v.size()) throw std::invalid_argument("mat_vec size mismatch");
  QVector out(m.nrows(), Rat(0));
  for (std::size_t i = 0; i < m.nrows(); ++i) out[i] = qvec_dot(m.rows[i], v);
  return out;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  if (a.ncols() != b.nrows()) throw std::invalid_argument("mat_mul size mismatch");
  QMatrix out = QMatrix::zero(a.nrows(), b.ncols());
  for (std::size_t i = 0; i < a.nrows(); ++i)
    for (std::size_t k = 0; k < a.ncols(); ++k) {
      if (a.rows[i][k] == 0) continue;
      for (std::size_t j = 0; j < b.ncols(); ++j)
        out.rows[i][j] += a.rows[i][k] * b.rows[k][j];
    }
  return out;
}

QMatrix mat_scale(const Rat& c, const QMatrix& m) {
  QMatrix out = m;
  for (QVector& row : out.rows)
    for (Rat& x : row) x *= c;
  return out;
}

std::vector<std::size_t> rref_in_place(QMatrix& m) {
  std::vector<std::size_t> pivots;
  const std::size_t nr = m.nrows(), nc = m.ncols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t sel = nr;
    for (std::size_t i = row; i < nr; ++i) {
      if (m.rows[i][col] != 0) {
        sel = i;
        break;
      }
    }
    if (sel == nr) continue;
    std::swap(m.rows[row], m.rows[sel]);
    const Rat inv = Rat(1) / m.rows[row][col];
    for (std::size_t j = col; j < nc; ++j) m.rows[row][j] *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == row || m.rows[i][col] == 0) continue;
      const Rat f = m.rows[i][col];
      for (std::size_t j = col; j < nc; ++j) m.rows[i][j] -= f * m.rows[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t matrix_rank(QMatrix m) { return rref_in_place(m).size(); }

std::vector<QVector> nullspace(const QMatrix& m) {
  QMatrix r = m;
  const std::vector<std::size_t> pivots = rref_in_place(r);
  const std::size_t nc = m.ncols();
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    QVector v = qvec_zero(nc);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.rows[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (m.nrows() != b.size()) throw std::invalid_argument("solve size mismatch");
  QMatrix aug = m;
  for (std::size_t i = 0; i < m.nrows(); ++i) aug.rows[i].push_back(b[i]);
  const std::vector<std::size_t> pivots = rref_in_place(aug);
  const std::size_t nc = m.ncols();
  for (std::size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] == nc) return std::nullopt;  // pivot in the rhs column
  QVector x = qvec_zero(nc);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.rows[k][nc];
  return x;
}

QMatrix mat_inverse(const QMatrix& m) {
  const std::size_t n = m.nrows();
  if (n != m.ncols()) throw std::invalid_argument("inverse of non-square matrix");
  QMatrix aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.rows[i].push_back(i == j ? Rat(1) : Rat(0));
  }
  const std::vector<std::size_t> pivots = rref_in_place(aug);
  // Invertible iff all pivots land in the left block.
  if (pivots.size() != n || pivots.back() >= n)
    throw std::invalid_argument("matrix is singular");
  QMatrix inv = QMatrix::zero(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.rows[i][j] = aug.rows[i][n + j];
  return inv;
}

Subspace Subspace::from_rows(std::size_t ambient, std::vector<QVector> rows) {
  for (const QVector& r : rows)
    if (r.size() != ambient) throw std::invalid_argument("subspace row size mismatch");
  QMatrix m = QMatrix::from_rows(rows.empty() ? std::vector<QVector>{} : std::move(rows));
  Subspace s;
  s.ambient = ambient;
  if (m.nrows() == 0) return s;
  const std::size_t rank = rref_in_place(m).size();
  m.rows.resize(rank);
  s.basis = std::move(m);
  return s;
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient = ambient;
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = QMatrix::identity(ambient);
  return s;
}

bool Subspace::contains(const QVector& v) const {
  if (v.size() != ambient) throw std::invalid_argument("subspace ambient mismatch");
  // Reduce v against the RREF basis; membership iff the residue vanishes.
  QVector residue = v;
  for (const QVector& row : basis.rows) {
    std::size_t lead = 0;
    while (lead < ambient && row[lead] == 0) ++lead;
    if (lead == ambient) continue;
    if (residue[lead] == 0) continue;
    const Rat f = residue[lead];  // row has leading 1
    for (std::size_t j = lead; j < ambient; ++j) residue[j] -= f * row[j];
  }
  return qvec_is_zero(residue);
}

bool Subspace::contains_subspace(const Subspace& other) const {
  for (const QVector& row : other.basis.rows)
    if (!contains(row)) return false;
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient == other.ambient && basis == other.basis;
}

bool Subspace::operator<(const Subspace& other) const {
  if (dim() != other.dim()) return dim() < other.dim();
  if (basis.nrows() != other.basis.nrows()) return basis.nrows() < other.basis.nrows();
  for (std::size_t i = 0; i < basis.nrows(); ++i) {
    if (basis.rows[i] != other.basis.rows[i]) return qvec_less(basis.rows[i], other.basis.rows[i]);
  }
  return false;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("subspace ambient mismatch");
  std::vector<QVector> rows = a.basis.rows;
  rows.insert(rows.end(), b.basis.rows.begin(), b.basis.rows.end());
  return Subspace::from_rows(a.ambient, std::move(rows));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("subspace ambient mismatch");
  const std::size_t n = a.ambient;
  // Rows [x | x] for x in basis(a), [y | 0] for y in basis(b). After RREF the
  // rows whose left half vanished carry an intersection basis on the right.
  std::vector<QVector> rows;
  for (const QVector& x : a.basis.rows) {
    QVector r = x;
    r.insert(r.end(), x.begin(), x.end());
    rows.push_back(std::move(r));
  }
  for (const QVector& y : b.basis.rows) {
    QVector r = y;
    QVector zeros = qvec_zero(n);
    r.insert(r.end(), zeros.begin(), zeros.end());
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return Subspace::zero(n);
  QMatrix m = QMatrix::from_rows(std::move(rows));
  rref_in_place(m);
  std::vector<QVector> inter;
  for (const QVector& r : m.rows) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n; ++j)
      if (r[j] != 0) {
        left_zero = false;
        break;
      }
    if (!left_zero) continue;
    QVector right(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
    if (!qvec_is_zero(right)) inter.push_back(std::move(right));
  }
  return Subspace::from_rows(n, std::move(inter));
}

}  // namespace flagstab
