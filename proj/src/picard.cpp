#include "flagstab/picard.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "flagstab/parallel.hpp"
#include "flagstab/stability.hpp"

namespace flagstab {

namespace {

void require_strictly_dominant(const RootSystem& rs, const QVector& chi) {
  if (static_cast<int>(chi.size()) != rs.rank || !is_strictly_dominant(rs, chi)) {
    throw std::invalid_argument("chi must be strictly dominant");
  }
}

// Condition (n, v mu0) + (n, mu1) = 0 as one row on the stacked vector
// (mu0, mu1), with the pairing taken in the invariant form.
QVector constraint_row(const RootSystem& rs, const QMatrix& v, const QVector& n) {
  const QVector gn = mat_vec(rs.gram, n);
  const QVector left = mat_vec(v.transposed(), gn);
  QVector row;
  row.reserve(2 * rs.rank);
  for (const Rat& x : left) row.push_back(x);
  for (const Rat& x : gn) row.push_back(x);
  return row;
}

}  // namespace

PicardCertificate assemble_constraints(const WeylGroup& wg, const QVector& chi) {
  const RootSystem& rs = wg.root_system();
  require_strictly_dominant(rs, chi);

  PicardCertificate cert;
  cert.chi = chi;

  const std::vector<SaturatedSubsystem> sats = enumerate_saturated(rs);
  const int w0_inv = wg.inverse(wg.longest().index);
  const std::vector<int> semistable = semistable_set(wg, chi);

  cert.per_w.resize(semistable.size());
  parallel_for(semistable.size(), [&](std::size_t k) {
    PicardConstraintRecord& rec = cert.per_w[k];
    rec.w_index = wg.multiply(semistable[k], w0_inv);
    rec.profile = span_profile(wg, rec.w_index, chi, sats);
    if (!rec.profile.is_full()) {
      rec.complement = nullspace(mat_mul(rec.profile.basis, rs.gram));
    }
  });

  std::set<QVector, QVectorLess> rows;
  for (std::size_t k = 0; k < semistable.size(); ++k) {
    const QMatrix& v = wg.element(semistable[k]).matrix;
    for (const QVector& n : cert.per_w[k].complement) {
      rows.insert(primitive_line(constraint_row(rs, v, n)));
    }
  }

  cert.constraints = QMatrix::from_rows(
      std::vector<QVector>(rows.begin(), rows.end()));
  return cert;
}

PicardCertificate picard_certificate(const WeylGroup& wg, const QVector& chi) {
  const RootSystem& rs = wg.root_system();
  PicardCertificate cert = assemble_constraints(wg, chi);
  const int dim = 2 * rs.rank;
  if (cert.constraints.nrows() == 0) {
    cert.nullspace_basis = QMatrix::identity(dim);
    cert.rank = dim;
  } else {
    cert.nullspace_basis = QMatrix::from_rows(nullspace(cert.constraints));
    cert.rank = dim - matrix_rank(cert.constraints);
  }
  for (const ComponentSpec& comp : rs.components) {
    if (comp.family == 'A') cert.an_caveat = true;
  }
  return cert;
}

int picard_rank(const WeylGroup& wg, const QVector& chi) {
  return picard_certificate(wg, chi).rank;
}

Subspace open_cell_constraints(const WeylGroup& wg, const QVector& chi) {
  const RootSystem& rs = wg.root_system();
  require_strictly_dominant(rs, chi);
  const std::vector<SaturatedSubsystem> sats = enumerate_saturated(rs);
  const QVector w0chi = mat_vec(wg.longest().matrix, chi);
  Subspace out = Subspace::full(rs.rank);
  for (int i : spans_containing(w0chi, sats)) {
    out = subspace_intersect(out, sats[i].span);
  }
  return out;
}

}  // namespace flagstab
