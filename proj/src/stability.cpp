#include "flagstab/stability.hpp"

#include <stdexcept>
#include <string>

#include "flagstab/lp.hpp"

namespace flagstab {
namespace {

void require_strictly_dominant(const RootSystem& rs, const QVector& chi) {
  if (static_cast<int>(chi.size()) != rs.rank)
    throw std::invalid_argument("chi: dimension mismatch");
  QVector fund = simple_to_fundamental(rs, chi);
  for (int i = 0; i < rs.rank; ++i)
    if (fund[i] <= 0)
      throw std::invalid_argument(
          "chi lies on or beyond the chamber wall of simple root " +
          std::to_string(i + 1) + "; a strictly dominant weight is required");
}

bool in_closed_chamber(const RootSystem& rs, const QVector& x) {
  return is_dominant(rs, x);
}

}  // namespace

Rat mumford_mu(const RootSystem& rs, const QVector& chi, const QMatrix& w,
               const QVector& lambda) {
  require_strictly_dominant(rs, chi);
  if (static_cast<int>(lambda.size()) != rs.rank)
    throw std::invalid_argument("lambda: dimension mismatch");
  if (!in_closed_chamber(rs, lambda))
    throw std::invalid_argument("lambda must lie in the closed chamber");
  return inner(rs, mat_vec(w, chi), lambda);
}

bool is_semistable(const RootSystem& rs, const QVector& chi,
                   const QMatrix& w) {
  require_strictly_dominant(rs, chi);
  std::vector<QVector> negatives;
  for (int i = 0; i < rs.rank; ++i)
    negatives.push_back(qvec_neg(rs.simple_root(i)));
  return cone_member(mat_vec(w, chi), negatives).inside;
}

std::vector<int> semistable_set(const WeylGroup& wg, const QVector& chi) {
  const RootSystem& rs = wg.root_system();
  require_strictly_dominant(rs, chi);
  std::vector<int> out;
  for (const WeylElement& e : wg.elements()) {
    QVector image = mat_vec(e.matrix, chi);
    bool ok = true;
    for (const Rat& c : image)
      if (c > 0) ok = false;
    if (ok) out.push_back(e.index);
  }
  return out;
}

int unstable_codimension(const WeylGroup& wg, const QVector& chi) {
  const RootSystem& rs = wg.root_system();
  require_strictly_dominant(rs, chi);
  std::vector<int> wst = semistable_set(wg, chi);
  std::vector<bool> stable(wg.order(), false);
  for (int idx : wst) stable[idx] = true;
  int max_unstable = -1;
  for (const WeylElement& e : wg.elements())
    if (!stable[e.index] && e.length > max_unstable)
      max_unstable = e.length;
  if (max_unstable < 0)
    throw std::logic_error("unstable locus is empty; identity should never "
                           "be semistable");
  return wg.longest().length - max_unstable;
}

ConeH git_cone(const WeylGroup& wg, const QVector& chi) {
  const RootSystem& rs = wg.root_system();
  require_strictly_dominant(rs, chi);
  std::vector<QVector> normals;
  for (int i = 0; i < rs.rank; ++i) normals.push_back(rs.gram.rows[i]);
  for (const WeylElement& e : wg.elements()) {
    QMatrix inv = mat_inverse(e.matrix);
    QVector pre = mat_vec(inv, chi);
    bool chamber_image = true;
    for (const Rat& c : pre)
      if (c < 0) chamber_image = false;
    if (!chamber_image) continue;
    for (int i = 0; i < rs.rank; ++i) normals.push_back(inv.rows[i]);
  }
  return ConeH::make(rs.rank, normals);
}

std::vector<Rat> fundamental_weight_margins(const RootSystem& rs) {
  if (rs.components.size() != 1)
    throw std::invalid_argument(
        "fundamental_weight_margins: an irreducible system is required");
  std::vector<Rat> out;
  for (int i = 0; i < rs.rank; ++i) {
    Rat margin = norm2(rs, rs.fundamental_weights[i]) -
                 rs.gram.rows[i][i] / 2;
    out.push_back(margin);
  }
  return out;
}

StabilityReport stability_report(const WeylGroup& wg, const QVector& chi) {
  StabilityReport rep;
  rep.chi = chi;
  rep.wst = semistable_set(wg, chi);
  rep.unstable_codim = unstable_codimension(wg, chi);
  rep.sigma = git_cone(wg, chi);
  rep.has_type_a_factor = false;
  for (const ComponentSpec& c : wg.root_system().components)
    if (c.family == 'A') rep.has_type_a_factor = true;
  return rep;
}

}  // namespace flagstab
