#include "flagstab/cones.hpp"

#include <algorithm>
#include <set>

namespace flagstab {

namespace {

constexpr std::size_t kDualDimGuard = 8;

std::vector<QVector> dedup_sorted(std::vector<QVector> vecs) {
  std::sort(vecs.begin(), vecs.end(), qvec_less);
  vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());
  return vecs;
}

// All size-k index subsets of {0..n-1}, visited in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k == 0) {
    fn(idx);
    return;
  }
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) break;
      if (i == 0) return;
    }
    if (idx[i] == i + n - k) return;
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

ConeH ConeH::make(std::size_t dim, std::vector<QVector> normals) {
  ConeH c;
  c.dim = dim;
  std::vector<QVector> prim;
  prim.reserve(normals.size());
  for (const QVector& n : normals) {
    if (n.size() != dim) throw std::invalid_argument("cone normal dimension mismatch");
    QVector p = primitive_ray(n);
    if (!qvec_is_zero(p)) prim.push_back(std::move(p));
  }
  c.normals = dedup_sorted(std::move(prim));
  return c;
}

bool ConeH::contains(const QVector& x) const {
  for (const QVector& n : normals)
    if (qvec_dot(n, x) < 0) return false;
  return true;
}

bool ConeH::contains_strictly(const QVector& x) const {
  for (const QVector& n : normals)
    if (qvec_dot(n, x) <= 0) return false;
  return true;
}

AffCone AffCone::make(QVector vertex, std::vector<QVector> generators) {
  AffCone c;
  c.vertex = std::move(vertex);
  for (const QVector& g : generators) {
    if (g.size() != c.vertex.size()) throw std::invalid_argument("affine cone generator mismatch");
    if (qvec_is_zero(g)) continue;
    if (std::find(c.generators.begin(), c.generators.end(), g) == c.generators.end())
      c.generators.push_back(g);
  }
  return c;
}

ConeV extreme_rays(const ConeH& cone) {
  if (cone.dim > kDualDimGuard)
    throw ScaleGuardError("extreme ray enumeration limited to ambient dimension 8");
  ConeV out;
  const std::size_t dim = cone.dim;
  // Lineality space: common kernel of all normals.
  QMatrix nmat = QMatrix::from_rows(cone.normals.empty() ? std::vector<QVector>{qvec_zero(dim)}
                                                         : cone.normals);
  const std::vector<QVector> lin = nullspace(nmat);
  const Subspace lin_space = Subspace::from_rows(dim, lin);
  out.lineality = lin_space.basis.rows;
  const std::size_t lin_dim = lin_space.dim();
  if (lin_dim >= dim) return out;  // the cone is the whole lineality space
  // Pointed part: intersect with the dot-orthogonal complement of the
  // lineality space. A ray of the pointed part is determined by dim-1
  // linearly independent active constraints, lineality equations included.
  const std::size_t pick = dim - lin_dim - 1;
  if (pick > cone.normals.size()) return out;
  std::set<QVector, bool (*)(const QVector&, const QVector&)> seen(qvec_less);
  for_each_subset(cone.normals.size(), pick, [&](const std::vector<std::size_t>& idx) {
    std::vector<QVector> rows = out.lineality;
    for (std::size_t i : idx) rows.push_back(cone.normals[i]);
    if (rows.empty()) rows.push_back(qvec_zero(dim));
    const std::vector<QVector> kern = nullspace(QMatrix::from_rows(rows));
    if (kern.size() != 1) return;
    QVector v = primitive_ray(kern[0]);
    bool pos = true, neg = true;
    for (const QVector& n : cone.normals) {
      const int s = rat_sign(qvec_dot(n, v));
      if (s < 0) pos = false;
      if (s > 0) neg = false;
      if (!pos && !neg) return;
    }
    if (neg && !pos) v = primitive_ray(qvec_neg(v));
    seen.insert(std::move(v));
  });
  out.rays.assign(seen.begin(), seen.end());
  return out;
}

std::vector<QVector> cone_generators(const ConeH& cone) {
  const ConeV v = extreme_rays(cone);
  std::vector<QVector> gens = v.rays;
  for (const QVector& k : v.lineality) {
    gens.push_back(k);
    gens.push_back(qvec_neg(k));
  }
  return gens;
}

ConeH dual_description(std::size_t dim, const std::vector<QVector>& generators) {
  if (dim > kDualDimGuard)
    throw ScaleGuardError("dual description limited to ambient dimension 8");
  for (const QVector& g : generators)
    if (g.size() != dim) throw std::invalid_argument("generator dimension mismatch");
  // The halfspaces containing cone(G) are the members of the dual cone
  // D = {y : (g, y) >= 0}; its generators give a complete inequality system
  // by the bipolar theorem.
  const ConeH dual = ConeH::make(dim, generators);
  return ConeH::make(dim, cone_generators(dual));
}

QVector relative_interior_point(const ConeH& cone) {
  const ConeV v = extreme_rays(cone);
  QVector p = qvec_zero(cone.dim);
  for (const QVector& r : v.rays) p = qvec_add(p, r);
  return p;
}

QVector relative_interior_point(std::size_t dim, const std::vector<QVector>& generators) {
  QVector p = qvec_zero(dim);
  for (const QVector& g : generators) {
    if (g.size() != dim) throw std::invalid_argument("generator dimension mismatch");
    p = qvec_add(p, g);
  }
  return p;
}

ConeH irredundant(const ConeH& cone) {
  const ConeV v = extreme_rays(cone);
  const std::size_t dim = cone.dim;
  const Subspace lin_space = Subspace::from_rows(dim, v.lineality);
  // Span of the cone (for detecting the implicit-equality normals).
  std::vector<QVector> span_rows = v.rays;
  span_rows.insert(span_rows.end(), v.lineality.begin(), v.lineality.end());
  const Subspace span = Subspace::from_rows(dim, span_rows);
  const std::size_t cone_dim = span.dim();
  std::vector<QVector> keep;
  for (const QVector& n : cone.normals) {
    bool vanishes_on_cone = true;
    for (const QVector& r : v.rays)
      if (qvec_dot(n, r) != 0) {
        vanishes_on_cone = false;
        break;
      }
    // Normals vanishing on every ray (lineality is in every normal's kernel
    // already) cut only the linear span; they are replaced below by a
    // canonical equation system for the span.
    if (vanishes_on_cone) continue;
    // Facet test: the tight rays (plus lineality) must span a hyperplane of
    // the cone's span.
    std::vector<QVector> tight = v.lineality;
    for (const QVector& r : v.rays)
      if (qvec_dot(n, r) == 0) tight.push_back(r);
    if (Subspace::from_rows(dim, tight).dim() == cone_dim - 1) keep.push_back(n);
  }
  if (cone_dim < dim) {
    const std::vector<QVector> comp = nullspace(
        span.dim() ? span.basis : QMatrix::from_rows({qvec_zero(dim)}));
    for (const QVector& c : comp) {
      keep.push_back(c);
      keep.push_back(qvec_neg(c));
    }
  }
  return ConeH::make(dim, std::move(keep));
}

RayHit ray_hit_boundary(const QVector& start, const QVector& direction, const AffCone& cone) {
  const std::size_t dim = cone.vertex.size();
  if (start.size() != dim || direction.size() != dim)
    throw std::invalid_argument("ray dimension mismatch");
  const ConeH h = dual_description(dim, cone.generators);
  const QVector offset = qvec_sub(start, cone.vertex);
  for (const QVector& n : h.normals) {
    if (qvec_dot(n, offset) < 0)
      throw std::invalid_argument("ray start lies outside the cone (violates normal " +
                                  qvec_to_string(n) + ")");
  }
  RayHit hit;
  bool bounded = false;
  Rat tmax;
  for (const QVector& n : h.normals) {
    const Rat slope = qvec_dot(n, direction);
    if (slope >= 0) continue;  // this halfspace never cuts the forward ray
    const Rat bound = qvec_dot(n, offset) / -slope;
    if (!bounded || bound < tmax) {
      bounded = true;
      tmax = bound;
    }
  }
  if (!bounded) {
    hit.unbounded = true;
    return hit;
  }
  hit.t = tmax;
  hit.point = qvec_add(start, qvec_scale(tmax, direction));
  const QVector poff = qvec_sub(hit.point, cone.vertex);
  // Minimal face containing the landing point: generators annihilated by
  // every normal tight there.
  std::vector<QVector> tight;
  for (const QVector& n : h.normals)
    if (qvec_dot(n, poff) == 0) tight.push_back(n);
  for (const QVector& g : cone.generators) {
    bool on_face = true;
    for (const QVector& n : tight)
      if (qvec_dot(n, g) != 0) {
        on_face = false;
        break;
      }
    if (on_face) hit.face_generators.push_back(g);
  }
  return hit;
}

}  // namespace flagstab
