#include "flagstab/saturated.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "flagstab/stability.hpp"

namespace flagstab {

namespace {

// Sign of a vector already known to be a root.
bool root_is_positive(const RootSystem& rs, const QVector& v) {
  const int idx = rs.root_index(v);
  if (idx < 0) throw std::logic_error("expected a root vector: " + qvec_to_string(v));
  return idx < rs.num_positive;
}

QVector target_point(const WeylGroup& wg, int w_index, const QVector& chi) {
  const QMatrix ww0 = mat_mul(wg.element(w_index).matrix, wg.longest().matrix);
  return mat_vec(ww0, chi);
}

void require_strictly_dominant_chi(const RootSystem& rs, const QVector& chi) {
  if (chi.size() != static_cast<std::size_t>(rs.rank))
    throw std::invalid_argument("chi dimension mismatch");
  if (!is_strictly_dominant(rs, chi))
    throw std::invalid_argument("chi must be strictly dominant");
}

}  // namespace

SaturatedSubsystem saturate_span(const RootSystem& rs, const Subspace& span) {
  const std::size_t r = static_cast<std::size_t>(rs.rank);
  if (span.ambient != r) throw std::invalid_argument("span ambient dimension mismatch");

  SaturatedSubsystem sat;
  sat.span = span;
  for (int i = 0; i < static_cast<int>(rs.all_roots.size()); ++i)
    if (span.contains(rs.all_roots[i])) sat.roots.push_back(i);
  for (int i : sat.roots)
    if (i < rs.num_positive) sat.positive_roots.push_back(i);

  std::vector<QVector> pos;
  std::set<QVector, QVectorLess> pos_set;
  for (int i : sat.positive_roots) {
    pos.push_back(rs.all_roots[i]);
    pos_set.insert(rs.all_roots[i]);
  }

  // The base consists of the positive roots that are not the sum of two
  // others in the subsystem.
  for (const QVector& b : pos) {
    bool decomposable = false;
    for (const QVector& g : pos) {
      if (g == b) continue;
      if (pos_set.count(qvec_sub(b, g))) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) sat.base.push_back(b);
  }
  if (sat.base.size() != span.dim())
    throw std::logic_error("subsystem base does not match the span dimension");

  // Components of the pairing graph on the base, ordered by smallest member.
  const std::size_t m = sat.base.size();
  std::vector<int> comp(m, -1);
  for (std::size_t seed = 0; seed < m; ++seed) {
    if (comp[seed] >= 0) continue;
    const int id = static_cast<int>(sat.components.size());
    std::vector<int> members;
    std::vector<std::size_t> work = {seed};
    comp[seed] = id;
    while (!work.empty()) {
      const std::size_t i = work.back();
      work.pop_back();
      members.push_back(static_cast<int>(i));
      for (std::size_t j = 0; j < m; ++j) {
        if (comp[j] >= 0) continue;
        if (inner(rs, sat.base[i], sat.base[j]) != 0) {
          comp[j] = id;
          work.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    sat.components.push_back(std::move(members));
  }

  // Highest root of each component: maximal height in base coordinates.
  for (const std::vector<int>& members : sat.components) {
    std::vector<QVector> cbase;
    for (int i : members) cbase.push_back(sat.base[static_cast<std::size_t>(i)]);
    const Subspace cspan = Subspace::from_rows(r, cbase);
    const QMatrix cols = QMatrix::from_columns(cbase, r);
    bool have = false;
    bool tied = false;
    QVector best;
    Rat best_height;
    for (const QVector& p : pos) {
      if (!cspan.contains(p)) continue;
      const auto coords = solve(cols, p);
      if (!coords) throw std::logic_error("component coordinates unsolvable");
      Rat height = 0;
      for (const Rat& c : *coords) height += c;
      if (!have || height > best_height) {
        have = true;
        tied = false;
        best = p;
        best_height = height;
      } else if (height == best_height) {
        tied = true;
      }
    }
    if (!have || tied) throw std::logic_error("component highest root is not unique");
    sat.highest_roots.push_back(best);
  }

  sat.type_label = identify_type(rs, sat.base);
  return sat;
}

std::vector<SaturatedSubsystem> enumerate_saturated(const RootSystem& rs) {
  const std::size_t r = static_cast<std::size_t>(rs.rank);
  if (r > 6)
    throw ScaleGuardError("saturated subsystem enumeration is limited to rank 6 (got " +
                          std::to_string(r) + ")");

  std::vector<QVector> pos;
  for (int i = 0; i < rs.num_positive; ++i) pos.push_back(rs.all_roots[i]);

  // Grow spans one positive root at a time. Any span of a root subset is
  // reached by adjoining an independent subset of it root by root, so this
  // visits every root-spanned subspace exactly once per dimension layer.
  std::vector<std::set<Subspace>> layers(r + 1);
  layers[0].insert(Subspace::zero(r));
  for (std::size_t d = 0; d < r; ++d)
    for (const Subspace& s : layers[d])
      for (const QVector& p : pos)
        if (!s.contains(p)) layers[d + 1].insert(subspace_sum(s, Subspace::from_rows(r, {p})));

  std::vector<SaturatedSubsystem> out;
  for (const std::set<Subspace>& layer : layers)
    for (const Subspace& s : layer) out.push_back(saturate_span(rs, s));
  return out;
}

std::vector<int> spans_containing(const QVector& v,
                                  const std::vector<SaturatedSubsystem>& sats) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(sats.size()); ++i)
    if (sats[static_cast<std::size_t>(i)].span.contains(v)) out.push_back(i);
  return out;
}

bool subsystem_qualifies(const WeylGroup& wg, const SaturatedSubsystem& sat,
                         int w_index, const QVector& chi) {
  const RootSystem& rs = wg.root_system();
  require_strictly_dominant_chi(rs, chi);
  const QVector target = target_point(wg, w_index, chi);
  if (!sat.span.contains(target)) return false;

  const QMatrix& winv = wg.element(wg.inverse(w_index)).matrix;
  std::vector<QVector> gens;
  for (int i : sat.positive_roots) {
    const QVector& alpha = rs.all_roots[static_cast<std::size_t>(i)];
    if (root_is_positive(rs, mat_vec(winv, alpha))) gens.push_back(alpha);
  }
  return cone_member(qvec_neg(target), gens).inside;
}

std::pair<bool, bool> zero_membership_pair(const WeylGroup& wg, int w_index,
                                           const QVector& chi) {
  const RootSystem& rs = wg.root_system();
  require_strictly_dominant_chi(rs, chi);
  const QVector neg_target = qvec_neg(target_point(wg, w_index, chi));

  const QMatrix& winv = wg.element(wg.inverse(w_index)).matrix;
  std::vector<QVector> all_pos;
  std::vector<QVector> kept;
  for (int i = 0; i < rs.num_positive; ++i) {
    const QVector& alpha = rs.all_roots[static_cast<std::size_t>(i)];
    all_pos.push_back(alpha);
    if (root_is_positive(rs, mat_vec(winv, alpha))) kept.push_back(alpha);
  }
  return {cone_member(neg_target, all_pos).inside, cone_member(neg_target, kept).inside};
}

Path build_path(const WeylGroup& wg, const SaturatedSubsystem& sat, int w_index,
                const QVector& chi) {
  const RootSystem& rs = wg.root_system();
  if (!subsystem_qualifies(wg, sat, w_index, chi))
    throw std::invalid_argument("path construction requires a qualifying subsystem");

  const std::size_t r = static_cast<std::size_t>(rs.rank);
  const QMatrix& winv = wg.element(wg.inverse(w_index)).matrix;

  Path path;
  path.w_index = w_index;
  path.chi = chi;
  path.target = target_point(wg, w_index, chi);
  path.chain.push_back(sat);
  path.points.push_back(qvec_zero(r));

  const std::size_t step_guard = std::max<std::size_t>(1, sat.positive_roots.size() * r);
  while (path.points.back() != path.target) {
    if (path.betas.size() >= step_guard)
      throw std::logic_error("path construction exceeded the step guard of " +
                             std::to_string(step_guard) + " segments");
    const SaturatedSubsystem& sys = path.chain.back();
    const QVector& cur = path.points.back();

    std::vector<QVector> gens;
    for (int i : sys.positive_roots) gens.push_back(rs.all_roots[static_cast<std::size_t>(i)]);
    const AffCone cone = AffCone::make(path.target, gens);

    // Among the component highest roots that w^{-1} keeps positive, take the
    // first giving strictly positive progress; with none, a zero-length step
    // still drops to a proper face of the cone.
    bool found = false;
    bool found_zero = false;
    QVector beta;
    RayHit hit;
    QVector zero_beta;
    RayHit zero_hit;
    for (const QVector& hr : sys.highest_roots) {
      if (!root_is_positive(rs, mat_vec(winv, hr))) continue;
      RayHit cand = ray_hit_boundary(cur, qvec_neg(hr), cone);
      if (cand.unbounded) throw std::logic_error("path ray never leaves the step cone");
      if (cand.t > 0) {
        beta = hr;
        hit = std::move(cand);
        found = true;
        break;
      }
      if (!found_zero) {
        zero_beta = hr;
        zero_hit = std::move(cand);
        found_zero = true;
      }
    }
    if (!found) {
      if (!found_zero)
        throw std::logic_error("no component highest root is usable at a path step");
      beta = zero_beta;
      hit = std::move(zero_hit);
    }

    path.betas.push_back(beta);
    path.ks.push_back(hit.t);
    path.points.push_back(hit.point);
    path.chain.push_back(saturate_span(rs, Subspace::from_rows(r, hit.face_generators)));
  }

  Int scaling = 1;
  const auto absorb = [&scaling](const Rat& q) {
    mpz_lcm(scaling.get_mpz_t(), scaling.get_mpz_t(), q.get_den().get_mpz_t());
  };
  for (const QVector& p : path.points)
    for (const Rat& q : p) absorb(q);
  for (const Rat& k : path.ks) absorb(k);
  path.scaling = scaling;

  verify_path(wg, path);
  return path;
}

void verify_path(const WeylGroup& wg, const Path& path) {
  const RootSystem& rs = wg.root_system();
  const auto fail = [](const std::string& what) {
    throw std::logic_error("path verification failed: " + what);
  };

  if (path.points.empty() || path.chain.size() != path.points.size())
    fail("chain and point lists are misaligned");
  if (path.betas.size() + 1 != path.points.size() || path.ks.size() != path.betas.size())
    fail("segment lists are misaligned");
  if (!qvec_is_zero(path.points.front())) fail("start is not the origin");
  if (path.target != target_point(wg, path.w_index, path.chi))
    fail("target is not w w0 chi");
  if (path.points.back() != path.target) fail("endpoint is not the target");

  const QMatrix& winv = wg.element(wg.inverse(path.w_index)).matrix;
  for (std::size_t i = 0; i < path.betas.size(); ++i) {
    const SaturatedSubsystem& sys = path.chain[i];
    const SaturatedSubsystem& next = path.chain[i + 1];
    if (path.ks[i] < 0) fail("negative step length");
    if (qvec_sub(path.points[i], qvec_scale(path.ks[i], path.betas[i])) != path.points[i + 1])
      fail("segment endpoints do not match the step data");
    if (std::find(sys.highest_roots.begin(), sys.highest_roots.end(), path.betas[i]) ==
        sys.highest_roots.end())
      fail("step root is not a component highest root");
    if (!root_is_positive(rs, mat_vec(winv, path.betas[i])))
      fail("w^{-1} sends a step root to a negative root");
    if (!sys.span.contains_subspace(next.span)) fail("subsystem spans are not nested");
    if (!std::includes(sys.positive_roots.begin(), sys.positive_roots.end(),
                       next.positive_roots.begin(), next.positive_roots.end()))
      fail("subsystem root sets are not nested");
  }

  for (std::size_t i = 0; i < path.points.size(); ++i) {
    const SaturatedSubsystem& sys = path.chain[i];
    std::vector<QVector> gens;
    for (int j : sys.positive_roots) gens.push_back(rs.all_roots[static_cast<std::size_t>(j)]);
    if (!cone_member(qvec_sub(path.points[i], path.target), gens).inside)
      fail("a point leaves the affine cone of its subsystem");
    for (const QVector& g : sys.base)
      if (inner(rs, path.points[i], g) > 0)
        fail("a point leaves the antidominant chamber of its subsystem");
  }

  if (path.scaling <= 0) fail("scaling is not positive");
  const Rat n(path.scaling);
  for (const QVector& p : path.points)
    for (const Rat& q : p) {
      const Rat scaled = q * n;
      if (!rat_is_integer(scaled)) fail("scaling does not clear a point denominator");
    }
  for (const Rat& k : path.ks) {
    const Rat scaled = k * n;
    if (!rat_is_integer(scaled)) fail("scaling does not clear a step denominator");
  }
}

Subspace span_profile(const WeylGroup& wg, int w_index, const QVector& chi,
                      const std::vector<SaturatedSubsystem>& sats) {
  const RootSystem& rs = wg.root_system();
  require_strictly_dominant_chi(rs, chi);
  const QMatrix ww0 = mat_mul(wg.element(w_index).matrix, wg.longest().matrix);
  if (!is_semistable(rs, chi, ww0))
    throw std::invalid_argument("span_profile requires w w0 in the semistable set");

  Subspace profile = Subspace::full(static_cast<std::size_t>(rs.rank));
  for (const SaturatedSubsystem& sat : sats)
    if (subsystem_qualifies(wg, sat, w_index, chi))
      profile = subspace_intersect(profile, sat.span);
  return profile;
}

}  // namespace flagstab
