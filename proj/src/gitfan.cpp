#include "flagstab/gitfan.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "flagstab/parallel.hpp"

namespace flagstab {

namespace {

// Lexicographic order on normal lists; canonical cones sort deterministically.
bool normals_less(const std::vector<QVector>& a, const std::vector<QVector>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      qvec_less);
}

QVector ones(std::size_t n) {
  QVector v(n, Rat(1));
  return v;
}

// A strictly feasible point of the open region {chamber rows > 0, extra > 0},
// scaled to >= 1 by homogeneity.
std::optional<QVector> strict_point(const QMatrix& chamber,
                                    const std::vector<QVector>& extra) {
  QMatrix ineq = chamber;
  for (const QVector& row : extra) ineq.rows.push_back(row);
  return lp_feasible_system(ineq, ones(ineq.nrows()), QMatrix::zero(0, 0),
                            qvec_zero(0));
}

struct SplitmixRng {
  unsigned long state;
  explicit SplitmixRng(unsigned long seed) : state(seed) {}
  long next_int(long lo, long hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((state >> 33) % (hi - lo + 1));
  }
  Rat next_pos_rat() {
    Rat r(next_int(1, 9), next_int(1, 3));
    r.canonicalize();
    return r;
  }
};

// Seeded strictly positive combination of the cone's extreme rays: a point
// in the cone's interior.
QVector interior_combination(const std::vector<QVector>& rays, SplitmixRng& rng,
                             std::size_t dim) {
  QVector point = qvec_zero(dim);
  for (const QVector& ray : rays)
    point = qvec_add(point, qvec_scale(rng.next_pos_rat(), ray));
  return point;
}

// The minimal face of `cone` containing `point` equals `target` as a set.
bool face_matches(const ConeH& cone, const ConeH& target, const QVector& point) {
  std::vector<QVector> normals = cone.normals;
  for (const QVector& n : cone.normals)
    if (qvec_dot(n, point) == 0) normals.push_back(qvec_neg(n));
  const ConeH minimal_face = ConeH::make(cone.dim, normals);

  for (const QVector& g : cone_generators(minimal_face))
    if (!target.contains(g)) return false;
  for (const QVector& g : cone_generators(target))
    if (!minimal_face.contains(g)) return false;
  return true;
}

}  // namespace

GitFan compute_fan(const WeylGroup& wg, bool allow_rank_above_default) {
  const RootSystem& rs = wg.root_system();
  const std::size_t r = static_cast<std::size_t>(rs.rank);
  if (r > 6)
    throw ScaleGuardError("fan computation is limited to rank 6 (got " +
                          std::to_string(r) + ")");
  if (r > 4 && !allow_rank_above_default)
    throw ScaleGuardError(
        "fan computation above rank 4 must be requested explicitly (got rank " +
        std::to_string(r) + ")");

  GitFan fan;
  fan.type_spec = rs.type_spec;
  fan.rank = rs.rank;

  // Chamber inequalities: nonnegative fundamental coordinates.
  const QMatrix& chamber = rs.gram;

  // Candidate walls are the images of the coordinate hyperplanes under the
  // group: their normals are the matrix rows of the group elements. Keep one
  // sign per line and only lines crossing the open chamber.
  std::set<QVector, QVectorLess> candidates;
  for (int e = 0; e < wg.order(); ++e)
    for (const QVector& row : wg.element(e).matrix.rows)
      candidates.insert(primitive_line(row));
  for (const QVector& n : candidates) {
    QMatrix eq;
    eq.rows.push_back(n);
    if (lp_feasible_system(chamber, ones(r), eq, qvec_zero(1)))
      fan.walls.push_back(n);
  }

  // Split the chamber into full-dimensional cells, one wall at a time.
  std::vector<std::vector<QVector>> cells(1);
  for (const QVector& n : fan.walls) {
    std::vector<std::vector<QVector>> next;
    for (const std::vector<QVector>& cell : cells) {
      for (int sign = 0; sign < 2; ++sign) {
        std::vector<QVector> extended = cell;
        extended.push_back(sign == 0 ? n : qvec_neg(n));
        if (strict_point(chamber, extended)) next.push_back(std::move(extended));
      }
    }
    cells = std::move(next);
  }

  // One sample per cell; merge cells whose semistable sets agree, checking
  // that their cones agree as well. Cells are classified in parallel and
  // merged in cell order, so the worker count cannot change the result.
  std::vector<GitFanCone> classified(cells.size());
  parallel_for(cells.size(), [&](std::size_t k) {
    const auto sample = strict_point(chamber, cells[k]);
    if (!sample) throw std::logic_error("arrangement cell lost its sample");
    GitFanCone entry;
    entry.interior_sample = *sample;
    entry.wst = semistable_set(wg, *sample);
    entry.cone = irredundant(git_cone(wg, *sample));
    classified[k] = std::move(entry);
  });

  std::map<std::vector<int>, GitFanCone> by_wst;
  for (GitFanCone& entry : classified) {
    const std::vector<int> key = entry.wst;
    const auto [it, inserted] = by_wst.try_emplace(key, std::move(entry));
    if (!inserted) {
      ++fan.chambers_merged;
      if (!(it->second.cone.dim == entry.cone.dim &&
            it->second.cone.normals == entry.cone.normals))
        throw std::logic_error(
            "cells with equal semistable sets produced different cones");
    }
  }

  for (auto& entry : by_wst) fan.maximal_cones.push_back(std::move(entry.second));
  std::sort(fan.maximal_cones.begin(), fan.maximal_cones.end(),
            [](const GitFanCone& a, const GitFanCone& b) {
              return normals_less(a.cone.normals, b.cone.normals);
            });
  return fan;
}

ConeLocation classify(const GitFan& fan, const RootSystem& rs, const QVector& chi) {
  if (!is_strictly_dominant(rs, chi))
    throw std::invalid_argument("classify requires a strictly dominant weight");
  ConeLocation loc;
  for (int i = 0; i < static_cast<int>(fan.maximal_cones.size()); ++i)
    if (fan.maximal_cones[i].cone.contains(chi)) loc.containing.push_back(i);
  loc.interior = loc.containing.size() == 1;
  return loc;
}

FanValidation validate_fan(const GitFan& fan, const WeylGroup& wg,
                           int interior_samples_per_cone, unsigned long seed) {
  const RootSystem& rs = wg.root_system();
  const std::size_t r = static_cast<std::size_t>(rs.rank);
  FanValidation report;
  const auto problem = [&report](const std::string& text) {
    report.ok = false;
    report.problems.push_back(text);
  };

  // Stored samples agree with their fingerprints and cones.
  for (std::size_t i = 0; i < fan.maximal_cones.size(); ++i) {
    const GitFanCone& cone = fan.maximal_cones[i];
    if (!cone.cone.contains(cone.interior_sample))
      problem("stored sample outside its cone at " +
              qvec_to_string(cone.interior_sample));
    if (semistable_set(wg, cone.interior_sample) != cone.wst)
      problem("stored sample fingerprint mismatch at " +
              qvec_to_string(cone.interior_sample));
  }

  // Pairwise distinct fingerprints.
  std::set<std::vector<int>> prints;
  for (const GitFanCone& cone : fan.maximal_cones) prints.insert(cone.wst);
  if (prints.size() != fan.maximal_cones.size())
    problem("two maximal cones share a semistable set");

  // Grid support: strictly dominant integer grid rays are covered exactly
  // once, or sit on a recorded wall when covered several times.
  int grid = 2;
  if (r == 1) grid = 6;
  if (r == 2) grid = 16;
  if (r == 3) grid = 7;
  if (r == 4) grid = 4;
  std::vector<int> coords(r, 1);
  for (;;) {
    QVector fund(r);
    for (std::size_t i = 0; i < r; ++i) fund[i] = Rat(coords[i]);
    const QVector chi = fundamental_to_simple(rs, fund);
    const ConeLocation loc = classify(fan, rs, chi);
    if (loc.containing.empty())
      problem("uncovered chamber point " + qvec_to_string(chi));
    if (loc.containing.size() > 1) {
      bool on_wall = false;
      for (const QVector& n : fan.walls)
        if (qvec_dot(n, chi) == 0) on_wall = true;
      if (!on_wall)
        problem("point covered twice yet on no wall: " + qvec_to_string(chi));
    } else if (!loc.containing.empty()) {
      const GitFanCone& cone = fan.maximal_cones[loc.containing[0]];
      if (semistable_set(wg, chi) != cone.wst)
        problem("interior fingerprint drift at grid point " + qvec_to_string(chi));
    }
    std::size_t k = 0;
    while (k < r && coords[k] == grid) coords[k++] = 1;
    if (k == r) break;
    ++coords[k];
  }

  // Face test for every pair.
  for (std::size_t i = 0; i < fan.maximal_cones.size(); ++i) {
    for (std::size_t j = i + 1; j < fan.maximal_cones.size(); ++j) {
      const ConeH& a = fan.maximal_cones[i].cone;
      const ConeH& b = fan.maximal_cones[j].cone;
      std::vector<QVector> both = a.normals;
      both.insert(both.end(), b.normals.begin(), b.normals.end());
      const ConeH meet = ConeH::make(a.dim, both);
      const QVector p = relative_interior_point(meet);
      if (!face_matches(a, meet, p))
        problem("intersection of cones " + std::to_string(i) + " and " +
                std::to_string(j) + " is not a face of " + std::to_string(i));
      if (!face_matches(b, meet, p))
        problem("intersection of cones " + std::to_string(i) + " and " +
                std::to_string(j) + " is not a face of " + std::to_string(j));
    }
  }

  // Seeded interior samples keep the fingerprint constant.
  SplitmixRng rng(seed);
  for (std::size_t i = 0; i < fan.maximal_cones.size(); ++i) {
    const GitFanCone& cone = fan.maximal_cones[i];
    const ConeV rep = extreme_rays(cone.cone);
    if (!rep.lineality.empty()) {
      problem("maximal cone " + std::to_string(i) + " contains a line");
      continue;
    }
    for (int s = 0; s < interior_samples_per_cone; ++s) {
      const QVector chi = interior_combination(rep.rays, rng, r);
      if (!is_strictly_dominant(rs, chi)) {
        problem("interior sample escaped the chamber in cone " + std::to_string(i));
        continue;
      }
      if (semistable_set(wg, chi) != cone.wst)
        problem("fingerprint drift in cone " + std::to_string(i) + " at " +
                qvec_to_string(chi));
    }
  }

  return report;
}

std::string fan_svg(const GitFan& fan, const WeylGroup& wg) {
  const RootSystem& rs = wg.root_system();
  if (rs.rank != 2)
    throw std::invalid_argument("the wall diagram requires a rank-2 system");

  // Metric embedding of the simple-root plane: columns of an upper
  // triangular square root of the Gram matrix.
  const double g11 = mpq_get_d(rs.gram.rows[0][0].get_mpq_t());
  const double g12 = mpq_get_d(rs.gram.rows[0][1].get_mpq_t());
  const double g22 = mpq_get_d(rs.gram.rows[1][1].get_mpq_t());
  const double b11 = std::sqrt(g11);
  const double b12 = g12 / b11;
  const double b22 = std::sqrt(g22 - b12 * b12);

  const double cx = 260.0, cy = 300.0, radius = 220.0;
  const auto place = [&](const QVector& v) {
    const double x1 = mpq_get_d(v[0].get_mpq_t());
    const double x2 = mpq_get_d(v[1].get_mpq_t());
    double px = b11 * x1 + b12 * x2;
    double py = b22 * x2;
    const double len = std::hypot(px, py);
    if (len > 1e-12) {
      px /= len;
      py /= len;
    }
    return std::pair<double, double>(cx + radius * px, cy - radius * py);
  };

  const char* fills[] = {"#c6dbef", "#fdd0a2", "#c7e9c0", "#e7cbe7",
                         "#f2f0a6", "#d9d9d9"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 520 420\">\n";
  svg << "<rect width=\"520\" height=\"420\" fill=\"white\"/>\n";

  for (std::size_t i = 0; i < fan.maximal_cones.size(); ++i) {
    const ConeV rep = extreme_rays(fan.maximal_cones[i].cone);
    if (rep.rays.size() != 2) continue;
    const auto [ax, ay] = place(rep.rays[0]);
    const auto [bx, by] = place(rep.rays[1]);
    svg << "<path d=\"M " << cx << ' ' << cy << " L " << ax << ' ' << ay
        << " L " << bx << ' ' << by << " Z\" fill=\"" << fills[i % 6]
        << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
    const auto [sx, sy] = place(fan.maximal_cones[i].interior_sample);
    const double lx = cx + (sx - cx) * 0.62;
    const double ly = cy + (sy - cy) * 0.62;
    svg << "<text x=\"" << lx << "\" y=\"" << ly
        << "\" font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\">"
        << i << "</text>\n";
  }

  // Chamber boundary drawn solid, interior walls dashed.
  const ConeH chamber_cone = ConeH::make(2, rs.gram.rows);
  for (const QVector& ray : extreme_rays(chamber_cone).rays) {
    const auto [x, y] = place(ray);
    svg << "<line x1=\"" << cx << "\" y1=\"" << cy << "\" x2=\"" << x
        << "\" y2=\"" << y << "\" stroke=\"#222\" stroke-width=\"2\"/>\n";
  }
  for (const QVector& wall : fan.walls) {
    // Direction of the wall inside the chamber.
    QMatrix eq;
    eq.rows.push_back(wall);
    const auto dir = lp_feasible_system(rs.gram, ones(2), eq, qvec_zero(1));
    if (!dir) continue;
    const auto [x, y] = place(*dir);
    svg << "<line x1=\"" << cx << "\" y1=\"" << cy << "\" x2=\"" << x
        << "\" y2=\"" << y
        << "\" stroke=\"#b22\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n";
  }

  svg << "<text x=\"14\" y=\"28\" font-family=\"sans-serif\" font-size=\"16\">"
      << fan.type_spec << " chamber: " << fan.maximal_cones.size()
      << " cone(s), " << fan.walls.size() << " wall(s)</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace flagstab
