#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "flagstab/cones.hpp"
#include "flagstab/gitfan.hpp"
#include "flagstab/picard.hpp"
#include "flagstab/rootsys.hpp"
#include "flagstab/saturated.hpp"
#include "flagstab/stability.hpp"
#include "flagstab/weyl.hpp"

using namespace flagstab;

namespace {

QVector qv(std::vector<long> v) {
  QVector out;
  for (long x : v) out.push_back(Rat(x));
  return out;
}

struct TestRng {
  unsigned long state = 24680;
  long next_int(long lo, long hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((state >> 33) % (hi - lo + 1));
  }
  Rat next_pos_rat() {
    Rat r(next_int(1, 6), next_int(1, 3));
    r.canonicalize();
    return r;
  }
};

// Rebuilds the raw (non-deduplicated) constraint rows contributed by the
// records whose group element passes the filter.
std::vector<QVector> raw_rows(const WeylGroup& wg, const PicardCertificate& cert,
                              const std::set<int>& wanted, bool keep_all) {
  const RootSystem& rs = wg.root_system();
  std::vector<QVector> rows;
  for (const PicardConstraintRecord& rec : cert.per_w) {
    if (!keep_all && wanted.count(rec.w_index) == 0) continue;
    const int v_index = wg.multiply(rec.w_index, wg.longest().index);
    const QMatrix& v = wg.element(v_index).matrix;
    for (const QVector& n : rec.complement) {
      const QVector gn = mat_vec(rs.gram, n);
      const QVector left = mat_vec(v.transposed(), gn);
      QVector row;
      for (const Rat& x : left) row.push_back(x);
      for (const Rat& x : gn) row.push_back(x);
      rows.push_back(row);
    }
  }
  return rows;
}

// Span of the mu1 halves of the solution space of the given rows.
Subspace mu1_projection(const RootSystem& rs, const std::vector<QVector>& rows) {
  std::vector<QVector> tails;
  if (rows.empty()) {
    for (int i = 0; i < rs.rank; ++i) tails.push_back(qvec_unit(rs.rank, i));
  } else {
    for (const QVector& v : nullspace(QMatrix::from_rows(rows))) {
      tails.emplace_back(v.begin() + rs.rank, v.end());
    }
  }
  return Subspace::from_rows(rs.rank, tails);
}

const PicardConstraintRecord& record_for(const PicardCertificate& cert,
                                         int w_index) {
  for (const PicardConstraintRecord& rec : cert.per_w) {
    if (rec.w_index == w_index) return rec;
  }
  throw std::logic_error("no record for the requested element");
}

void check_nullspace_witnesses(const WeylGroup& wg,
                               const PicardCertificate& cert) {
  const RootSystem& rs = wg.root_system();
  for (std::size_t k = 0; k < cert.nullspace_basis.nrows(); ++k) {
    const QVector& mu = cert.nullspace_basis.rows[k];
    const QVector mu0(mu.begin(), mu.begin() + rs.rank);
    const QVector mu1(mu.begin() + rs.rank, mu.end());
    for (const PicardConstraintRecord& rec : cert.per_w) {
      const int v_index = wg.multiply(rec.w_index, wg.longest().index);
      const QVector moved =
          qvec_add(mat_vec(wg.element(v_index).matrix, mu0), mu1);
      CHECK(rec.profile.contains(moved));
    }
  }
}

}  // namespace

TEST_SUITE("picard") {

TEST_CASE("B4 certificate through a degenerate weight") {
  RootSystem rs = build_root_system("B4");
  WeylGroup wg = WeylGroup::enumerate(rs);
  const QVector chi = fundamental_to_simple(rs, qv({10, 1, 8, 2}));
  const PicardCertificate cert = picard_certificate(wg, chi);

  CHECK(cert.rank == 2);
  CHECK_FALSE(cert.an_caveat);
  CHECK(cert.chi == chi);
  CHECK(picard_rank(wg, chi) == 2);
  CHECK(cert.per_w.size() == semistable_set(wg, chi).size());
  REQUIRE(cert.constraints.nrows() > 0);
  CHECK(cert.rank == 8 - matrix_rank(cert.constraints));

  // Solutions are exactly the pairs (mu0, 0) with mu0 in the plane shared by
  // the two proper subsystems through w0 chi.
  const Subspace plane = Subspace::from_rows(
      4, {epsilon_to_simple(rs, qv({0, 0, 1, -1})),
          epsilon_to_simple(rs, qv({2, 1, 1, 0}))});
  REQUIRE(cert.nullspace_basis.nrows() == 2);
  std::vector<QVector> heads;
  for (const QVector& mu : cert.nullspace_basis.rows) {
    const QVector mu0(mu.begin(), mu.begin() + 4);
    const QVector mu1(mu.begin() + 4, mu.end());
    CHECK(qvec_is_zero(mu1));
    CHECK(plane.contains(mu0));
    heads.push_back(mu0);
  }
  CHECK(Subspace::from_rows(4, heads) == plane);

  // Appending rows one at a time can only keep or lower the solution rank.
  std::vector<QVector> prefix;
  int previous = 8;
  for (const QVector& row : cert.constraints.rows) {
    prefix.push_back(row);
    const int rank_now = 8 - matrix_rank(QMatrix::from_rows(prefix));
    CHECK(rank_now <= previous);
    CHECK(rank_now >= previous - 1);
    previous = rank_now;
  }
  CHECK(previous == cert.rank);
}

TEST_CASE("staged constraints pin the twisting weight") {
  RootSystem rs = build_root_system("B4");
  WeylGroup wg = WeylGroup::enumerate(rs);
  const QVector chi = fundamental_to_simple(rs, qv({10, 1, 8, 2}));
  const PicardCertificate cert = picard_certificate(wg, chi);

  const int id = wg.identity().index;
  const int w34 = wg.multiply(wg.simple(2), wg.simple(3));
  std::set<int> stage = {id};
  for (int w : stage) CHECK(record_for(cert, w).profile.dim() == 2);

  // The longest element alone leaves the second component unconstrained.
  CHECK(mu1_projection(rs, raw_rows(wg, cert, stage, false)).is_full());

  // The four simple reflections cut it down to the line of the third
  // fundamental weight.
  for (int i = 0; i < 4; ++i) stage.insert(wg.simple(i));
  for (int w : stage) CHECK(record_for(cert, w).profile.dim() < 4);
  const Subspace line = mu1_projection(rs, raw_rows(wg, cert, stage, false));
  CHECK(line == Subspace::from_rows(4, {rs.fundamental_weights[2]}));

  // One length-two element kills the remaining parameter.
  stage.insert(w34);
  CHECK(record_for(cert, w34).profile.dim() == 2);
  const Subspace none = mu1_projection(rs, raw_rows(wg, cert, stage, false));
  CHECK(none.dim() == 0);

  // The full system has the same second-component conclusion.
  CHECK(mu1_projection(rs, raw_rows(wg, cert, {}, true)).dim() == 0);
}

TEST_CASE("generic weights keep the full rank") {
  const std::vector<std::pair<std::string, std::vector<long>>> cases = {
      {"B2", {1, 1}}, {"B3", {1, 2, 4}}, {"G2", {1, 1}}};
  for (const auto& [spec, fund] : cases) {
    CAPTURE(spec);
    RootSystem rs = build_root_system(spec);
    WeylGroup wg = WeylGroup::enumerate(rs);
    const QVector chi = fundamental_to_simple(rs, qv(fund));

    // Genericity: only the full span contains the antidominant translate.
    const std::vector<SaturatedSubsystem> sats = enumerate_saturated(rs);
    const QVector w0chi = mat_vec(wg.longest().matrix, chi);
    CHECK(spans_containing(w0chi, sats).size() == 1);

    const PicardCertificate cert = picard_certificate(wg, chi);
    CHECK(cert.rank == 2 * rs.rank);
    CHECK(cert.constraints.nrows() == 0);
    CHECK(cert.nullspace_basis.rows == QMatrix::identity(2 * rs.rank).rows);
    CHECK(cert.per_w.size() == semistable_set(wg, chi).size());
    for (const PicardConstraintRecord& rec : cert.per_w) {
      CHECK(rec.profile.is_full());
      CHECK(rec.complement.empty());
    }
  }
}

TEST_CASE("a degenerate B3 weight drops the rank") {
  RootSystem rs = build_root_system("B3");
  WeylGroup wg = WeylGroup::enumerate(rs);
  // In orthogonal coordinates (9,5,4) lies in the span of e1+e2 and e1+e3,
  // and it stays strictly dominant.
  const QVector chi = epsilon_to_simple(rs, qv({9, 5, 4}));
  REQUIRE(is_strictly_dominant(rs, chi));

  const PicardCertificate cert = picard_certificate(wg, chi);
  REQUIRE(cert.constraints.nrows() > 0);
  CHECK(cert.rank < 6);
  CHECK(cert.rank >= 0);
  CHECK(cert.rank == 6 - matrix_rank(cert.constraints));
  bool proper_seen = false;
  for (const PicardConstraintRecord& rec : cert.per_w) {
    if (!rec.profile.is_full()) proper_seen = true;
  }
  CHECK(proper_seen);
}

TEST_CASE("duplicate constraint rows do not change the rank") {
  const std::vector<std::pair<std::string, QVector>> cases = [] {
    std::vector<std::pair<std::string, QVector>> out;
    RootSystem b4 = build_root_system("B4");
    out.emplace_back("B4", fundamental_to_simple(b4, qv({10, 1, 8, 2})));
    RootSystem b3 = build_root_system("B3");
    out.emplace_back("B3", epsilon_to_simple(b3, qv({9, 5, 4})));
    return out;
  }();
  for (const auto& [spec, chi] : cases) {
    CAPTURE(spec);
    RootSystem rs = build_root_system(spec);
    WeylGroup wg = WeylGroup::enumerate(rs);
    const PicardCertificate cert = picard_certificate(wg, chi);
    const std::vector<QVector> raw = raw_rows(wg, cert, {}, true);
    REQUIRE(raw.size() >= cert.constraints.nrows());
    CHECK(matrix_rank(QMatrix::from_rows(raw)) ==
          matrix_rank(cert.constraints));
  }
}

TEST_CASE("nullspace vectors satisfy every recorded membership") {
  {
    RootSystem rs = build_root_system("B4");
    WeylGroup wg = WeylGroup::enumerate(rs);
    check_nullspace_witnesses(
        wg, picard_certificate(wg, fundamental_to_simple(rs, qv({10, 1, 8, 2}))));
  }
  {
    RootSystem rs = build_root_system("B3");
    WeylGroup wg = WeylGroup::enumerate(rs);
    check_nullspace_witnesses(
        wg, picard_certificate(wg, epsilon_to_simple(rs, qv({9, 5, 4}))));
  }
}

TEST_CASE("the rank is constant on each fan cone") {
  TestRng rng;
  for (const std::string& spec : {"B2", "B3", "G2"}) {
    CAPTURE(spec);
    RootSystem rs = build_root_system(spec);
    WeylGroup wg = WeylGroup::enumerate(rs);
    const GitFan fan = compute_fan(wg);
    REQUIRE_FALSE(fan.maximal_cones.empty());
    for (const GitFanCone& cone : fan.maximal_cones) {
      const int reference = picard_rank(wg, cone.interior_sample);
      const ConeV rays = extreme_rays(cone.cone);
      REQUIRE(rays.lineality.empty());
      REQUIRE_FALSE(rays.rays.empty());
      for (int trial = 0; trial < 2; ++trial) {
        QVector x = qvec_zero(rs.rank);
        for (const QVector& ray : rays.rays) {
          x = qvec_add(x, qvec_scale(rng.next_pos_rat(), ray));
        }
        CHECK(picard_rank(wg, x) == reference);
      }
    }
  }
}

TEST_CASE("type A factors raise the caveat") {
  const std::vector<std::pair<std::string, bool>> cases = {
      {"A2", true}, {"A1xB2", true}, {"B2", false}, {"G2", false}};
  for (const auto& [spec, expected] : cases) {
    CAPTURE(spec);
    RootSystem rs = build_root_system(spec);
    WeylGroup wg = WeylGroup::enumerate(rs);
    QVector fund;
    for (int i = 0; i < rs.rank; ++i) fund.push_back(Rat(1));
    const PicardCertificate cert =
        picard_certificate(wg, fundamental_to_simple(rs, fund));
    CHECK(cert.an_caveat == expected);
    CHECK(cert.rank >= 0);
    CHECK(cert.rank <= 2 * rs.rank);
  }
}

TEST_CASE("open cell constraints match the identity profile") {
  {
    RootSystem rs = build_root_system("B4");
    WeylGroup wg = WeylGroup::enumerate(rs);
    const QVector chi = fundamental_to_simple(rs, qv({10, 1, 8, 2}));
    const Subspace oc = open_cell_constraints(wg, chi);
    const Subspace plane = Subspace::from_rows(
        4, {epsilon_to_simple(rs, qv({0, 0, 1, -1})),
            epsilon_to_simple(rs, qv({2, 1, 1, 0}))});
    CHECK(oc == plane);
    const std::vector<SaturatedSubsystem> sats = enumerate_saturated(rs);
    CHECK(oc == span_profile(wg, wg.identity().index, chi, sats));
  }
  {
    RootSystem rs = build_root_system("B3");
    WeylGroup wg = WeylGroup::enumerate(rs);
    const QVector chi = epsilon_to_simple(rs, qv({9, 5, 4}));
    const Subspace oc = open_cell_constraints(wg, chi);
    CHECK_FALSE(oc.is_full());
    const std::vector<SaturatedSubsystem> sats = enumerate_saturated(rs);
    CHECK(oc == span_profile(wg, wg.identity().index, chi, sats));
  }
  for (const std::string& spec : {"A2", "B2", "G2"}) {
    CAPTURE(spec);
    RootSystem rs = build_root_system(spec);
    WeylGroup wg = WeylGroup::enumerate(rs);
    QVector fund;
    for (int i = 0; i < rs.rank; ++i) fund.push_back(Rat(i + 1));
    const QVector chi = fundamental_to_simple(rs, fund);
    const Subspace oc = open_cell_constraints(wg, chi);
    CHECK(oc.is_full());
    const std::vector<SaturatedSubsystem> sats = enumerate_saturated(rs);
    CHECK(oc == span_profile(wg, wg.identity().index, chi, sats));
  }
}

TEST_CASE("invalid weights are rejected") {
  RootSystem rs = build_root_system("B2");
  WeylGroup wg = WeylGroup::enumerate(rs);
  CHECK_THROWS_AS(picard_rank(wg, fundamental_to_simple(rs, qv({1, 0}))),
                  std::invalid_argument);
  CHECK_THROWS_AS(assemble_constraints(wg, qv({1, 1, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(open_cell_constraints(wg, qv({-1, 2})),
                  std::invalid_argument);
}

}  // TEST_SUITE("picard")
