#include "flagstab/serialize.hpp"

#include <stdexcept>
#include <vector>

namespace flagstab {

namespace {

nlohmann::json weights_to_json(const std::vector<QVector>& vs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const QVector& v : vs) arr.push_back(weight_to_json(v));
  return arr;
}

std::vector<QVector> weights_from_json(const nlohmann::json& j) {
  std::vector<QVector> out;
  for (const nlohmann::json& item : j) out.push_back(weight_from_json(item));
  return out;
}

}  // namespace

nlohmann::json weight_to_json(const QVector& simple_coords) {
  return {{"basis", "simple"}, {"coords", simple_coords}};
}

QVector weight_from_json(const nlohmann::json& j) {
  if (j.at("basis").get<std::string>() != "simple") {
    throw std::invalid_argument("weight basis: expected \"simple\"");
  }
  return j.at("coords").get<QVector>();
}

void to_json(nlohmann::json& j, const QMatrix& m) { j = m.rows; }

void from_json(const nlohmann::json& j, QMatrix& m) {
  m = QMatrix::from_rows(j.get<std::vector<QVector>>());
}

void to_json(nlohmann::json& j, const Subspace& s) {
  j = {{"ambient", s.ambient}, {"rows", s.basis.rows}};
}

void from_json(const nlohmann::json& j, Subspace& s) {
  s = Subspace::from_rows(j.at("ambient").get<std::size_t>(),
                          j.at("rows").get<std::vector<QVector>>());
}

void to_json(nlohmann::json& j, const ConeH& c) {
  j = {{"dim", c.dim}, {"normals", c.normals}};
}

void from_json(const nlohmann::json& j, ConeH& c) {
  c = ConeH::make(j.at("dim").get<std::size_t>(),
                  j.at("normals").get<std::vector<QVector>>());
}

void to_json(nlohmann::json& j, const SaturatedSubsystem& sat) {
  j = {{"span", sat.span},
       {"roots", sat.roots},
       {"positive_roots", sat.positive_roots},
       {"base", weights_to_json(sat.base)},
       {"components", sat.components},
       {"highest_roots", weights_to_json(sat.highest_roots)},
       {"type_label", sat.type_label}};
}

void from_json(const nlohmann::json& j, SaturatedSubsystem& sat) {
  sat.span = j.at("span").get<Subspace>();
  sat.roots = j.at("roots").get<std::vector<int>>();
  sat.positive_roots = j.at("positive_roots").get<std::vector<int>>();
  sat.base = weights_from_json(j.at("base"));
  sat.components = j.at("components").get<std::vector<std::vector<int>>>();
  sat.highest_roots = weights_from_json(j.at("highest_roots"));
  sat.type_label = j.at("type_label").get<std::string>();
}

void to_json(nlohmann::json& j, const Path& p) {
  j = {{"w_index", p.w_index},
       {"chi", weight_to_json(p.chi)},
       {"target", weight_to_json(p.target)},
       {"chain", p.chain},
       {"points", weights_to_json(p.points)},
       {"betas", weights_to_json(p.betas)},
       {"ks", p.ks},
       {"scaling", p.scaling}};
}

void from_json(const nlohmann::json& j, Path& p) {
  p.w_index = j.at("w_index").get<int>();
  p.chi = weight_from_json(j.at("chi"));
  p.target = weight_from_json(j.at("target"));
  p.chain = j.at("chain").get<std::vector<SaturatedSubsystem>>();
  p.points = weights_from_json(j.at("points"));
  p.betas = weights_from_json(j.at("betas"));
  p.ks = j.at("ks").get<std::vector<Rat>>();
  p.scaling = j.at("scaling").get<Int>();
}

void to_json(nlohmann::json& j, const GitFanCone& c) {
  j = {{"cone", c.cone},
       {"interior_sample", weight_to_json(c.interior_sample)},
       {"wst", c.wst}};
}

void from_json(const nlohmann::json& j, GitFanCone& c) {
  c.cone = j.at("cone").get<ConeH>();
  c.interior_sample = weight_from_json(j.at("interior_sample"));
  c.wst = j.at("wst").get<std::vector<int>>();
}

void to_json(nlohmann::json& j, const GitFan& f) {
  j = {{"type", f.type_spec},
       {"rank", f.rank},
       {"walls", f.walls},
       {"chambers_merged", f.chambers_merged},
       {"maximal_cones", f.maximal_cones}};
}

void from_json(const nlohmann::json& j, GitFan& f) {
  f.type_spec = j.at("type").get<std::string>();
  f.rank = j.at("rank").get<int>();
  f.walls = j.at("walls").get<std::vector<QVector>>();
  f.chambers_merged = j.at("chambers_merged").get<int>();
  f.maximal_cones = j.at("maximal_cones").get<std::vector<GitFanCone>>();
}

void to_json(nlohmann::json& j, const PicardConstraintRecord& r) {
  j = {{"w_index", r.w_index},
       {"profile", r.profile},
       {"complement", r.complement}};
}

void from_json(const nlohmann::json& j, PicardConstraintRecord& r) {
  r.w_index = j.at("w_index").get<int>();
  r.profile = j.at("profile").get<Subspace>();
  r.complement = j.at("complement").get<std::vector<QVector>>();
}

void to_json(nlohmann::json& j, const PicardCertificate& c) {
  j = {{"chi", weight_to_json(c.chi)},
       {"constraints", c.constraints},
       {"per_w", c.per_w},
       {"nullspace_basis", c.nullspace_basis},
       {"rank", c.rank},
       {"an_caveat", c.an_caveat}};
}

void from_json(const nlohmann::json& j, PicardCertificate& c) {
  c.chi = weight_from_json(j.at("chi"));
  c.constraints = j.at("constraints").get<QMatrix>();
  c.per_w = j.at("per_w").get<std::vector<PicardConstraintRecord>>();
  c.nullspace_basis = j.at("nullspace_basis").get<QMatrix>();
  c.rank = j.at("rank").get<int>();
  c.an_caveat = j.at("an_caveat").get<bool>();
}

void to_json(nlohmann::json& j, const StabilityReport& r) {
  j = {{"chi", weight_to_json(r.chi)},
       {"semistable", r.wst},
       {"unstable_codim", r.unstable_codim},
       {"sigma", r.sigma},
       {"has_type_a_factor", r.has_type_a_factor}};
}

void from_json(const nlohmann::json& j, StabilityReport& r) {
  r.chi = weight_from_json(j.at("chi"));
  r.wst = j.at("semistable").get<std::vector<int>>();
  r.unstable_codim = j.at("unstable_codim").get<int>();
  r.sigma = j.at("sigma").get<ConeH>();
  r.has_type_a_factor = j.at("has_type_a_factor").get<bool>();
}

}  // namespace flagstab
