#pragma once

#include <string>

#include "json.hpp"

#include "flagstab/gitfan.hpp"
#include "flagstab/linalg.hpp"
#include "flagstab/picard.hpp"
#include "flagstab/rational.hpp"
#include "flagstab/saturated.hpp"
#include "flagstab/stability.hpp"

// Exact JSON encodings: rationals as "p/q" strings, big integers as decimal
// strings, weights as {"basis", "coords"} objects. Every encoder here has a
// decoder that restores the identical in-memory value.

namespace nlohmann {

template <>
struct adl_serializer<mpq_class> {
  static void to_json(json& j, const mpq_class& r) {
    j = flagstab::rat_to_string(r);
  }
  static void from_json(const json& j, mpq_class& r) {
    r = flagstab::rat_from_string(j.get<std::string>());
  }
};

template <>
struct adl_serializer<mpz_class> {
  static void to_json(json& j, const mpz_class& n) { j = n.get_str(); }
  static void from_json(const json& j, mpz_class& n) {
    n = mpz_class(j.get<std::string>(), 10);
  }
};

}  // namespace nlohmann

namespace flagstab {

// Vectors living in the weight space carry an explicit basis tag.
nlohmann::json weight_to_json(const QVector& simple_coords);
QVector weight_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const QMatrix& m);
void from_json(const nlohmann::json& j, QMatrix& m);

void to_json(nlohmann::json& j, const Subspace& s);
void from_json(const nlohmann::json& j, Subspace& s);

void to_json(nlohmann::json& j, const ConeH& c);
void from_json(const nlohmann::json& j, ConeH& c);

void to_json(nlohmann::json& j, const SaturatedSubsystem& sat);
void from_json(const nlohmann::json& j, SaturatedSubsystem& sat);

void to_json(nlohmann::json& j, const Path& p);
void from_json(const nlohmann::json& j, Path& p);

void to_json(nlohmann::json& j, const GitFanCone& c);
void from_json(const nlohmann::json& j, GitFanCone& c);

void to_json(nlohmann::json& j, const GitFan& f);
void from_json(const nlohmann::json& j, GitFan& f);

void to_json(nlohmann::json& j, const PicardConstraintRecord& r);
void from_json(const nlohmann::json& j, PicardConstraintRecord& r);

void to_json(nlohmann::json& j, const PicardCertificate& c);
void from_json(const nlohmann::json& j, PicardCertificate& c);

void to_json(nlohmann::json& j, const StabilityReport& r);
void from_json(const nlohmann::json& j, StabilityReport& r);

}  // namespace flagstab
