#include "flagstab/jobs.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

#include "flagstab/gitfan.hpp"
#include "flagstab/parallel.hpp"
#include "flagstab/picard.hpp"
#include "flagstab/saturated.hpp"
#include "flagstab/serialize.hpp"
#include "flagstab/stability.hpp"
#include "flagstab/weyl.hpp"

namespace flagstab {

namespace {

// Applies the job's thread request for the duration of one run and then puts
// the previous setting back, so embedding callers are unaffected.
struct ParallelismScope {
  int saved;
  explicit ParallelismScope(int requested)
      : saved(detail::parallelism_slot().load()) {
    if (requested != 0) set_parallelism(requested);
  }
  ~ParallelismScope() { detail::parallelism_slot().store(saved); }
};

QVector read_weight(const RootSystem& rs, const std::vector<Rat>& coords,
                    const std::string& basis, const std::string& field) {
  if (basis == "fundamental") {
    if (static_cast<int>(coords.size()) != rs.rank) {
      throw std::invalid_argument(
          field + ": expected " + std::to_string(rs.rank) +
          " fundamental coordinates for " + rs.type_spec + " (got " +
          std::to_string(coords.size()) + ")");
    }
    return fundamental_to_simple(rs, coords);
  }
  if (basis == "epsilon") {
    if (!rs.has_epsilon) {
      throw std::invalid_argument(
          "basis: epsilon coordinates are only defined for classical types");
    }
    if (static_cast<int>(coords.size()) != rs.epsilon_dim) {
      throw std::invalid_argument(
          field + ": expected " + std::to_string(rs.epsilon_dim) +
          " epsilon coordinates for " + rs.type_spec + " (got " +
          std::to_string(coords.size()) + ")");
    }
    return epsilon_to_simple(rs, coords);
  }
  throw std::invalid_argument("basis: must be \"fundamental\" or \"epsilon\"");
}

QVector require_chi(const RootSystem& rs, const JobSpec& job) {
  if (job.chi.empty()) {
    throw std::invalid_argument("chi: required for command " + job.command);
  }
  return read_weight(rs, job.chi, job.basis, "chi");
}

int require_w(const WeylGroup& wg, const JobSpec& job) {
  if (job.w_index < 0 || job.w_index >= static_cast<int>(wg.order())) {
    throw std::invalid_argument(
        "w: index must lie in [0, " + std::to_string(wg.order()) + ") for " +
        wg.root_system().type_spec);
  }
  return job.w_index;
}

nlohmann::json element_json(const WeylElement& e) {
  return {{"index", e.index}, {"length", e.length}, {"matrix", e.matrix}};
}

nlohmann::json run_wst(const WeylGroup& wg, const JobSpec& job) {
  const StabilityReport report =
      stability_report(wg, require_chi(wg.root_system(), job));
  nlohmann::json j = report;
  nlohmann::json elems = nlohmann::json::array();
  for (int idx : report.wst) elems.push_back(element_json(wg.element(idx)));
  j["semistable_elements"] = elems;
  return j;
}

nlohmann::json run_codim(const WeylGroup& wg, const JobSpec& job) {
  const QVector chi = require_chi(wg.root_system(), job);
  return {{"chi", weight_to_json(chi)},
          {"unstable_codim", unstable_codimension(wg, chi)}};
}

nlohmann::json run_mu(const WeylGroup& wg, const JobSpec& job) {
  const RootSystem& rs = wg.root_system();
  const QVector chi = require_chi(rs, job);
  const int w = require_w(wg, job);
  if (job.lambda.empty()) {
    throw std::invalid_argument("lambda: required for command mu");
  }
  const QVector lambda = read_weight(rs, job.lambda, job.basis, "lambda");
  const Rat value = mumford_mu(rs, chi, wg.element(w).matrix, lambda);
  return {{"chi", weight_to_json(chi)},
          {"w", w},
          {"lambda", weight_to_json(lambda)},
          {"value", value}};
}

nlohmann::json run_lemma110(const RootSystem& rs) {
  const std::vector<Rat> margins = fundamental_weight_margins(rs);
  bool all_nonnegative = true;
  for (const Rat& m : margins) {
    if (m < 0) all_nonnegative = false;
  }
  return {{"margins", margins}, {"all_nonnegative", all_nonnegative}};
}

nlohmann::json run_saturated(const RootSystem& rs) {
  const std::vector<SaturatedSubsystem> sats = enumerate_saturated(rs);
  nlohmann::json j = {{"count", sats.size()}};
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < sats.size(); ++i) {
    nlohmann::json item = sats[i];
    item["index"] = i;
    arr.push_back(item);
  }
  j["subsystems"] = arr;
  return j;
}

nlohmann::json run_fan(const WeylGroup& wg, const JobSpec& job) {
  const GitFan fan = compute_fan(wg, job.allow_large);
  nlohmann::json j = fan;
  if (job.validate) {
    const FanValidation v = validate_fan(fan, wg, 100, job.seed);
    j["validation"] = {{"ok", v.ok}, {"problems", v.problems}};
  }
  if (!job.svg_path.empty()) {
    const std::string svg = fan_svg(fan, wg);
    std::ofstream out(job.svg_path);
    out << svg;
    if (!out.good()) {
      throw std::invalid_argument("svg: cannot write " + job.svg_path);
    }
    j["svg_written"] = job.svg_path;
  }
  return j;
}

nlohmann::json run_picard(const WeylGroup& wg, const JobSpec& job) {
  return picard_certificate(wg, require_chi(wg.root_system(), job));
}

nlohmann::json run_path(const WeylGroup& wg, const JobSpec& job) {
  const RootSystem& rs = wg.root_system();
  const QVector chi = require_chi(rs, job);
  const int w = require_w(wg, job);
  const std::vector<SaturatedSubsystem> sats = enumerate_saturated(rs);
  int sat_index = job.sat_index;
  if (sat_index == -1) {
    for (std::size_t i = 0; i < sats.size(); ++i) {
      if (sats[i].span.is_full()) sat_index = static_cast<int>(i);
    }
  }
  if (sat_index < 0 || sat_index >= static_cast<int>(sats.size())) {
    throw std::invalid_argument(
        "sat: index must lie in [0, " + std::to_string(sats.size()) + ") for " +
        rs.type_spec);
  }
  nlohmann::json j = build_path(wg, sats[sat_index], w, chi);
  j["sat_index"] = sat_index;
  return j;
}

}  // namespace

JobResult run_job(const JobSpec& job) {
  JobResult res;
  ParallelismScope scope(job.threads);
  try {
    const RootSystem rs = build_root_system(job.type_spec);
    nlohmann::json payload;
    if (job.command == "lemma110") {
      payload = run_lemma110(rs);
    } else if (job.command == "saturated") {
      payload = run_saturated(rs);
    } else {
      WeylGroup wg = WeylGroup::enumerate(rs);
      if (job.command == "wst") {
        payload = run_wst(wg, job);
      } else if (job.command == "codim") {
        payload = run_codim(wg, job);
      } else if (job.command == "mu") {
        payload = run_mu(wg, job);
      } else if (job.command == "fan") {
        payload = run_fan(wg, job);
      } else if (job.command == "picard") {
        payload = run_picard(wg, job);
      } else if (job.command == "path") {
        payload = run_path(wg, job);
      } else {
        throw std::invalid_argument("command: unknown \"" + job.command + "\"");
      }
    }
    payload["schema_version"] = 1;
    payload["command"] = job.command;
    payload["type"] = rs.type_spec;
    res.output = (job.compact ? payload.dump() : payload.dump(2)) + "\n";
  } catch (const ScaleGuardError& e) {
    res.exit_code = 3;
    res.error = e.what();
  } catch (const std::invalid_argument& e) {
    res.exit_code = 2;
    res.error = e.what();
  } catch (const std::exception& e) {
    res.exit_code = 1;
    res.error = e.what();
  }
  return res;
}

}  // namespace flagstab
