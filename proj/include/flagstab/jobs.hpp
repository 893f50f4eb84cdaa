#pragma once

#include <string>
#include <vector>

#include "flagstab/rational.hpp"

namespace flagstab {

// One CLI invocation, already parsed but not yet validated. chi and lambda
// are kept exactly as entered; `basis` says how to read them ("fundamental"
// or "epsilon").
struct JobSpec {
  std::string command;  // wst fan picard path saturated codim mu lemma110
  std::string type_spec;
  std::vector<Rat> chi;
  std::string basis = "fundamental";
  int w_index = -1;     // path, mu
  int sat_index = -1;   // path; -1 selects the full subsystem
  std::vector<Rat> lambda;  // mu
  std::string svg_path;     // fan, rank 2 only
  bool validate = false;    // fan
  unsigned long seed = 1;   // fan validation sampling
  bool allow_large = false; // lifts the fan rank guard up to the hard limit
  int threads = 0;          // 0 keeps the environment setting
  bool compact = false;     // single-line JSON
};

struct JobResult {
  int exit_code = 0;   // 0 ok, 2 invalid input, 3 scale guard
  std::string output;  // JSON on success
  std::string error;   // diagnostic for nonzero exits
};

JobResult run_job(const JobSpec& job);

}  // namespace flagstab
