#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "flagstab/jobs.hpp"

namespace {

std::vector<flagstab::Rat> parse_rat_list(const std::string& text,
                                          const std::string& field) {
  std::vector<flagstab::Rat> out;
  std::string cur;
  auto flush = [&] {
    try {
      out.push_back(flagstab::rat_from_string(cur));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(field + ": " + e.what());
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact GIT data of the maximal-torus action on a flag variety"};
  app.require_subcommand(1);

  flagstab::JobSpec job;
  std::string chi_text;
  std::string lambda_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("type", job.type_spec,
                    "Root system type, e.g. B4, G2, A1xB2")
        ->required();
    sub->add_option("--threads", job.threads,
                    "Worker threads (default: FLAGSTAB_THREADS or all cores)");
    sub->add_flag("--compact", job.compact, "Single-line JSON output");
  };
  auto add_chi = [&](CLI::App* sub) {
    sub->add_option("--chi", chi_text,
                    "Weight coordinates, comma separated, e.g. 10,1,8,2")
        ->required();
    sub->add_option("--basis", job.basis,
                    "Coordinate basis for --chi/--lambda")
        ->check(CLI::IsMember({"fundamental", "epsilon"}));
  };

  CLI::App* wst = app.add_subcommand(
      "wst", "Semistable Weyl elements and the unstable-locus codimension");
  add_common(wst);
  add_chi(wst);

  CLI::App* fan = app.add_subcommand(
      "fan", "Decomposition of the Weyl chamber by semistable data");
  add_common(fan);
  fan->add_option("--svg", job.svg_path, "Write a rank-2 wall diagram here");
  fan->add_flag("--validate", job.validate, "Run the fan self-checks");
  fan->add_option("--seed", job.seed, "Seed for validation sampling");
  fan->add_flag("--allow-large", job.allow_large,
                "Lift the default rank guard (hard limit stays at 6)");

  CLI::App* picard = app.add_subcommand(
      "picard", "Rank certificate for the Picard group of the quotient");
  add_common(picard);
  add_chi(picard);

  CLI::App* path = app.add_subcommand(
      "path", "Piecewise-linear path certificate for one group element");
  add_common(path);
  add_chi(path);
  path->add_option("--w", job.w_index, "Group element index")->required();
  path->add_option("--sat", job.sat_index,
                   "Subsystem index from `saturated` (default: full system)");

  CLI::App* saturated = app.add_subcommand(
      "saturated", "All saturated root subsystems");
  add_common(saturated);

  CLI::App* codim = app.add_subcommand(
      "codim", "Codimension of the unstable locus");
  add_common(codim);
  add_chi(codim);

  CLI::App* mu = app.add_subcommand(
      "mu", "Numerical stability value of one cell against one subgroup");
  add_common(mu);
  add_chi(mu);
  mu->add_option("--w", job.w_index, "Group element index")->required();
  mu->add_option("--lambda", lambda_text,
                 "One-parameter subgroup coordinates, comma separated")
      ->required();

  CLI::App* lemma = app.add_subcommand(
      "lemma110", "Fundamental-weight margins of an irreducible system");
  add_common(lemma);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  job.command = app.get_subcommands().front()->get_name();
  try {
    if (!chi_text.empty()) job.chi = parse_rat_list(chi_text, "chi");
    if (!lambda_text.empty()) job.lambda = parse_rat_list(lambda_text, "lambda");
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  const flagstab::JobResult res = flagstab::run_job(job);
  if (!res.output.empty()) std::cout << res.output;
  if (!res.error.empty()) std::cerr << res.error << "\n";
  return res.exit_code;
}
