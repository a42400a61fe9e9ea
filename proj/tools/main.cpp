#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_core.hpp"

int main(int argc, char** argv) {
  CLI::App app{"desk-scale expansion experiments for SL_d over residue rings"};
  app.require_subcommand(1);

  slgap::cli::RunConfig cfg;
  std::string config_path;
  std::string f_arg, q_arg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file (flags win)");
    sub->add_option("--f", f_arg,
                    "defining polynomial coefficients c0,c1,... (monic)");
    sub->add_option("--q", q_arg, "modulus or comma-separated modulus list");
    sub->add_option("--gens", cfg.gens,
                    "generator file, or builtin: unipotent, classical");
    sub->add_option("--k", cfg.k, "walk / product exponent (command-specific)");
    sub->add_option("--lmax", cfg.lmax, "largest walk length");
    sub->add_option("--method", cfg.method, "auto | dense | iterative");
    sub->add_option("--subgroup", cfg.subgroup,
                    "center|split|nonsplit|splitnorm|nonsplitnorm|borel");
    sub->add_option("--mmax", cfg.mmax, "largest power M tried");
    sub->add_option("--trials", cfg.trials, "random trials (growth scan)");
    sub->add_option("--lcheck", cfg.lcheck, "word length for the exact check");
    sub->add_option("--seed", cfg.seed, "master seed");
    sub->add_option("--out", cfg.out, "output path (default stdout)");
    sub->add_option("--format", cfg.format, "csv | json");
    sub->add_flag("--timings", cfg.timings, "include wall-clock seconds");
  };

  for (const char* name : {"spectral-scan", "flatten", "escape", "growth",
                           "free-cert"})
    add_common(app.add_subcommand(name));

  CLI11_PARSE(app, argc, argv);

  // config file first, explicit flags win
  if (!config_path.empty()) {
    slgap::cli::RunConfig file_cfg;
    slgap::cli::load_config_file(config_path, file_cfg);
    // fields not given on the command line fall back to the file
    slgap::cli::RunConfig merged = file_cfg;
    auto* sub = app.get_subcommands().front();
    if (sub->count("--gens")) merged.gens = cfg.gens;
    if (sub->count("--k")) merged.k = cfg.k;
    if (sub->count("--lmax")) merged.lmax = cfg.lmax;
    if (sub->count("--method")) merged.method = cfg.method;
    if (sub->count("--subgroup")) merged.subgroup = cfg.subgroup;
    if (sub->count("--mmax")) merged.mmax = cfg.mmax;
    if (sub->count("--trials")) merged.trials = cfg.trials;
    if (sub->count("--lcheck")) merged.lcheck = cfg.lcheck;
    if (sub->count("--seed")) merged.seed = cfg.seed;
    if (sub->count("--out")) merged.out = cfg.out;
    if (sub->count("--format")) merged.format = cfg.format;
    if (sub->count("--timings")) merged.timings = cfg.timings;
    cfg = merged;
  }
  if (!f_arg.empty()) {
    cfg.f_coeffs.clear();
    std::size_t pos = 0;
    while (pos < f_arg.size()) {
      std::size_t next = f_arg.find(',', pos);
      if (next == std::string::npos) next = f_arg.size();
      cfg.f_coeffs.push_back(std::stoll(f_arg.substr(pos, next - pos)));
      pos = next + 1;
    }
  }
  if (!q_arg.empty()) {
    cfg.moduli.clear();
    std::size_t pos = 0;
    while (pos < q_arg.size()) {
      std::size_t next = q_arg.find(',', pos);
      if (next == std::string::npos) next = q_arg.size();
      cfg.moduli.push_back(std::stoull(q_arg.substr(pos, next - pos)));
      pos = next + 1;
    }
  }

  return slgap::cli::run_command(app.get_subcommands().front()->get_name(), cfg);
}
