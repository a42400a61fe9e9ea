#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace slgap::cli {

/// One experiment run. Identical config and seed produce byte-identical
/// output; wall-clock timings only appear when explicitly requested.
struct RunConfig {
  std::vector<long long> f_coeffs = {0, 1};  // defining polynomial, f = x
  std::vector<std::uint64_t> moduli;
  std::string gens = "unipotent";  // builtin name or a generator file
  unsigned k = 4;                  // command-specific exponent / cap
  unsigned lmax = 16;
  std::string method = "auto";  // auto | dense | iterative
  std::string subgroup = "borel";
  unsigned mmax = 64;
  unsigned lcheck = 8;
  unsigned trials = 0;  // growth: random-sample scan rows when > 0
  std::uint64_t seed = 1;
  std::string out;              // empty = stdout
  std::string format = "csv";   // csv | json
  bool timings = false;
};

// exit codes: 0 success, 1 error, 2 hypothesis not met
int cmd_spectral_scan(const RunConfig& cfg, std::ostream& os);
int cmd_flatten(const RunConfig& cfg, std::ostream& os);
int cmd_escape(const RunConfig& cfg, std::ostream& os);
int cmd_growth(const RunConfig& cfg, std::ostream& os);
int cmd_free_cert(const RunConfig& cfg, std::ostream& os);

/// Dispatch by subcommand name; writes to cfg.out or stdout.
int run_command(const std::string& name, const RunConfig& cfg);

void load_config_file(const std::string& path, RunConfig& cfg);

}  // namespace slgap::cli
