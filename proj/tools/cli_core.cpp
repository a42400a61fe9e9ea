#include "cli_core.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "slgap/arch/freecert.hpp"
#include "slgap/errors.hpp"
#include "slgap/groups/subgroups.hpp"
#include "slgap/growth/growth.hpp"
#include "slgap/rng.hpp"
#include "slgap/spectral/spectrum.hpp"
#include "slgap/walks/measure.hpp"

namespace slgap::cli {

namespace {

using algebra::NumberField;
using groups::GroupElem;
using groups::GroupSpec;
using groups::GroupTable;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct GenSet {
  // entries as coefficient vectors, row-major 2x2 (or d x d) matrices
  std::vector<std::vector<std::vector<long long>>> matrices;
  unsigned d = 2;
  // ring description from the file header, when one was present
  std::vector<long long> header_f;
  std::uint64_t header_q = 0;
};

GenSet builtin_unipotent() {
  GenSet g;
  g.d = 2;
  g.matrices = {
      {{1}, {1}, {0}, {1}},   // [[1,1],[0,1]]
      {{1}, {-1}, {0}, {1}},  // inverse
      {{1}, {0}, {1}, {1}},   // [[1,0],[1,1]]
      {{1}, {0}, {-1}, {1}},  // inverse
  };
  return g;
}

GenSet builtin_classical_free() {
  GenSet g;
  g.d = 2;
  g.matrices = {
      {{1}, {2}, {0}, {1}},
      {{1}, {0}, {2}, {1}},
  };
  return g;
}

std::vector<long long> parse_ll_list(const std::string& s, char sep) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(std::stoll(item));
  return out;
}

/// Generator file: header "p1,p2,...;q;f0,f1,..." (q = 0 for exact
/// matrices over O_K), then one matrix per line, d*d entries separated by
/// spaces, each entry a comma-joined coefficient vector.
GenSet parse_gen_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::FactorMismatch, "cannot open generator file " + path);
  std::string header;
  std::getline(in, header);
  GenSet g;
  {
    // "p1,p2,...;q;f0,f1,..." -- the prime list is redundant and ignored
    std::stringstream hs(header);
    std::string primes, qpart, fpart;
    if (std::getline(hs, primes, ';') && std::getline(hs, qpart, ';') &&
        std::getline(hs, fpart)) {
      if (!qpart.empty()) g.header_q = std::stoull(qpart);
      if (!fpart.empty()) g.header_f = parse_ll_list(fpart, ',');
    }
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::vector<long long>> entries;
    std::stringstream ss(line);
    std::string tok;
    while (ss >> tok) entries.push_back(parse_ll_list(tok, ','));
    if (entries.empty()) continue;
    g.matrices.push_back(std::move(entries));
  }
  if (g.matrices.empty()) raise(Errc::EmptyResult, "no matrices in " + path);
  unsigned dd = static_cast<unsigned>(g.matrices[0].size());
  unsigned d = 2;
  while (d * d < dd) ++d;
  if (d * d != dd) raise(Errc::FactorMismatch, "entry count is not a square");
  g.d = d;
  return g;
}

GenSet load_gens(const RunConfig& cfg) {
  if (cfg.gens == "unipotent") return builtin_unipotent();
  if (cfg.gens == "classical") return builtin_classical_free();
  return parse_gen_file(cfg.gens);
}

// flags win over the generator-file header
std::vector<long long> effective_f(const RunConfig& cfg, const GenSet& g) {
  if (cfg.f_coeffs != std::vector<long long>{0, 1} || g.header_f.empty())
    return cfg.f_coeffs;
  return g.header_f;
}

std::vector<std::uint64_t> effective_moduli(const RunConfig& cfg,
                                            const GenSet& g) {
  if (!cfg.moduli.empty() || g.header_q == 0) return cfg.moduli;
  return {g.header_q};
}

std::vector<std::uint32_t> project_gens(const GenSet& g,
                                        const groups::TablePtr& table,
                                        const algebra::RingPtr& ring) {
  std::vector<std::uint32_t> S;
  for (const auto& mat : g.matrices) {
    std::vector<algebra::RingElem> entries;
    for (const auto& c : mat) entries.push_back(ring->from_coeffs(c));
    GroupElem e(ring, g.d, std::move(entries));
    S.push_back(table->index_of(e));
  }
  return S;
}

std::ostream& output_stream(const RunConfig& cfg, std::ofstream& file) {
  if (cfg.out.empty()) return std::cout;
  file.open(cfg.out, std::ios::binary);
  if (!file) raise(Errc::FactorMismatch, "cannot open output " + cfg.out);
  return file;
}

}  // namespace

int cmd_spectral_scan(const RunConfig& cfg, std::ostream& os) {
  auto gens = load_gens(cfg);
  std::vector<std::uint64_t> moduli = cfg.moduli;
  std::sort(moduli.begin(), moduli.end());

  nlohmann::json jrows = nlohmann::json::array();
  if (cfg.format == "csv")
    os << "q,group_order,degree,lambda2,gap,method,residual,seconds,error\n";
  for (auto q : moduli) {
    std::string error;
    double lambda2 = 0, gap = 0, residual = 0, seconds = 0;
    std::string method;
    std::string order_str;
    std::size_t degree = 0;
    try {
      auto t0 = std::chrono::steady_clock::now();
      NumberField K = NumberField::make(cfg.f_coeffs);
      auto ring = algebra::make_residue_ring(K, q);
      auto spec = GroupSpec::make(ring, gens.d);
      bool dense = cfg.method == "dense" ||
                   (cfg.method == "auto" && spec.order <= spectral::kDenseCap);
      auto table = GroupTable::from_spec(spec, 500000);
      auto S = project_gens(gens, table, ring);
      degree = S.size();
      order_str = spec.order.get_str();
      spectral::CayleyOperator op(table, S,
                                  dense ? spectral::CayleyOperator::Mode::Dense
                                        : spectral::CayleyOperator::Mode::MatrixFree);
      auto rep = spectral::spectrum_top2(op);
      lambda2 = rep.lambda2;
      gap = rep.gap;
      residual = rep.residual;
      method = rep.method;
      auto t1 = std::chrono::steady_clock::now();
      if (cfg.timings)
        seconds = std::chrono::duration<double>(t1 - t0).count();
    } catch (const Error& e) {
      error = errc_name(e.code());
    }
    if (cfg.format == "csv") {
      os << q << ',' << order_str << ',' << degree << ',' << fmt(lambda2)
         << ',' << fmt(gap) << ',' << method << ',' << fmt(residual) << ','
         << fmt(seconds) << ',' << error << "\n";
    } else {
      nlohmann::json row;
      row["q"] = q;
      row["group_order"] = order_str;
      row["degree"] = degree;
      row["lambda2"] = lambda2;
      row["gap"] = gap;
      row["method"] = method;
      row["residual"] = residual;
      row["seconds"] = seconds;
      row["error"] = error;
      jrows.push_back(row);
    }
  }
  if (cfg.format == "json") os << jrows.dump(2) << "\n";
  return 0;
}

int cmd_flatten(const RunConfig& cfg, std::ostream& os) {
  auto gens = load_gens(cfg);
  auto moduli = effective_moduli(cfg, gens);
  if (moduli.empty()) raise(Errc::FactorMismatch, "need a modulus");
  NumberField K = NumberField::make(effective_f(cfg, gens));
  auto ring = algebra::make_residue_ring(K, moduli[0]);
  auto spec = GroupSpec::make(ring, gens.d);
  auto table = GroupTable::from_spec(spec);
  auto S = project_gens(gens, table, ring);
  auto trace = walks::flatten_trace(table, S, cfg.k);

  if (cfg.format == "csv") {
    os << "k,l2_norm_num,l2_norm_den,entropy,support\n";
    for (const auto& row : trace.rows)
      os << row.k << ',' << row.l2sq_num.get_str() << ','
         << row.l2sq_den.get_str() << ',' << fmt(row.entropy) << ','
         << row.support << "\n";
    os << "# k_star=" << trace.k_star << " ratio=" << fmt(trace.ratio) << "\n";
  } else {
    nlohmann::json j;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : trace.rows) {
      rows.push_back({{"k", row.k},
                      {"l2_norm_num", row.l2sq_num.get_str()},
                      {"l2_norm_den", row.l2sq_den.get_str()},
                      {"entropy", row.entropy},
                      {"support", row.support}});
    }
    j["rows"] = rows;
    j["k_star"] = trace.k_star;
    j["ratio"] = trace.ratio;
    os << j.dump(2) << "\n";
  }
  return trace.k_star > 0 ? 0 : 2;
}

namespace {

groups::SubgroupDescriptor atlas_by_name(std::uint64_t p,
                                         const std::string& name) {
  using Kind = groups::SubgroupDescriptor::Kind;
  Kind want;
  if (name == "center") want = Kind::Center;
  else if (name == "split") want = Kind::SplitTorus;
  else if (name == "nonsplit") want = Kind::NonsplitTorus;
  else if (name == "splitnorm") want = Kind::TorusNormalizerSplit;
  else if (name == "nonsplitnorm") want = Kind::TorusNormalizerNonsplit;
  else if (name == "borel") want = Kind::Borel;
  else raise(Errc::AtlasUnavailable, "unknown subgroup " + name);
  for (auto& H : groups::subgroup_atlas(p))
    if (H.kind == want) return H;
  raise(Errc::AtlasUnavailable, "family missing");
}

}  // namespace

int cmd_escape(const RunConfig& cfg, std::ostream& os) {
  if (cfg.moduli.empty()) raise(Errc::FactorMismatch, "need a modulus");
  std::uint64_t q = cfg.moduli[0];
  if (cfg.f_coeffs != std::vector<long long>{0, 1})
    raise(Errc::AtlasUnavailable, "escape subcommand runs over f = x");
  auto gens = load_gens(cfg);
  NumberField K = NumberField::make(cfg.f_coeffs);
  auto ring = algebra::make_residue_ring(K, q);
  auto spec = GroupSpec::make(ring, gens.d);
  auto table = GroupTable::from_spec(spec);
  auto S = project_gens(gens, table, ring);

  auto H = atlas_by_name(q, cfg.subgroup);
  std::vector<std::uint32_t> Hidx;
  for (const auto& h : H.elements) Hidx.push_back(table->index_of(h));

  std::vector<unsigned> ls;
  for (unsigned l = 2; l <= cfg.lmax; l += 2) ls.push_back(l);
  auto profile = walks::escape_profile(table, S, Hidx, ls);

  if (cfg.format == "csv") {
    os << "l,mass_num,mass_den,delta\n";
    for (const auto& row : profile.rows)
      os << row.l << ',' << row.mass.get_num().get_str() << ','
         << row.mass.get_den().get_str() << ',' << fmt(row.delta) << "\n";
    os << "# fitted_delta=" << fmt(profile.fitted_delta)
       << " monotone=" << profile.monotone << " no_escape=" << profile.no_escape
       << "\n";
  } else {
    nlohmann::json j;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : profile.rows)
      rows.push_back({{"l", row.l},
                      {"mass_num", row.mass.get_num().get_str()},
                      {"mass_den", row.mass.get_den().get_str()},
                      {"delta", row.delta}});
    j["rows"] = rows;
    j["fitted_delta"] = profile.fitted_delta;
    j["monotone"] = profile.monotone;
    j["no_escape"] = profile.no_escape;
    os << j.dump(2) << "\n";
  }
  return profile.no_escape ? 2 : 0;
}

int cmd_growth(const RunConfig& cfg, std::ostream& os) {
  if (cfg.gens == "random" && cfg.trials > 0) {
    // scan CSV over random symmetric samples, one row per trial
    if (cfg.moduli.empty()) raise(Errc::FactorMismatch, "need a modulus");
    NumberField K = NumberField::make(cfg.f_coeffs);
    os << "p,trial,size,size_3,delta_hat\n";
    for (auto q : cfg.moduli) {
      auto ring = algebra::make_residue_ring(K, q);
      auto table = GroupTable::from_spec(GroupSpec::make(ring, 2));
      for (unsigned trial = 0; trial < cfg.trials; ++trial) {
        auto rng = SplitMix64::fork(cfg.seed, q * 1000 + trial);
        std::vector<std::uint32_t> v;
        unsigned pairs = 2 + static_cast<unsigned>(rng.below(4));
        for (unsigned i = 0; i < pairs; ++i) {
          auto g = static_cast<std::uint32_t>(rng.below(table->size()));
          v.push_back(g);
          v.push_back(table->inv(g));
        }
        auto S = growth::make_set(std::move(v));
        auto rep = growth::tripling_report(*table, S, {3});
        os << q << ',' << trial << ',' << rep.size_1 << ',' << rep.size_3
           << ',' << fmt(rep.delta_hat) << "\n";
      }
    }
    return 0;
  }

  auto gens = load_gens(cfg);
  auto moduli = effective_moduli(cfg, gens);
  if (moduli.empty()) raise(Errc::FactorMismatch, "need a modulus");
  NumberField K = NumberField::make(effective_f(cfg, gens));
  auto ring = algebra::make_residue_ring(K, moduli[0]);
  auto spec = GroupSpec::make(ring, gens.d);
  auto table = GroupTable::from_spec(spec);
  auto S0 = project_gens(gens, table, ring);
  auto S = growth::symmetrize(*table, growth::make_set(S0));

  std::vector<unsigned> ks;
  for (unsigned k = 3; k <= std::max(3u, cfg.k); ++k) ks.push_back(k);
  auto rep = growth::tripling_report(*table, S, ks);
  if (cfg.format == "json") {
    os << rep.to_json().dump(2) << "\n";
  } else {
    os << "k,size\n";
    os << 1 << ',' << rep.size_1 << "\n";
    os << 3 << ',' << rep.size_3 << "\n";
    for (auto& [k, v] : rep.sizes_k)
      if (k != 3) os << k << ',' << v << "\n";
    os << "# delta_hat=" << fmt(rep.delta_hat) << " regime_ok=" << rep.regime_ok
       << "\n";
  }
  return 0;
}

int cmd_free_cert(const RunConfig& cfg, std::ostream& os) {
  auto gens = cfg.gens == "unipotent" ? builtin_classical_free() : load_gens(cfg);
  NumberField K = NumberField::make(effective_f(cfg, gens));
  arch::OkRing R(K);
  arch::EmbeddingSet emb(K);
  std::vector<arch::OkMatrix> A;
  for (const auto& mat : gens.matrices)
    A.push_back(arch::ok_from_coeffs(R, gens.d, mat));

  std::size_t i1 = 0, i2 = emb.count() > 1 ? 1 : 0;
  try {
    auto cert = arch::power_up(R, A, emb, i1, i2, cfg.mmax, cfg.lcheck);
    os << cert.to_json().dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    if (e.code() != Errc::FreenessUnverified && e.code() != Errc::NoSuchM)
      throw;
    nlohmann::json j;
    j["free"] = false;
    j["error"] = errc_name(e.code());
    j["detail"] = e.what();
    j["L_check"] = cfg.lcheck;
    os << j.dump(2) << "\n";
    return 2;
  }
}

int run_command(const std::string& name, const RunConfig& cfg) {
  std::ofstream file;
  std::ostream& os = output_stream(cfg, file);
  try {
    if (name == "spectral-scan") return cmd_spectral_scan(cfg, os);
    if (name == "flatten") return cmd_flatten(cfg, os);
    if (name == "escape") return cmd_escape(cfg, os);
    if (name == "growth") return cmd_growth(cfg, os);
    if (name == "free-cert") return cmd_free_cert(cfg, os);
    std::cerr << "unknown command " << name << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) raise(Errc::FactorMismatch, "cannot open config " + path);
  nlohmann::json j;
  in >> j;
  if (j.contains("f")) cfg.f_coeffs = j["f"].get<std::vector<long long>>();
  if (j.contains("q")) cfg.moduli = j["q"].get<std::vector<std::uint64_t>>();
  if (j.contains("gens")) cfg.gens = j["gens"].get<std::string>();
  if (j.contains("k")) cfg.k = j["k"].get<unsigned>();
  if (j.contains("lmax")) cfg.lmax = j["lmax"].get<unsigned>();
  if (j.contains("method")) cfg.method = j["method"].get<std::string>();
  if (j.contains("subgroup")) cfg.subgroup = j["subgroup"].get<std::string>();
  if (j.contains("mmax")) cfg.mmax = j["mmax"].get<unsigned>();
  if (j.contains("lcheck")) cfg.lcheck = j["lcheck"].get<unsigned>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("out")) cfg.out = j["out"].get<std::string>();
  if (j.contains("format")) cfg.format = j["format"].get<std::string>();
  if (j.contains("timings")) cfg.timings = j["timings"].get<bool>();
}

}  // namespace slgap::cli
