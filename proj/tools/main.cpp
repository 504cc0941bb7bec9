#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "polyboson/cli.hpp"

using namespace polyboson;

namespace {

struct FlagValues {
  std::string config_path;
  long n = -1;
  std::string coeffs, preset, kind, param, caps, subst, out;
  long rmax = 4;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void add_common_flags(CLI::App* cmd, FlagValues& fv) {
  cmd->add_option("--config", fv.config_path, "JSON config file; flags override its values");
  cmd->add_option("--n", fv.n, "polynomial degree");
  cmd->add_option("--coeffs", fv.coeffs, "comma-separated c0,c1,... in p/q form");
  cmd->add_option("--preset", fv.preset, "algebra preset: su2 | su11 | higgs:c1:c3 | quadratic:c0:c1:c2");
  cmd->add_option("--kind", fv.kind, "realization kind");
  cmd->add_option("--param", fv.param, "realization parameter, p/q form");
  cmd->add_option("--caps", fv.caps, "comma-separated per-mode caps");
  cmd->add_option("--subst", fv.subst, "mode-3 substitution \"(p,q,coeff);...\"");
  cmd->add_option("--out", fv.out, "output file (default: stdout)");
  cmd->add_option("--seed", fv.seed, "random seed")->each([&fv](const std::string&) { fv.seed_set = true; });
}

std::vector<Rational> parse_rational_list(const std::string& text, const char* field) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      out.push_back(Rational::parse(piece));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(field, e.what());
    }
  }
  return out;
}

std::vector<long> parse_long_list(const std::string& text, const char* field) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      out.push_back(std::stol(piece));
    } catch (const std::exception&) {
      throw ConfigError(field, "not an integer: '" + piece + "'");
    }
  }
  return out;
}

RunConfig build_config(const FlagValues& fv) {
  RunConfig cfg;
  if (!fv.config_path.empty()) cfg = load_config_file(fv.config_path);
  if (fv.n >= 0) cfg.n = fv.n;
  if (!fv.coeffs.empty()) cfg.coeffs = parse_rational_list(fv.coeffs, "coeffs");
  if (!fv.preset.empty()) {
    // "higgs:2:1/3" style; parameters after the name.
    std::stringstream ss(fv.preset);
    std::string piece;
    std::getline(ss, piece, ':');
    cfg.preset = piece;
    cfg.preset_params.clear();
    while (std::getline(ss, piece, ':')) cfg.preset_params.push_back(Rational::parse(piece));
  }
  if (!fv.kind.empty()) cfg.kind = fv.kind;
  if (!fv.param.empty()) {
    try {
      cfg.param = Rational::parse(fv.param);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("param", e.what());
    }
  }
  if (!fv.caps.empty()) cfg.caps = parse_long_list(fv.caps, "caps");
  if (!fv.subst.empty()) cfg.subst = parse_subst(fv.subst);
  if (!fv.out.empty()) cfg.out = fv.out;
  if (fv.seed_set) cfg.seed = fv.seed;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact boson realizations of polynomial su(2) algebras"};
  app.require_subcommand(1);

  FlagValues fv;
  CLI::App* verify = app.add_subcommand("verify", "build a realization and verify it exactly");
  add_common_flags(verify, fv);
  CLI::App* exp = app.add_subcommand("export", "build a realization and export its matrices");
  add_common_flags(exp, fv);
  CLI::App* dr = app.add_subcommand("derive-dr", "derive the D_r constants");
  dr->add_option("--rmax", fv.rmax, "largest r to derive");
  CLI::App* suite = app.add_subcommand("preset-suite", "run all presets across all realization kinds");
  suite->add_option("--seed", fv.seed, "random seed for parameter draws");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(build_config(fv), std::cout, std::cerr);
    if (exp->parsed()) return cmd_export(build_config(fv), std::cout, std::cerr);
    if (dr->parsed()) return cmd_derive_dr(fv.rmax, std::cout);
    if (suite->parsed()) return cmd_preset_suite(fv.seed, std::cout, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
