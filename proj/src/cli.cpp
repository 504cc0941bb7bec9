#include "polyboson/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "polyboson/export.hpp"
#include "polyboson/sampling.hpp"
#include "polyboson/verifier.hpp"

namespace polyboson {

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config", std::string("parse error: ") + e.what());
  }
  RunConfig cfg;
  try {
    if (j.contains("algebra")) {
      const auto& a = j["algebra"];
      if (a.contains("preset")) {
        cfg.preset = a["preset"].get<std::string>();
        for (const char* key : {"c0", "c1", "c2", "c3"})
          if (a.contains(key)) cfg.preset_params.push_back(Rational::parse(a[key].get<std::string>()));
      }
      if (a.contains("n")) cfg.n = a["n"].get<long>();
      if (a.contains("coeffs")) {
        std::vector<Rational> cs;
        for (const auto& c : a["coeffs"]) cs.push_back(Rational::parse(c.get<std::string>()));
        cfg.coeffs = std::move(cs);
      }
    }
    if (j.contains("kind")) cfg.kind = j["kind"].get<std::string>();
    if (j.contains("param")) cfg.param = Rational::parse(j["param"].get<std::string>());
    if (j.contains("caps")) cfg.caps = j["caps"].get<std::vector<long>>();
    if (j.contains("subst"))
      for (const auto& t : j["subst"])
        cfg.subst.push_back({t.at(0).get<long>(), t.at(1).get<long>(),
                             Rational::parse(t.at(2).get<std::string>())});
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config", std::string("bad field: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError("config", e.what());
  }
  return cfg;
}

std::vector<ModeTerm> parse_subst(const std::string& text) {
  std::vector<ModeTerm> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ';')) {
    if (piece.empty()) continue;
    long p = 0, q = 0;
    char coeff_buf[128];
    if (std::sscanf(piece.c_str(), " ( %ld , %ld , %127[^)] )", &p, &q, coeff_buf) != 3)
      throw ConfigError("subst", "expected '(p,q,coeff);...' got '" + piece + "'");
    std::string coeff(coeff_buf);
    while (!coeff.empty() && coeff.back() == ' ') coeff.pop_back();
    out.push_back({p, q, Rational::parse(coeff)});
  }
  return out;
}

AlgebraSpec algebra_from_config(const RunConfig& cfg) {
  try {
    if (cfg.preset) {
      const std::string& p = *cfg.preset;
      if (p == "su2") return preset_su2();
      if (p == "su11") return preset_su11();
      if (p == "higgs") {
        if (cfg.preset_params.size() != 2)
          throw ConfigError("algebra.preset", "higgs needs parameters c1, c3");
        return preset_higgs(cfg.preset_params[0], cfg.preset_params[1]);
      }
      if (p == "quadratic") {
        if (cfg.preset_params.size() != 3)
          throw ConfigError("algebra.preset", "quadratic needs parameters c0, c1, c2");
        return preset_quadratic(cfg.preset_params[0], cfg.preset_params[1], cfg.preset_params[2]);
      }
      throw ConfigError("algebra.preset", "unknown preset '" + p + "'");
    }
    if (!cfg.n || !cfg.coeffs) throw ConfigError("algebra", "need either a preset or n + coeffs");
    return make_algebra(*cfg.n, *cfg.coeffs);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("algebra", e.what());
  }
}

namespace {

long needed_rmax(const AlgebraSpec& alg) {
  // Enough for the builders and for the five-entry provenance table.
  return std::max(4L, alg.n / 2 - 1);
}

}  // namespace

RealizationSet realization_from_config(const RunConfig& cfg, const DrTable& dr,
                                       std::ostream& err) {
  AlgebraSpec alg = algebra_from_config(cfg);
  if (!cfg.kind) throw ConfigError("kind", "missing");
  RealizationKind kind;
  try {
    kind = kind_from_name(*cfg.kind);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("kind", e.what());
  }
  if (kind_has_parameter(kind) && !cfg.param)
    throw ConfigError("param", "required for kind " + *cfg.kind);
  if (!kind_has_parameter(kind) && cfg.param)
    throw ConfigError("param", "not applicable for kind " + *cfg.kind);
  if (!cfg.caps) throw ConfigError("caps", "missing");
  if (cfg.caps->size() != kind_mode_count(kind))
    throw ConfigError("caps", "kind " + *cfg.kind + " needs " +
                                  std::to_string(kind_mode_count(kind)) + " caps");
  if (!cfg.subst.empty() && kind != RealizationKind::three_boson)
    throw ConfigError("subst", "only applies to kind three_boson");
  SpaceSpec spec{*cfg.caps};

  switch (kind) {
    case RealizationKind::fock3:
      return build_fock_rep(alg, spec);
    case RealizationKind::three_boson: {
      RealizationSet r = build_three_boson(alg, spec, dr);
      if (!cfg.subst.empty()) return substitute_mode3(r, cfg.subst, dr);
      return r;
    }
    case RealizationKind::two_boson_central:
      return build_two_boson_central(alg, *cfg.param, spec, dr);
    case RealizationKind::two_boson_lowering:
      return build_two_boson_lowering(alg, *cfg.param, spec, dr);
    case RealizationKind::single_boson:
      return build_single_boson(alg, *cfg.param, spec, dr);
  }
  throw std::logic_error("realization_from_config: bad kind");
  (void)err;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    f << content;
  }
  std::filesystem::rename(tmp, target);
}

namespace {

int exit_code_for(const VerificationReport& rep) {
  if (rep.any_failed()) return kExitFail;
  if (rep.any_vacuous()) return kExitVacuous;
  return kExitPass;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out)
    write_file_atomic(*cfg.out, text);
  else
    out << text;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  AlgebraSpec alg = algebra_from_config(cfg);
  DrTable dr = derive_dr(needed_rmax(alg));
  RealizationSet r = realization_from_config(cfg, dr, err);

  VerificationReport rep = check_algebra(r);
  if (r.kind == RealizationKind::three_boson && cfg.subst.empty()) {
    auto eq = check_fock_equivalence(r, build_fock_rep(alg, r.space));
    rep.checks.insert(rep.checks.end(), eq.checks.begin(), eq.checks.end());
  } else if (r.kind == RealizationKind::two_boson_central) {
    auto eq = check_quotient_equivalence(r, Ideal::I1);
    rep.checks.insert(rep.checks.end(), eq.checks.begin(), eq.checks.end());
  } else if (r.kind == RealizationKind::two_boson_lowering) {
    auto eq = check_quotient_equivalence(r, Ideal::I2);
    rep.checks.insert(rep.checks.end(), eq.checks.begin(), eq.checks.end());
  } else if (r.kind == RealizationKind::single_boson) {
    auto eq = check_quotient_equivalence(r, Ideal::I3);
    rep.checks.insert(rep.checks.end(), eq.checks.begin(), eq.checks.end());
  }
  rep.dr_provenance = dr_provenance(dr);
  emit(cfg, rep.to_json(), out);
  return exit_code_for(rep);
}

int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  AlgebraSpec alg = algebra_from_config(cfg);
  DrTable dr = derive_dr(needed_rmax(alg));
  bool subst_empty_poly = !cfg.subst.empty();
  for (const auto& t : cfg.subst)
    if (!t.coeff.is_zero()) subst_empty_poly = false;
  if (subst_empty_poly) err << "warning: substitution polynomial is zero\n";
  RealizationSet r = realization_from_config(cfg, dr, err);
  emit(cfg, export_realization(r), out);
  return kExitPass;
}

int cmd_derive_dr(long rmax, std::ostream& out) {
  DrTable dr = derive_dr(rmax);
  DrProvenance prov = dr_provenance(dr);
  for (long r = 0; r <= dr.rmax(); ++r) out << r << " " << dr.values[r].str() << "\n";
  for (long r : prov.discrepant_indices)
    out << "DISCREPANCY r=" << r << " derived=" << dr.values[r].str() << "\n";
  return kExitPass;
}

int cmd_preset_suite(std::uint64_t seed, std::ostream& out, std::ostream& err) {
  Sampler sampler(seed);
  struct Named {
    std::string name;
    AlgebraSpec alg;
  };
  const std::vector<Named> algebras = {
      {"su2", preset_su2()},
      {"su11", preset_su11()},
      {"higgs(2,1/3)", preset_higgs(Rational(2), Rational(1, 3))},
      {"quadratic(1,2,1/2)", preset_quadratic(Rational(1), Rational(2), Rational(1, 2))}};

  int worst = kExitPass;
  for (const auto& [name, alg] : algebras) {
    DrTable dr = derive_dr(needed_rmax(alg));
    const long n = alg.n;
    struct Case {
      RealizationKind kind;
      SpaceSpec spec;
    };
    const std::vector<Case> cases = {
        {RealizationKind::three_boson, SpaceSpec{{8, 8, 8 + 2 * n}}},
        {RealizationKind::two_boson_central, SpaceSpec{{10, 10}}},
        {RealizationKind::two_boson_lowering, SpaceSpec{{10, 10 + n}}},
        {RealizationKind::single_boson, SpaceSpec{{14}}}};
    for (const auto& c : cases) {
      Rational param = sampler.rational();
      RealizationSet r = [&] {
        switch (c.kind) {
          case RealizationKind::three_boson: return build_three_boson(alg, c.spec, dr);
          case RealizationKind::two_boson_central:
            return build_two_boson_central(alg, param, c.spec, dr);
          case RealizationKind::two_boson_lowering:
            return build_two_boson_lowering(alg, param, c.spec, dr);
          default: return build_single_boson(alg, param, c.spec, dr);
        }
      }();
      VerificationReport rep = check_algebra(r);
      if (r.kind == RealizationKind::three_boson) {
        auto eq = check_fock_equivalence(r, build_fock_rep(alg, r.space));
        rep.checks.insert(rep.checks.end(), eq.checks.begin(), eq.checks.end());
      } else {
        Ideal ideal = r.kind == RealizationKind::two_boson_central  ? Ideal::I1
                      : r.kind == RealizationKind::two_boson_lowering ? Ideal::I2
                                                                      : Ideal::I3;
        auto eq = check_quotient_equivalence(r, ideal);
        rep.checks.insert(rep.checks.end(), eq.checks.begin(), eq.checks.end());
      }
      int code = exit_code_for(rep);
      out << name << " " << kind_name(c.kind) << " "
          << (code == kExitPass ? "PASS" : code == kExitVacuous ? "VACUOUS" : "FAIL") << "\n";
      if (code == kExitFail || (code != kExitPass && worst == kExitPass)) worst = code;
      if (code == kExitFail) err << rep.to_json();
    }
  }
  return worst;
}

}  // namespace polyboson
