#ifndef POLYBOSON_CLI_HPP
#define POLYBOSON_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyboson/realizations.hpp"

namespace polyboson {

// Exit code contract: 0 pass, 1 failure, 2 vacuous, 64 usage/config error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitVacuous = 2;
inline constexpr int kExitUsage = 64;

struct ConfigError : std::runtime_error {
  ConfigError(std::string field_, const std::string& msg)
      : std::runtime_error("config field '" + field_ + "': " + msg), field(std::move(field_)) {}
  std::string field;
};

// One canonical schema shared by the JSON config file and the CLI flags;
// flags override file values field by field.
struct RunConfig {
  std::optional<std::string> preset;           // su2 | su11 | higgs | quadratic
  std::vector<Rational> preset_params;         // higgs: c1,c3; quadratic: c0,c1,c2
  std::optional<long> n;
  std::optional<std::vector<Rational>> coeffs;
  std::optional<std::string> kind;
  std::optional<Rational> param;
  std::optional<std::vector<long>> caps;
  std::vector<ModeTerm> subst;
  std::optional<std::string> out;
  std::uint64_t seed = 0;
};

// Reads a JSON config file; flag overrides are applied by the caller.
RunConfig load_config_file(const std::string& path);

// "(p,q,coeff);(p,q,coeff);..."
std::vector<ModeTerm> parse_subst(const std::string& text);

AlgebraSpec algebra_from_config(const RunConfig& cfg);
RealizationSet realization_from_config(const RunConfig& cfg, const DrTable& dr,
                                       std::ostream& err);

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_derive_dr(long rmax, std::ostream& out);
int cmd_preset_suite(std::uint64_t seed, std::ostream& out, std::ostream& err);

// Writes via a temp file in the same directory, then renames.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace polyboson

#endif
