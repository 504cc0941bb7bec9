#include "polyboson/export.hpp"

#include <json.hpp>

#include <stdexcept>

namespace polyboson {

namespace {

nlohmann::json operator_entries(const SparseOperator& op) {
  auto arr = nlohmann::json::array();
  for (std::size_t c = 0; c < op.dim(); ++c)
    for (const auto& [r, v] : op.column(c))
      arr.push_back(nlohmann::json::array({r, c, v.str()}));
  return arr;
}

SparseOperator parse_operator(const SpaceSpec& spec, const nlohmann::json& arr) {
  SparseOperator op(spec);
  for (const auto& e : arr)
    op.add_entry(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(),
                 Rational::parse(e.at(2).get<std::string>()));
  return op;
}

}  // namespace

std::string export_realization(const RealizationSet& r) {
  nlohmann::json j;
  j["algebra"]["n"] = r.alg.n;
  auto coeffs = nlohmann::json::array();
  for (const auto& c : r.alg.coeffs) coeffs.push_back(c.str());
  j["algebra"]["coeffs"] = coeffs;
  j["kind"] = kind_name(r.kind);
  j["param"] = r.param ? nlohmann::json(r.param->str()) : nlohmann::json(nullptr);
  j["caps"] = r.space.caps;
  j["basis_order"] = "lex_last_fastest";
  j["operators"]["J3"] = operator_entries(r.J3);
  j["operators"]["J+"] = operator_entries(r.Jplus);
  j["operators"]["J-"] = operator_entries(r.Jminus);
  j["margins"] = r.margins;
  return j.dump(2) + "\n";
}

RealizationSet parse_realization(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("algebra").at("coeffs"))
    coeffs.push_back(Rational::parse(c.get<std::string>()));
  AlgebraSpec alg = make_algebra(j.at("algebra").at("n").get<long>(), std::move(coeffs));
  SpaceSpec spec{j.at("caps").get<std::vector<long>>()};
  if (j.at("basis_order").get<std::string>() != "lex_last_fastest")
    throw std::invalid_argument("parse_realization: unsupported basis order");
  RealizationSet r{kind_from_name(j.at("kind").get<std::string>()),
                   std::move(alg),
                   spec,
                   std::nullopt,
                   parse_operator(spec, j.at("operators").at("J3")),
                   parse_operator(spec, j.at("operators").at("J+")),
                   parse_operator(spec, j.at("operators").at("J-")),
                   j.at("margins").get<std::vector<long>>()};
  if (!j.at("param").is_null()) r.param = Rational::parse(j.at("param").get<std::string>());
  return r;
}

}  // namespace polyboson
