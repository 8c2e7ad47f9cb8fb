#pragma once
// JSON interchange for the CLI-facing data:
//   A-infinity tables  {"r":..,"t1_basis":[{"name","src","tgt"},..],
//                       "t2_basis":[..],"products":[{"d","inputs","output","coeff"},..]}
//   degeneration data  {"r":..,"mult":[[..],..]}
//   dimension reports  {"degrees":[{"d":0,"dims":[[..]]},..],"total":..,"finite":..}
// Scalars travel as "p/q" strings, never floats. Schema problems are
// ParseErrors; table semantics (composability) are checked separately by
// AInfinityData::validate.

#include <string>

#include "json.hpp"
#include "ncdeform/deformation.hpp"
#include "ncdeform/models.hpp"

namespace ncdeform {

namespace detail {

inline Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(0, 0, std::string("bad rational: ") + e.what());
    }
  }
  throw ParseError(0, 0, "rational must be an integer or a \"p/q\" string");
}

inline int index_of_basis(const std::vector<AInfBasisElem>& basis, const std::string& name,
                          const char* what) {
  for (size_t k = 0; k < basis.size(); ++k)
    if (basis[k].name == name) return static_cast<int>(k);
  throw ParseError(0, 0, std::string("unknown ") + what + " basis element '" + name + "'");
}

inline std::vector<AInfBasisElem> basis_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw ParseError(0, 0, std::string(what) + " must be an array");
  std::vector<AInfBasisElem> out;
  for (const auto& e : j) {
    if (!e.contains("name") || !e.contains("src") || !e.contains("tgt"))
      throw ParseError(0, 0, std::string(what) + " entries need name/src/tgt");
    out.push_back({e.at("name").get<std::string>(), e.at("src").get<int>(),
                   e.at("tgt").get<int>()});
  }
  return out;
}

}  // namespace detail

inline AInfinityData ainfinity_from_json(const nlohmann::json& j) {
  AInfinityData a;
  if (!j.contains("r") || !j.contains("t1_basis") || !j.contains("t2_basis"))
    throw ParseError(0, 0, "ainfinity json needs r, t1_basis, t2_basis");
  a.r = j.at("r").get<int>();
  a.t1 = detail::basis_from_json(j.at("t1_basis"), "t1");
  a.t2 = detail::basis_from_json(j.at("t2_basis"), "t2");
  if (j.contains("products")) {
    if (!j.at("products").is_array()) throw ParseError(0, 0, "products must be an array");
    for (const auto& p : j.at("products")) {
      AInfProductEntry e;
      e.d = p.value("d", 2);
      if (!p.contains("inputs") || !p.contains("output") || !p.contains("coeff"))
        throw ParseError(0, 0, "product entries need inputs/output/coeff");
      for (const auto& name : p.at("inputs"))
        e.inputs.push_back(
            detail::index_of_basis(a.t1, name.get<std::string>(), "t1"));
      e.output = detail::index_of_basis(a.t2, p.at("output").get<std::string>(), "t2");
      e.coeff = detail::rational_from_json(p.at("coeff"));
      a.products.push_back(std::move(e));
    }
  }
  return a;
}

inline AInfinityData ainfinity_from_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, 0, std::string("invalid json: ") + e.what());
  }
  return ainfinity_from_json(j);
}

inline nlohmann::json ainfinity_to_json(const AInfinityData& a) {
  nlohmann::json j;
  j["r"] = a.r;
  j["t1_basis"] = nlohmann::json::array();
  for (const auto& b : a.t1)
    j["t1_basis"].push_back({{"name", b.name}, {"src", b.src}, {"tgt", b.tgt}});
  j["t2_basis"] = nlohmann::json::array();
  for (const auto& b : a.t2)
    j["t2_basis"].push_back({{"name", b.name}, {"src", b.src}, {"tgt", b.tgt}});
  j["products"] = nlohmann::json::array();
  for (const auto& e : a.products) {
    nlohmann::json p;
    p["d"] = e.d;
    p["inputs"] = nlohmann::json::array();
    for (int k : e.inputs) p["inputs"].push_back(a.t1[static_cast<size_t>(k)].name);
    p["output"] = a.t2[static_cast<size_t>(e.output)].name;
    p["coeff"] = e.coeff.str();
    j["products"].push_back(std::move(p));
  }
  return j;
}

inline DegenerationData degeneration_from_json(const nlohmann::json& j) {
  if (!j.contains("r") || !j.contains("mult"))
    throw ParseError(0, 0, "degeneration json needs r and mult");
  DegenerationData d;
  d.r = j.at("r").get<int>();
  if (!j.at("mult").is_array()) throw ParseError(0, 0, "mult must be an array of rows");
  for (const auto& row : j.at("mult")) {
    std::vector<long long> out;
    for (const auto& v : row) out.push_back(v.get<long long>());
    d.mult.push_back(std::move(out));
  }
  try {
    d.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, 0, e.what());
  }
  return d;
}

inline DegenerationData degeneration_from_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, 0, std::string("invalid json: ") + e.what());
  }
  return degeneration_from_json(j);
}

inline nlohmann::json dims_report_to_json(const TotalDimReport& rep) {
  nlohmann::json j;
  j["degrees"] = nlohmann::json::array();
  for (size_t d = 0; d < rep.dims.size(); ++d) {
    nlohmann::json entry;
    entry["d"] = d;
    entry["dims"] = rep.dims[d];
    j["degrees"].push_back(std::move(entry));
  }
  j["total"] = rep.total;
  j["finite"] = rep.finite;
  return j;
}

}  // namespace ncdeform
