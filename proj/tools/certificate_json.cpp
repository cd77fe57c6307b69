#include "certificate_json.hpp"

#include "origami/errors.hpp"

namespace origami::cli {

nlohmann::ordered_json certificate_to_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  if (cert.product) j["product"] = {cert.product->first, cert.product->second};
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : cert.terms) {
    nlohmann::ordered_json monomial = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < t.exponents.size(); ++k)
      if (t.exponents[k]) monomial[std::to_string(k)] = t.exponents[k];
    j["terms"].push_back({{"generator", t.generator}, {"monomial", monomial}, {"coefficient", t.coefficient.get_str()}});
  }
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j, std::size_t projections) {
  try {
    Certificate cert;
    if (j.contains("product")) {
      const auto& p = j.at("product");
      if (!p.is_array() || p.size() != 2) throw ParseError("product must be a pair of generator ids");
      cert.product = std::make_pair(p[0].get<std::size_t>(), p[1].get<std::size_t>());
    }
    for (const auto& t : j.at("terms")) {
      CertificateTerm term;
      term.generator = t.at("generator").get<std::size_t>();
      term.exponents.assign(projections, 0);
      for (const auto& [key, e] : t.at("monomial").items()) {
        const std::size_t k = std::stoul(key);
        if (k >= projections) throw UnknownGenerator("certificate refers to projection " + key);
        term.exponents[k] = e.get<unsigned>();
      }
      if (term.coefficient.set_str(t.at("coefficient").get<std::string>(), 10) != 0)
        throw ParseError("coefficient is not an integer");
      cert.terms.push_back(std::move(term));
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed projection id in certificate");
  }
}

}  // namespace origami::cli
