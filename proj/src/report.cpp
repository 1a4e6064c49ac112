#include "delta/report.hpp"

#include "delta/errors.hpp"

#include <json.hpp>

#include <limits>

namespace delta {

namespace {

using Json = nlohmann::ordered_json;

// Integers that do not fit in 64 bits are written as decimal strings.
Json integer_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(z);
  }
  return z.str();
}

Json polynomial_json(const NumericalPolynomial& p, std::optional<unsigned> m) {
  Json j;
  Json coeffs = Json::array();
  for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(Json::array({i, integer_json(p.binomial_coeff(i))}));
  j["binomial_coeffs"] = std::move(coeffs);
  j["expanded"] = to_string(p);
  j["degree"] = p.degree();
  j["sigma_trdeg"] = nullptr;
  if (m) {
    try {
      j["sigma_trdeg"] = integer_json(sigma_invariants(p, *m).a);
    } catch (const Error&) {
    }
  }
  j["leaders"] = Json::array();
  j["prime_certified"] = nullptr;
  return j;
}

Json leader_json(const TermKey& u, const Symbols& symbols) {
  return Json{{"indeterminate", symbols.indeterminates.at(u.idx)}, {"gamma", u.gamma.coords()}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string emit_polynomial(const NumericalPolynomial& p, std::optional<unsigned> m, Format format) {
  if (format == Format::Text) return to_string(p) + "\n";
  return dump(polynomial_json(p, m));
}

std::string emit_report(const StrengthReport& report, const Symbols& symbols, Format format) {
  if (format == Format::Text) return to_string(report.psi) + "\n";
  Json j = polynomial_json(report.psi, std::nullopt);
  j["sigma_trdeg"] = report.sigma ? integer_json(report.sigma->a) : Json(nullptr);
  Json leaders = Json::array();
  for (const auto& u : report.charset.leaders) leaders.push_back(leader_json(u, symbols));
  j["leaders"] = std::move(leaders);
  j["prime_certified"] = report.charset.prime_certified;
  if (!report.scheme.empty()) j["scheme"] = report.scheme;
  return dump(j);
}

std::string emit_charset(const CharacteristicSet& cs, const Symbols& symbols, Format format) {
  if (format == Format::Text) {
    std::string out;
    for (std::size_t i = 0; i < cs.elements.size(); ++i) {
      out += to_string(cs.leaders[i], symbols) + " | " + to_string(cs.elements[i], symbols, cs.ranking) + "\n";
    }
    return out;
  }
  Json elements = Json::array();
  for (std::size_t i = 0; i < cs.elements.size(); ++i) {
    Json e = leader_json(cs.leaders[i], symbols);
    e["leader"] = to_string(cs.leaders[i], symbols);
    e["polynomial"] = to_string(cs.elements[i], symbols, cs.ranking);
    e["generator"] = cs.generator[i];
    e["shift"] = cs.shift[i].coords();
    elements.push_back(std::move(e));
  }
  Json j;
  j["elements"] = std::move(elements);
  j["prime_certified"] = cs.prime_certified;
  j["search_radius"] = cs.search_radius_used;
  return dump(j);
}

SystemFile as_system_file(const CatalogEntry& entry) {
  SystemFile file;
  file.symbols.constants = entry.constants;
  file.symbols.translations = {"s1", "s2"};
  file.symbols.indeterminates = entry.indeterminates;
  if (entry.ranking.translation_priority() != std::vector<std::size_t>{0, 1}) {
    file.ranking_priority = entry.ranking.translation_priority();
  }
  file.scheme = entry.scheme;
  for (std::size_t i = 0; i < entry.system.size(); ++i) {
    const std::string name = entry.system.size() == 1 ? "A" : "A" + std::to_string(i + 1);
    file.polys.emplace_back(name, entry.system[i]);
    file.system.push_back(name);
  }
  return file;
}

}  // namespace delta
