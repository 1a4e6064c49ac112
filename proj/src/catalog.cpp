#include "delta/errors.hpp"
#include "delta/schemes.hpp"
#include "delta/text.hpp"

#include <algorithm>

namespace delta {

namespace {

constexpr DerivativeIndex kU{0, 0};
constexpr DerivativeIndex kUx{1, 0};
constexpr DerivativeIndex kUxx{2, 0};
constexpr DerivativeIndex kUt{0, 1};

PdeFactor f(DerivativeIndex d, std::size_t unknown = 0, std::uint32_t power = 1) { return {unknown, d, power}; }

PdeTerm term(ConstantPoly c, std::vector<PdeFactor> factors) { return {std::move(c), std::move(factors)}; }

ConstantPoly sym(std::size_t i) { return ConstantPoly::symbol(i); }

const std::vector<std::string> kNames = {"diffusion",     "murray",          "burgers",        "fisher",
                                         "huxley",        "burgers-huxley",  "fitzhugh-nagumo", "kinetics-system"};
const std::vector<std::string> kSchemes = {"forward", "symmetric", "crank-nicolson"};

bool is_reaction_diffusion(const std::string& name) {
  return name != "diffusion" && name != "kinetics-system";
}

// Crank-Nicolson is not derived from substitution rules; these are the
// resulting difference equations with free constants a1..a5.
constexpr const char* kCrankNicolson = "s1 s2 {y} + a1*s1^-1 s2 {y} + a2*s1 {y} + a3*s2 {y} + a4*s1^-1 {y} + a5";

std::string instantiate(std::string tmpl, const std::string& y) {
  for (std::size_t pos; (pos = tmpl.find("{y}")) != std::string::npos;) tmpl.replace(pos, 3, y);
  return tmpl;
}

std::vector<DiffPolynomial> crank_nicolson_system(const std::string& name, Symbols& symbols) {
  symbols.translations = {"s1", "s2"};
  symbols.constants = {"a1", "a2", "a3", "a4", "a5"};
  std::vector<DiffPolynomial> out;
  if (name == "diffusion") {
    symbols.indeterminates = {"y"};
    out.push_back(parse_poly(instantiate(kCrankNicolson, "y"), symbols));
    return out;
  }
  symbols.constants.insert(symbols.constants.end(), {"k1", "k2"});
  symbols.indeterminates = {"y1", "y2", "y3"};
  for (const char* y : {"y1", "y2", "y3"}) {
    std::string text = instantiate(kCrankNicolson, y);
    if (std::string(y) == "y3") text += " - k1*y3^2 + k1*y1*y3 + k2*y2 - k2*y3";
    out.push_back(parse_poly(text, symbols));
  }
  return out;
}

}  // namespace

std::vector<std::string> catalog_names() { return kNames; }

std::vector<std::string> catalog_schemes() { return kSchemes; }

std::vector<std::string> catalog_schemes_for(const std::string& name) {
  if (std::find(kNames.begin(), kNames.end(), name) == kNames.end()) {
    throw Error(ErrorKind::UnknownEntry, "no catalog PDE named '" + name + "'");
  }
  if (is_reaction_diffusion(name)) return {"forward", "symmetric"};
  return kSchemes;
}

PdeSpec catalog_pde(const std::string& name) {
  PdeSpec p;
  p.unknowns = {"u"};
  if (name == "diffusion") {
    p.constants = {"c"};
    p.equations = {{term(1, {f(kUt)}), term(-sym(0), {f(kUxx)})}};
  } else if (name == "murray") {
    p.constants = {"mu1", "mu2", "mu3"};
    p.equations = {{term(1, {f(kUxx)}), term(sym(0), {f(kU), f(kUt)}), term(sym(1), {f(kU)}),
                    term(-sym(2), {f(kU, 0, 2)})}};
  } else if (name == "burgers") {
    p.equations = {{term(1, {f(kUxx)}), term(-1, {f(kU), f(kUx)}), term(-1, {f(kUt)})}};
  } else if (name == "fisher") {
    p.equations = {{term(1, {f(kUxx)}), term(-1, {f(kU), f(kUt)}), term(1, {f(kU)}), term(-1, {f(kU, 0, 2)})}};
  } else if (name == "huxley") {
    // u_xx - u u_t - u(k - u)(u - 1)
    p.constants = {"k"};
    p.equations = {{term(1, {f(kUxx)}), term(-1, {f(kU), f(kUt)}), term(1, {f(kU, 0, 3)}),
                    term(-(sym(0) + 1), {f(kU, 0, 2)}), term(sym(0), {f(kU)})}};
  } else if (name == "burgers-huxley") {
    // u_xx + u u_x - u_t + u(k - u)(u - 1)
    p.constants = {"k"};
    p.equations = {{term(1, {f(kUxx)}), term(1, {f(kU), f(kUx)}), term(-1, {f(kUt)}), term(-1, {f(kU, 0, 3)}),
                    term(sym(0) + 1, {f(kU, 0, 2)}), term(-sym(0), {f(kU)})}};
  } else if (name == "fitzhugh-nagumo") {
    // u_xx + u u_x - u_t + u(1 - u)(a - u)
    p.constants = {"a"};
    p.equations = {{term(1, {f(kUxx)}), term(1, {f(kU), f(kUx)}), term(-1, {f(kUt)}), term(1, {f(kU, 0, 3)}),
                    term(-(sym(0) + 1), {f(kU, 0, 2)}), term(sym(0), {f(kU)})}};
  } else if (name == "kinetics-system") {
    p.unknowns = {"u1", "u2", "u3"};
    p.constants = {"k1", "k2"};
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<PdeTerm> eq = {term(1, {f(kUt, i)}), term(-1, {f(kUxx, i)})};
      if (i == 2) {
        eq.push_back(term(sym(0), {f(kU, 2, 2)}));
        eq.push_back(term(-sym(0), {f(kU, 2), f(kU, 0)}));
        eq.push_back(term(-sym(1), {f(kU, 1)}));
        eq.push_back(term(sym(1), {f(kU, 2)}));
      }
      p.equations.push_back(std::move(eq));
    }
  } else {
    throw Error(ErrorKind::UnknownEntry, "no catalog PDE named '" + name + "'");
  }
  return p;
}

SchemeRules catalog_rules(const std::string& scheme) {
  const Gamma id{0, 0}, x{1, 0}, x2{2, 0}, xm{-1, 0}, t{0, 1}, tm{0, -1};
  if (scheme == "forward") {
    return {"forward",
            {{kU, {{id, 1}}},
             {kUx, {{x, 1}, {id, -1}}},
             {kUxx, {{x2, 1}, {x, -2}, {id, 1}}},
             {kUt, {{t, 1}, {id, -1}}}}};
  }
  if (scheme == "symmetric") {
    return {"symmetric",
            {{kU, {{id, 1}}},
             {kUx, {{x, 1}, {xm, -1}}},
             {kUxx, {{x, 1}, {xm, 1}, {id, -2}}},
             {kUt, {{t, 1}, {tm, -1}}}}};
  }
  if (scheme == "crank-nicolson") {
    throw Error(ErrorKind::UnknownEntry, "crank-nicolson is stored as equation templates, not substitution rules");
  }
  throw Error(ErrorKind::UnknownEntry, "no scheme named '" + scheme + "'");
}

CatalogEntry catalog_entry(const std::string& name, const std::string& scheme) {
  const auto schemes = catalog_schemes_for(name);
  if (std::find(schemes.begin(), schemes.end(), scheme) == schemes.end()) {
    if (std::find(kSchemes.begin(), kSchemes.end(), scheme) == kSchemes.end()) {
      throw Error(ErrorKind::UnknownEntry, "no scheme named '" + scheme + "'");
    }
    throw Error(ErrorKind::UnknownEntry, "no " + scheme + " entry for '" + name + "'");
  }

  if (scheme == "crank-nicolson") {
    Symbols symbols;
    auto system = crank_nicolson_system(name, symbols);
    return CatalogEntry{.name = name,
                        .scheme = scheme,
                        .constants = symbols.constants,
                        .indeterminates = symbols.indeterminates,
                        .system = std::move(system),
                        .ranking = Ranking(2, symbols.indeterminates.size()),
                        .pde = std::nullopt,
                        .rules = std::nullopt,
                        .note = "stored difference-equation template with free constants a1..a5"};
  }

  PdeSpec pde = catalog_pde(name);
  SchemeRules rules = catalog_rules(scheme);
  const std::size_t n = pde.unknowns.size();
  const bool time_first = scheme == "symmetric" && is_reaction_diffusion(name);
  Ranking rk = time_first ? Ranking({1, 0}, {0}) : Ranking(2, n);

  std::vector<std::string> indeterminates;
  if (n == 1) {
    indeterminates = {"y"};
  } else {
    for (std::size_t i = 0; i < n; ++i) indeterminates.push_back("y" + std::to_string(i + 1));
  }
  std::vector<std::string> constants = pde.constants;
  std::string note;
  if (name == "diffusion") {
    constants = {"a"};
    note = scheme == "forward" ? "a = c/h" : "a = 2c/h up to normalization";
  } else if (name == "fisher" || name == "huxley" || name == "murray") {
    note = scheme == "symmetric" ? "the time derivative enters as u*u_t, so the leader's initial is not in K"
                                 : "the time derivative enters as u*u_t, not c*u_t";
  } else if (name == "fitzhugh-nagumo") {
    note = "-u_t added to the literal equation, which has no time derivative";
  } else if (name == "kinetics-system") {
    note = "third equation uses the time derivative of u3";
  }

  auto system = discretize(pde, rules, rk);
  return CatalogEntry{.name = name,
                      .scheme = scheme,
                      .constants = std::move(constants),
                      .indeterminates = std::move(indeterminates),
                      .system = std::move(system),
                      .ranking = std::move(rk),
                      .pde = std::move(pde),
                      .rules = std::move(rules),
                      .note = std::move(note)};
}

}  // namespace delta
