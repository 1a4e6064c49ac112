#pragma once

#include "delta/charset.hpp"
#include "delta/constant_poly.hpp"
#include "delta/diffpoly.hpp"
#include "delta/numpoly.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace delta {

/// Partial derivative d^x/dx^x d^t/dt^t; (0,0) is the function itself.
struct DerivativeIndex {
  unsigned x = 0;
  unsigned t = 0;

  friend bool operator==(const DerivativeIndex&, const DerivativeIndex&) = default;
  friend auto operator<=>(const DerivativeIndex&, const DerivativeIndex&) = default;
};

struct PdeFactor {
  std::size_t unknown = 0;
  DerivativeIndex derivative;
  std::uint32_t power = 1;
};

struct PdeTerm {
  ConstantPoly coefficient;
  std::vector<PdeFactor> factors;
};

/// PDE system in u_1..u_n(x, t); each equation is a sum of terms set to zero.
struct PdeSpec {
  std::vector<std::string> unknowns;
  std::vector<std::string> constants;
  std::vector<std::vector<PdeTerm>> equations;
};

/// Finite sum of coefficient * translation, acting on a single unknown.
using DifferenceOperator = std::vector<std::pair<Gamma, ConstantPoly>>;

struct SchemeRules {
  std::string name;
  std::map<DerivativeIndex, DifferenceOperator> rules;
};

/// Replaces every derivative by its difference operator applied to the
/// matching indeterminate (translations s1 <-> x, s2 <-> t) and expands.
/// Each output is divided by the rational factor of its leading coefficient
/// when that coefficient is a single term, so e.g. -c*s1^2 y becomes c*s1^2 y.
/// Throws Error(MissingRule) for a derivative without a rule.
std::vector<DiffPolynomial> discretize(const PdeSpec& pde, const SchemeRules& rules, const Ranking& rk);

/// Divides p by the rational factor of its leading coefficient, if any.
DiffPolynomial normalize_leading(const DiffPolynomial& p, const Ranking& rk);

struct StrengthReport {
  std::string scheme;
  std::vector<DiffPolynomial> system;
  CharacteristicSet charset;
  NumericalPolynomial psi;
  /// Empty when psi is not shaped like a dimension polynomial in m variables.
  std::optional<SigmaInvariants> sigma;
  std::size_t m = 0;
  std::size_t n = 0;
};

/// psi = sum over indeterminates of phi(E_i), with phi of the empty set for
/// indeterminates that lead no element.
NumericalPolynomial psi_from_leaders(std::span<const TermKey> leaders, std::size_t m, std::size_t n);

/// Characteristic set of the system followed by psi. Propagates the errors of
/// system_charset and Error(SizeLimit) from phi.
StrengthReport strength(std::span<const DiffPolynomial> system, const Ranking& rk, const OrbitSearch& search = {},
                        std::string scheme = {});

struct RankedReport {
  std::size_t index;  // position in the input list
  std::size_t place;  // 1-based; equal for ties
};

/// Ascending by eventual size of psi: smaller psi means higher strength.
/// The sort is stable, so ties keep input order.
std::vector<RankedReport> compare_schemes(std::span<const StrengthReport> reports);

// Built-in PDEs and schemes.

struct CatalogEntry {
  std::string name;
  std::string scheme;
  /// Generated system file: symbols, default ranking and polynomials.
  std::vector<std::string> constants;
  std::vector<std::string> indeterminates;
  std::vector<DiffPolynomial> system;
  Ranking ranking;
  /// Empty for stored templates.
  std::optional<PdeSpec> pde;
  std::optional<SchemeRules> rules;
  /// Known discrepancies between the literal PDE and its textbook normal form.
  std::string note;
};

std::vector<std::string> catalog_names();
std::vector<std::string> catalog_schemes();
/// Schemes available for a PDE name; Error(UnknownEntry) for unknown names.
std::vector<std::string> catalog_schemes_for(const std::string& name);

/// Throws Error(UnknownEntry).
PdeSpec catalog_pde(const std::string& name);
SchemeRules catalog_rules(const std::string& scheme);
CatalogEntry catalog_entry(const std::string& name, const std::string& scheme);

}  // namespace delta
