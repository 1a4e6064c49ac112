#pragma once

#include "delta/diffpoly.hpp"
#include "delta/lattice.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace delta {

/// Names of the constant symbols, translations and indeterminates of a ring.
struct Symbols {
  std::vector<std::string> constants;
  std::vector<std::string> translations;
  std::vector<std::string> indeterminates;

  std::size_t dim() const { return translations.size(); }
  std::size_t arity() const { return indeterminates.size(); }

  friend bool operator==(const Symbols&, const Symbols&) = default;
};

/// Parsed contents of a system file:
///
///   constants: a, b
///   translations: s1, s2
///   indeterminates: y
///   ranking: s2, s1
///   poly A = a*s1^2*y - 2*a*s1*y - s2*y + (a+1)*y
///   system: A
///   scheme: forward
///
/// Declarations precede statements; `#` starts a comment.
struct SystemFile {
  Symbols symbols;
  /// Translation priority from the `ranking:` directive (most significant first).
  std::optional<std::vector<std::size_t>> ranking_priority;
  std::vector<std::pair<std::string, DiffPolynomial>> polys;
  /// Names from the `system:` directive.
  std::vector<std::string> system;
  std::optional<std::string> scheme;

  Ranking ranking() const;
  /// Throws Error(UndeclaredSymbol) for an unknown name.
  const DiffPolynomial& poly(std::string_view name) const;
  /// Polynomials named by `system:`, or every polynomial except `exclude`.
  std::vector<DiffPolynomial> generators(std::string_view exclude = {}) const;
};

/// Throws ParseError with kinds SyntaxError, UndeclaredSymbol or ArityError.
SystemFile parse_system(std::string_view text);

/// Parses a single polynomial expression against declared symbols.
DiffPolynomial parse_poly(std::string_view expr, const Symbols& symbols);

/// "s2, s1" -> translation priority, completed with the unlisted translations
/// in declaration order.
std::vector<std::size_t> parse_ranking(std::string_view list, const Symbols& symbols);

/// "(1,0);(-2,0)" -> a lattice set of the given dimension and signature.
LatticeSet parse_points(std::string_view text, std::size_t dim, Signature signature);

/// "s1^2 s2^-1 y3"
std::string to_string(const TermKey& t, const Symbols& symbols);

/// Monomials in decreasing ranking order, e.g.
/// "a*s1^2 y - 2*a*s1 y - s2 y + (a + 1)*y". parse_poly reads it back.
std::string to_string(const DiffPolynomial& p, const Symbols& symbols, const Ranking& rk);

/// Canonical file text; parse_system reads it back.
std::string to_string(const SystemFile& file);

}  // namespace delta
