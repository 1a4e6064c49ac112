#pragma once

#include "delta/numpoly.hpp"
#include "delta/schemes.hpp"
#include "delta/text.hpp"

#include <optional>
#include <string>

namespace delta {

enum class Format { Text, Json };

/// Text: the expanded polynomial. Json: an object with binomial_coeffs,
/// expanded, degree, sigma_trdeg, leaders and prime_certified; the last three
/// are null/empty when only a polynomial is known. Both end with a newline.
std::string emit_polynomial(const NumericalPolynomial& p, std::optional<unsigned> m, Format format);

std::string emit_report(const StrengthReport& report, const Symbols& symbols, Format format);

/// One line per element: "leader | polynomial".
std::string emit_charset(const CharacteristicSet& cs, const Symbols& symbols, Format format);

/// System file text for a catalog entry, readable by parse_system.
SystemFile as_system_file(const CatalogEntry& entry);

}  // namespace delta
