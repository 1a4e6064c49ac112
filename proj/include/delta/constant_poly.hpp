#pragma once

#include "delta/arith.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace delta {

/// Polynomial over Q in the declared constant symbols. Translations act on
/// these as the identity. Exponent vectors are indexed by symbol number and
/// stored without trailing zeros, so the empty vector is the unit monomial.
class ConstantPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;

  ConstantPoly() = default;
  ConstantPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  ConstantPoly(long long c) : ConstantPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static ConstantPoly symbol(std::size_t index);

  bool is_zero() const { return terms_.empty(); }
  /// True when no symbol occurs (including zero).
  bool is_numeric() const;
  std::optional<Rational> as_rational() const;
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  std::size_t symbol_bound() const;

  ConstantPoly& operator+=(const ConstantPoly& rhs);
  ConstantPoly& operator-=(const ConstantPoly& rhs);
  ConstantPoly& operator*=(const Rational& k);

  friend ConstantPoly operator+(ConstantPoly a, const ConstantPoly& b) { return a += b; }
  friend ConstantPoly operator-(ConstantPoly a, const ConstantPoly& b) { return a -= b; }
  friend ConstantPoly operator-(ConstantPoly a) { return a *= Rational(-1); }
  friend ConstantPoly operator*(const ConstantPoly& a, const ConstantPoly& b);

  friend bool operator==(const ConstantPoly&, const ConstantPoly&) = default;

  /// Replaces symbol i by symbol mapping[i].
  ConstantPoly renamed(std::span<const std::size_t> mapping) const;

 private:
  void add_term(Exponents e, const Rational& c);

  std::map<Exponents, Rational> terms_;
};

/// Terms by decreasing total degree, constant last: "a^2*b - 3/2*c + 1".
std::string to_string(const ConstantPoly& c, std::span<const std::string> names);

}  // namespace delta
