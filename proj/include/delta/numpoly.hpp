#pragma once

#include "delta/arith.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace delta {

/// A numerical polynomial f(t), i.e. a rational polynomial taking integer
/// values at all large integers, stored in the canonical binomial basis
///
///     f(t) = sum_{i=0}^{d} a_i * C(t+i, i),   a_i integers, a_d != 0.
///
/// The zero polynomial has no coefficients and degree -1.
class NumericalPolynomial {
 public:
  NumericalPolynomial() = default;

  /// Takes (a_0, ..., a_d); trailing zeros are trimmed.
  static NumericalPolynomial from_binomial(std::vector<Integer> coeffs);
  static NumericalPolynomial constant(const Integer& c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// a_i; zero for i outside [0, degree].
  Integer binomial_coeff(int i) const;
  const std::vector<Integer>& binomial_coeffs() const { return coeffs_; }

  /// Coefficients (c_0, ..., c_d) of the ordinary power-basis form.
  std::vector<Rational> monomial_coeffs() const;

  NumericalPolynomial& operator+=(const NumericalPolynomial& rhs);
  NumericalPolynomial& operator-=(const NumericalPolynomial& rhs);
  NumericalPolynomial& operator*=(const Integer& k);

  friend NumericalPolynomial operator+(NumericalPolynomial lhs, const NumericalPolynomial& rhs) { return lhs += rhs; }
  friend NumericalPolynomial operator-(NumericalPolynomial lhs, const NumericalPolynomial& rhs) { return lhs -= rhs; }
  friend NumericalPolynomial operator*(const Integer& k, NumericalPolynomial p) { return p *= k; }
  friend NumericalPolynomial operator-(NumericalPolynomial p) { return p *= Integer(-1); }

  friend bool operator==(const NumericalPolynomial&, const NumericalPolynomial&) = default;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

/// Converts power-basis coefficients (c_0, ..., c_d) to the binomial basis.
/// Throws Error(NotNumerical) if the polynomial is not integer-valued.
NumericalPolynomial canonicalize(std::span<const Rational> monomial_coeffs);

/// Exact value at an integer point. Always integral for integer r; returned
/// as a rational to keep the evaluation contract uniform.
Rational evaluate(const NumericalPolynomial& p, const Integer& r);

/// C(t+c, m) as a polynomial in t: (t+c)(t+c-1)...(t+c-m+1)/m!.
NumericalPolynomial binomial_term(std::int64_t c, unsigned m);

/// Order by values at all sufficiently large arguments.
std::strong_ordering eventual_compare(const NumericalPolynomial& p, const NumericalPolynomial& q);

/// Smallest R0 >= 0 such that the sign of p - q is constant on [R0, inf).
/// Cauchy bound on the difference; used by property tests.
Integer eventual_threshold(const NumericalPolynomial& p, const NumericalPolynomial& q);

struct SigmaInvariants {
  Integer a;          // coefficient of t^m times m!/2^m
  int degree = -1;
  Rational leading;   // coefficient of t^degree (0 for the zero polynomial)
};

/// Reads off the invariants of a dimension polynomial in m translations.
/// Throws Error(NotSigmaShaped) if deg p > m or 2^m does not divide a_m.
SigmaInvariants sigma_invariants(const NumericalPolynomial& p, unsigned m);

/// Power-basis text, decreasing degree: "5*t", "6*t - 1", "1/2*t^2 + 1/2*t".
std::string to_string(const NumericalPolynomial& p, const std::string& var = "t");

}  // namespace delta
