#pragma once

#include "delta/constant_poly.hpp"
#include "delta/lattice.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace delta {

/// Element alpha_1^{k_1} ... alpha_m^{k_m} of the free commutative group
/// generated by the translations, stored as its exponent vector.
using Gamma = Point;

/// The term gamma * y_idx. Indeterminates are numbered from 0.
struct TermKey {
  std::size_t idx = 0;
  Gamma gamma;

  Coord ord() const { return gamma.ord(); }

  friend bool operator==(const TermKey&, const TermKey&) = default;
  /// Structural order (index, then exponents); not a ranking.
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

/// Product of powers of terms, kept sorted by the structural TermKey order.
class Monomial {
 public:
  using Factor = std::pair<TermKey, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(const TermKey& t, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  std::uint32_t degree_in(const TermKey& t) const;
  std::uint32_t total_degree() const;

  /// This monomial with the factor t removed entirely.
  Monomial without(const TermKey& t) const;
  Monomial shifted(const Gamma& g) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Inversive difference polynomial in n indeterminates over m translations
/// with coefficients in Q[constants]. Zero coefficients are never stored.
class DiffPolynomial {
 public:
  DiffPolynomial(std::size_t m, std::size_t n) : m_(m), n_(n) {}

  static DiffPolynomial constant(std::size_t m, std::size_t n, const ConstantPoly& c);
  /// Throws Error(DimMismatch) or Error(ArityError) if t does not fit (m, n).
  static DiffPolynomial term(std::size_t m, std::size_t n, const TermKey& t, std::uint32_t exponent = 1);

  std::size_t dim() const { return m_; }
  std::size_t arity() const { return n_; }
  const std::map<Monomial, ConstantPoly>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// True when no term gamma*y_i occurs, i.e. the polynomial lies in K.
  bool in_ground_field() const;

  /// Distinct terms occurring in any monomial, structurally sorted.
  std::vector<TermKey> support() const;
  /// Largest order of a term occurring (0 when none).
  Coord max_term_order() const;

  void add(const Monomial& mono, const ConstantPoly& coeff);

  DiffPolynomial& operator+=(const DiffPolynomial& rhs);
  DiffPolynomial& operator-=(const DiffPolynomial& rhs);
  DiffPolynomial& operator*=(const ConstantPoly& k);

  friend DiffPolynomial operator+(DiffPolynomial a, const DiffPolynomial& b) { return a += b; }
  friend DiffPolynomial operator-(DiffPolynomial a, const DiffPolynomial& b) { return a -= b; }
  friend DiffPolynomial operator-(DiffPolynomial a) { return a *= ConstantPoly(-1); }
  friend DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b);
  friend DiffPolynomial operator*(const ConstantPoly& k, DiffPolynomial p) { return p *= k; }

  friend bool operator==(const DiffPolynomial&, const DiffPolynomial&) = default;

  /// Applies a renaming of constant symbols to every coefficient.
  DiffPolynomial with_constants_renamed(std::span<const std::size_t> mapping) const;

 private:
  void check_compatible(const DiffPolynomial& rhs) const;

  std::size_t m_;
  std::size_t n_;
  std::map<Monomial, ConstantPoly> terms_;
};

/// An orderly ranking of the form
///   (ord, |k_pi(1)|, ..., |k_pi(m)|, k_pi(1), ..., k_pi(m), rank(idx))
/// compared lexicographically. The identity permutations give the standard
/// ranking; priority (1, 0) makes alpha_2 dominate alpha_1.
class Ranking {
 public:
  /// Standard ranking on m translations and n indeterminates.
  Ranking(std::size_t m, std::size_t n);
  /// translation_priority lists translations from most to least significant;
  /// indeterminate_order lists indeterminates from lowest to highest.
  /// Throws Error(DimMismatch) unless both are permutations.
  Ranking(std::vector<std::size_t> translation_priority, std::vector<std::size_t> indeterminate_order);

  std::size_t dim() const { return priority_.size(); }
  std::size_t arity() const { return indet_rank_.size(); }
  const std::vector<std::size_t>& translation_priority() const { return priority_; }
  std::vector<std::size_t> indeterminate_order() const;

  std::strong_ordering compare(const TermKey& u, const TermKey& v) const;

  friend bool operator==(const Ranking&, const Ranking&) = default;

 private:
  std::vector<std::size_t> priority_;
  std::vector<std::size_t> indet_rank_;  // rank of indeterminate i
};

DiffPolynomial apply_gamma(const DiffPolynomial& p, const Gamma& g);

/// Throws Error(DimMismatch) when u, v or the ranking disagree in shape.
std::strong_ordering ranking_compare(const TermKey& u, const TermKey& v, const Ranking& rk);

/// Ranking-greatest term of p. Throws Error(ConstantPolynomial) if p is in K.
TermKey leader(const DiffPolynomial& p, const Ranking& rk);

struct InitialAndDegree {
  DiffPolynomial initial;
  std::uint32_t degree;
};

/// Writes p = I_d u^d + ... + I_0 in its leader u and returns (I_d, d).
InitialAndDegree initial_and_degree(const DiffPolynomial& p, const Ranking& rk);

/// v = gamma*u with u, v and gamma in a common orthant.
bool is_transform(const TermKey& u, const TermKey& v);
bool is_proper_transform(const TermKey& u, const TermKey& v);

/// Degree one in the leader.
bool is_quasi_linear(const DiffPolynomial& p, const Ranking& rk);

/// d contains no power (gamma*u_b)^e of a transform of u_b with e >= deg_{u_b} b.
bool is_reduced(const DiffPolynomial& d, const DiffPolynomial& b, const Ranking& rk);
bool is_reduced(const DiffPolynomial& d, std::span<const DiffPolynomial> set, const Ranking& rk);

bool is_autoreduced(std::span<const DiffPolynomial> set, const Ranking& rk);

/// Rank of a polynomial: elements of K lowest, then leader, then leader degree.
std::strong_ordering rank_compare(const DiffPolynomial& a, const DiffPolynomial& b, const Ranking& rk);

/// Order on autoreduced sets: first rank disagreement decides, otherwise the
/// longer set is lower. Inputs are sorted by rank internally.
/// Throws Error(NotAutoreduced) if either set is not autoreduced.
std::strong_ordering set_rank_compare(std::span<const DiffPolynomial> s, std::span<const DiffPolynomial> t,
                                      const Ranking& rk);

/// Sorts by increasing rank (stable).
void sort_by_rank(std::vector<DiffPolynomial>& set, const Ranking& rk);

}  // namespace delta
