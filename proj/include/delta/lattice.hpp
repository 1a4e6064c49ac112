#pragma once

#include "delta/numpoly.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace delta {

using Coord = std::int64_t;

/// A point of Z^m. Also used for exponent vectors of translation monomials.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Coord> coords) : coords_(coords) {}

  static Point zero(std::size_t dim) { return Point(std::vector<Coord>(dim, 0)); }

  std::size_t dim() const { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Coord>& coords() const { return coords_; }

  /// Sum of absolute values of the coordinates.
  Coord ord() const;
  bool is_zero() const;

  Point& operator+=(const Point& rhs);
  Point& operator-=(const Point& rhs);
  friend Point operator+(Point lhs, const Point& rhs) { return lhs += rhs; }
  friend Point operator-(Point lhs, const Point& rhs) { return lhs -= rhs; }
  friend Point operator-(Point p);

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  std::vector<Coord> coords_;
};

std::string to_string(const Point& p);

enum class Signature { NonNegative, Integer };

/// Finite subset of N^m or Z^m. Points are kept sorted and distinct.
class LatticeSet {
 public:
  /// Duplicates are merged. Throws Error(DimMismatch) on a point of the wrong
  /// length and Error(InvalidSet) on a negative coordinate in an N^m set.
  LatticeSet(std::size_t dim, Signature signature, std::vector<Point> points = {});

  std::size_t dim() const { return dim_; }
  Signature signature() const { return signature_; }
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const Point& p) const;

  friend bool operator==(const LatticeSet&, const LatticeSet&) = default;

 private:
  std::size_t dim_;
  Signature signature_;
  std::vector<Point> points_;
};

/// Inclusion-exclusion costs 2^q in the number q of minimal points.
inline constexpr std::size_t kMaxMinimalElements = 20;

/// a_i <= b_i for every i.
bool product_leq(const Point& a, const Point& b);

/// a and b lie in a common orthant and |a| <= |b| componentwise.
bool unlhd(const Point& a, const Point& b);

/// Minimal elements under the product order (N^m sets) or under unlhd (Z^m sets).
LatticeSet minimal_elements(const LatticeSet& s);

/// Dimension polynomial omega_E of E in N^m, by inclusion-exclusion over the
/// minimal elements. Throws Error(SizeLimit) beyond kMaxMinimalElements.
NumericalPolynomial omega(const LatticeSet& e);

/// rho(A) together with the vectors having 1 in positions i and m+i.
LatticeSet rho_embed(const LatticeSet& a);

/// Dimension polynomial phi_A of A in Z^m, computed as omega(rho_embed(A)).
NumericalPolynomial phi(const LatticeSet& a);

/// Closed form of phi for the empty subset of Z^m.
NumericalPolynomial phi_empty(std::size_t m);

/// Number of v in N^m with sum(v) <= r not dominating any point of E.
std::uint64_t oracle_count_v(const LatticeSet& e, std::uint64_t r);

/// Number of w in Z^m with ord(w) <= r such that no a in A satisfies a unlhd w.
std::uint64_t oracle_count_w(const LatticeSet& a, std::uint64_t r);

/// Sum over coordinates of the largest absolute coordinate value in S.
/// The dimension polynomial agrees with the enumeration for every r at or
/// above this bound.
std::uint64_t agreement_threshold(const LatticeSet& s);

}  // namespace delta
