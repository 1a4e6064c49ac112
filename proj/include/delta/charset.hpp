#pragma once

#include "delta/diffpoly.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace delta {

inline constexpr std::uint64_t kDefaultStepCap = 1'000'000;
inline constexpr Coord kDefaultWindow = 2;

/// Radius and stabilization window of the orbit sweep. An empty radius means
/// 2 * (largest term order of the generator) + 2.
struct OrbitSearch {
  std::optional<Coord> radius;
  Coord window = kDefaultWindow;
  std::uint64_t step_cap = kDefaultStepCap;
};

/// Autoreduced set in increasing rank, with the leader and provenance of each
/// element: element i was built from generator[i] shifted by shift[i].
struct CharacteristicSet {
  std::vector<DiffPolynomial> elements;
  Ranking ranking;
  std::vector<TermKey> leaders;
  std::vector<std::size_t> generator;
  std::vector<Gamma> shift;
  /// Every generator has the form a*u + B with a in K, so the ideal is prime.
  bool prime_certified = false;
  Coord search_radius_used = 0;
};

/// One step-by-step term of the ideal-membership certificate:
/// coefficient * shift(elements[element]).
struct Cofactor {
  DiffPolynomial coefficient;
  Gamma shift;
  std::size_t element;
};

struct ReductionResult {
  DiffPolynomial multiplier;  // J, a product of shifted initials (or 1)
  DiffPolynomial remainder;   // D0
  std::uint64_t steps = 0;
  /// J*D - D0 = sum of the cofactor terms; filled only on request.
  std::vector<Cofactor> certificate;
};

/// All gamma in Z^m with ord(gamma) <= radius, ordered by (ord, coordinates).
std::vector<Gamma> enumerate_ball(std::size_t m, Coord radius);

Coord default_radius(const DiffPolynomial& a);

/// Characteristic set of [A]* for a quasi-linear A: the shifts gamma*A whose
/// leaders are minimal under the transform order, one representative per
/// minimal leader, found by a bounded sweep over gamma that must stay stable
/// for `window` further radii.
///
/// Throws Error(ConstantPolynomial) for A in K, Error(NotQuasiLinear),
/// Error(Unstable) when the minimal leaders change inside the window.
CharacteristicSet orbit_minimal_charset(const DiffPolynomial& a, const Ranking& rk, const OrbitSearch& search = {});

/// Union of the orbit characteristic sets of a triangular system: leading
/// indeterminates pairwise distinct, and every orbit leader of a generator in
/// its own leading indeterminate. Elements of each group are reduced modulo
/// the other groups so that the union is autoreduced.
///
/// Throws Error(NotTriangular) when either condition fails or the union
/// cannot be made autoreduced without changing a leader.
CharacteristicSet system_charset(std::span<const DiffPolynomial> generators, const Ranking& rk,
                                 const OrbitSearch& search = {});

/// Pseudo-reduction of D modulo the set: repeatedly eliminates the highest
/// power of a transform of some leader, multiplying by the shifted initial.
/// Throws Error(StepCapExceeded) after step_cap steps.
ReductionResult reduce_remainder(const DiffPolynomial& d, const CharacteristicSet& cs,
                                 std::uint64_t step_cap = kDefaultStepCap, bool record_certificate = false);

/// E_i = exponent vectors of leaders in indeterminate i, for i < n.
std::vector<LatticeSet> leader_exponent_sets(const CharacteristicSet& cs, std::size_t n);

}  // namespace delta
