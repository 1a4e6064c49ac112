#pragma once

// Difference polynomials from the worked diffusion, reaction-diffusion and
// kinetics examples, written out literally in the file grammar.

#include "delta/diffpoly.hpp"
#include "delta/text.hpp"

#include <string>
#include <vector>

namespace fixture {

inline delta::Symbols one_var(std::vector<std::string> constants) {
  return {std::move(constants), {"s1", "s2"}, {"y"}};
}

/// Forward diffusion: a s1^2 y - 2a s1 y - s2 y + (a+1) y.
inline delta::DiffPolynomial forward_diffusion() {
  return delta::parse_poly("a*s1^2*y - 2*a*s1*y - s2*y + (a+1)*y", one_var({"a"}));
}

/// Symmetric diffusion.
inline delta::DiffPolynomial symmetric_diffusion() {
  return delta::parse_poly("a*s1 y + a*s1^-1 y - s2 y + s2^-1 y - 2*a*y", one_var({"a"}));
}

/// Crank-Nicolson template.
inline delta::DiffPolynomial crank_nicolson() {
  return delta::parse_poly("s1 s2 y + a1*s1^-1 s2 y + a2*s1 y + a3*s2 y + a4*s1^-1 y + a5",
                           one_var({"a1", "a2", "a3", "a4", "a5"}));
}

/// Forward form of u_xx + (a u + b) u_x + c u_t + F(u), F(u) = f0 + f1 u + f2 u^2,
/// with G(y) = F(y) - a y^2 - (b + c - 1) y.
inline delta::DiffPolynomial forward_reaction_diffusion() {
  return delta::parse_poly("s1^2 y + (a*y + b - 2)*s1 y + c*s2 y + f2*y^2 + f1*y + f0 - a*y^2 - (b + c - 1)*y",
                           one_var({"a", "b", "c", "f0", "f1", "f2"}));
}

/// Symmetric form of the same family.
inline delta::DiffPolynomial symmetric_reaction_diffusion() {
  return delta::parse_poly("(a*y + b + 1)*s1 y + (1 - a*y - b)*s1^-1 y + c*s2 y - c*s2^-1 y + f2*y^2 + f1*y + f0",
                           one_var({"a", "b", "c", "f0", "f1", "f2"}));
}

inline delta::Symbols kinetics_symbols(std::vector<std::string> constants) {
  return {std::move(constants), {"s1", "s2"}, {"y1", "y2", "y3"}};
}

/// Forward kinetics system as printed in the worked example.
inline std::vector<delta::DiffPolynomial> forward_kinetics() {
  const auto s = kinetics_symbols({"k1", "k2"});
  return {delta::parse_poly("s1^2 y1 - 2 s1 y1 - s2 y1 + 2 y1", s),
          delta::parse_poly("s1^2 y2 - 2 s1 y2 - s2 y2 + 2 y2", s),
          delta::parse_poly("s1^2 y3 - 2 s1 y3 - s2 y3 + k1 y1 y3 - k1 y3^2 + k2 y2 - k2 y3", s)};
}

inline delta::Ranking time_first(std::size_t n = 1) {
  std::vector<std::size_t> indets(n);
  for (std::size_t i = 0; i < n; ++i) indets[i] = i;
  return delta::Ranking({1, 0}, indets);
}

}  // namespace fixture
