#include "delta/schemes.hpp"

#include "delta/errors.hpp"
#include "delta/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace delta {

namespace {

constexpr std::size_t kPdeDim = 2;  // x and t

std::string derivative_name(const DerivativeIndex& d) {
  return "(" + std::to_string(d.x) + "," + std::to_string(d.t) + ")";
}

DiffPolynomial apply_operator(const DifferenceOperator& op, std::size_t unknown, std::size_t n) {
  DiffPolynomial out(kPdeDim, n);
  for (const auto& [g, c] : op) {
    out += c * DiffPolynomial::term(kPdeDim, n, TermKey{unknown, g});
  }
  return out;
}

}  // namespace

DiffPolynomial normalize_leading(const DiffPolynomial& p, const Ranking& rk) {
  if (p.in_ground_field()) return p;
  const auto init = initial_and_degree(p, rk).initial;
  if (init.size() != 1) return p;
  const ConstantPoly& c = init.terms().begin()->second;
  if (c.terms().size() != 1) return p;
  const Rational q = c.terms().begin()->second;
  if (q == 1) return p;
  DiffPolynomial out = p;
  out *= ConstantPoly(Rational(1) / q);
  return out;
}

std::vector<DiffPolynomial> discretize(const PdeSpec& pde, const SchemeRules& rules, const Ranking& rk) {
  const std::size_t n = pde.unknowns.size();
  if (n == 0) throw Error(ErrorKind::ArityError, "PDE without unknowns");
  if (rk.dim() != kPdeDim || rk.arity() != n) {
    throw Error(ErrorKind::DimMismatch, "ranking does not match 2 translations and " + std::to_string(n) +
                                            " indeterminates");
  }
  std::vector<DiffPolynomial> out;
  for (const auto& equation : pde.equations) {
    DiffPolynomial eq(kPdeDim, n);
    for (const auto& term : equation) {
      DiffPolynomial product = DiffPolynomial::constant(kPdeDim, n, term.coefficient);
      for (const auto& f : term.factors) {
        if (f.unknown >= n) throw Error(ErrorKind::ArityError, "unknown index out of range");
        const auto it = rules.rules.find(f.derivative);
        if (it == rules.rules.end()) {
          throw Error(ErrorKind::MissingRule,
                      "scheme '" + rules.name + "' has no rule for derivative " + derivative_name(f.derivative));
        }
        const DiffPolynomial applied = apply_operator(it->second, f.unknown, n);
        for (std::uint32_t k = 0; k < f.power; ++k) product = product * applied;
      }
      eq += product;
    }
    out.push_back(normalize_leading(eq, rk));
  }
  return out;
}

NumericalPolynomial psi_from_leaders(std::span<const TermKey> leaders, std::size_t m, std::size_t n) {
  std::vector<std::vector<Point>> groups(n);
  for (const auto& u : leaders) {
    if (u.idx >= n) throw Error(ErrorKind::ArityError, "leader indeterminate out of range");
    if (u.gamma.dim() != m) throw Error(ErrorKind::DimMismatch, "leader has the wrong number of translations");
    groups[u.idx].push_back(u.gamma);
  }
  NumericalPolynomial psi;
  for (auto& g : groups) {
    if (g.empty()) {
      psi += phi_empty(m);
    } else {
      psi += phi(LatticeSet(m, Signature::Integer, std::move(g)));
    }
  }
  return psi;
}

StrengthReport strength(std::span<const DiffPolynomial> system, const Ranking& rk, const OrbitSearch& search,
                        std::string scheme) {
  StrengthReport report{.scheme = std::move(scheme),
                        .system = {system.begin(), system.end()},
                        .charset = system_charset(system, rk, search),
                        .psi = {},
                        .sigma = std::nullopt,
                        .m = rk.dim(),
                        .n = rk.arity()};
  report.psi = psi_from_leaders(report.charset.leaders, report.m, report.n);
  try {
    report.sigma = sigma_invariants(report.psi, static_cast<unsigned>(report.m));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotSigmaShaped) throw;
  }
  return report;
}

std::vector<RankedReport> compare_schemes(std::span<const StrengthReport> reports) {
  std::vector<std::size_t> order(reports.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return eventual_compare(reports[a].psi, reports[b].psi) < 0;
  });
  std::vector<RankedReport> out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::size_t place = k + 1;
    if (k > 0 && eventual_compare(reports[order[k]].psi, reports[order[k - 1]].psi) == 0) {
      place = out.back().place;
    }
    out.push_back({order[k], place});
  }
  return out;
}

}  // namespace delta
