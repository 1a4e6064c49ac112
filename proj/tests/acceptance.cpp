// Acceptance checks: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include "delta/charset.hpp"
#include "delta/errors.hpp"
#include "delta/lattice.hpp"
#include "delta/numpoly.hpp"
#include "delta/schemes.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace delta;

namespace {

struct Check {
  std::ostringstream log;
  int failures = 0;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (++failures <= 5) log << "    " << what << "\n";
  }
};

NumericalPolynomial linear(long long slope, long long constant) {
  std::vector<Rational> c{constant, slope};
  return canonicalize(c);
}

LatticeSet zset(std::size_t m, std::vector<Point> pts) { return LatticeSet(m, Signature::Integer, std::move(pts)); }
LatticeSet nset(std::size_t m, std::vector<Point> pts) { return LatticeSet(m, Signature::NonNegative, std::move(pts)); }

std::set<Gamma> gammas(const std::vector<TermKey>& leaders) {
  std::set<Gamma> out;
  for (const auto& u : leaders) out.insert(u.gamma);
  return out;
}

std::string show(const NumericalPolynomial& p) { return to_string(p); }

const std::vector<Point> kForward = {{2, 0}, {-1, 1}, {1, -1}, {-2, -1}};
const std::vector<Point> kSymmetric = {{1, 0}, {-2, 0}};
const std::vector<Point> kCrankNicolson = {{1, 1}, {-2, 1}, {1, -1}, {-2, -1}};
const std::vector<Point> kEmbedded = {{1, 0, 0, 0}, {0, 0, 2, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}};

void criterion1(Check& c) {
  const auto p = phi(zset(2, kForward));
  c.expect(p == linear(5, 0), "phi = " + show(p));
}

void criterion2(Check& c) {
  const auto e = rho_embed(zset(2, kSymmetric));
  c.expect(e == nset(4, kEmbedded), "embedding differs from E'");
  const auto w = omega(nset(4, kEmbedded));
  c.expect(w == linear(4, 0), "omega(E') = " + show(w));
  const auto p = phi(zset(2, kSymmetric));
  c.expect(p == linear(4, 0), "phi = " + show(p));
}

void criterion3(Check& c) {
  const auto p = phi(zset(2, kCrankNicolson));
  c.expect(p == linear(6, -1), "phi = " + show(p));
}

void criterion4(Check& c) {
  const Ranking rk(2, 1);
  const auto a = orbit_minimal_charset(fixture::forward_diffusion(), rk);
  c.expect(a.elements.size() == 4, "A: " + std::to_string(a.elements.size()) + " elements");
  c.expect(gammas(a.leaders) == std::set<Gamma>(kForward.begin(), kForward.end()), "A: leader set");
  const auto b = orbit_minimal_charset(fixture::symmetric_diffusion(), rk);
  c.expect(gammas(b.leaders) == std::set<Gamma>(kSymmetric.begin(), kSymmetric.end()), "B: leader set");
  c.expect(b.elements.size() == 2, "B: element count");
  const auto cn = orbit_minimal_charset(fixture::crank_nicolson(), rk);
  c.expect(gammas(cn.leaders) == std::set<Gamma>(kCrankNicolson.begin(), kCrankNicolson.end()), "C: leader set");
  c.expect(cn.elements.size() == 4, "C: element count");
}

void criterion5(Check& c) {
  const std::vector<DiffPolynomial> sym{fixture::symmetric_reaction_diffusion()};
  const auto r = strength(sym, fixture::time_first());
  c.expect(r.psi == linear(4, 0), "symmetric form: " + show(r.psi));
  c.expect(gammas(r.charset.leaders) == std::set<Gamma>{{0, 1}, {0, -2}}, "symmetric form: leader set");

  const std::vector<DiffPolynomial> fwd{fixture::forward_reaction_diffusion()};
  const auto f = strength(fwd, Ranking(2, 1));
  c.expect(f.psi == linear(5, 0), "generic forward form: " + show(f.psi));

  for (const auto& name : catalog_names()) {
    if (name == "diffusion" || name == "kinetics-system") continue;
    const auto e = catalog_entry(name, "forward");
    const auto p = strength(e.system, e.ranking).psi;
    c.expect(p == linear(5, 0), name + " forward: " + show(p));
  }
}

void criterion6(Check& c) {
  const auto printed = fixture::forward_kinetics();
  const auto lit = strength(printed, Ranking(2, 3));
  c.expect(lit.psi == linear(15, 0), "printed forward system: " + show(lit.psi));

  const std::vector<std::pair<std::string, NumericalPolynomial>> expected{
      {"forward", linear(15, 0)}, {"symmetric", linear(12, 0)}, {"crank-nicolson", linear(18, -3)}};
  std::vector<StrengthReport> reports;
  for (const auto& [scheme, psi] : expected) {
    const auto e = catalog_entry("kinetics-system", scheme);
    reports.push_back(strength(e.system, e.ranking, {}, scheme));
    c.expect(reports.back().psi == psi, scheme + ": " + show(reports.back().psi));
  }
  const auto ranked = compare_schemes(reports);
  c.expect(reports[ranked.front().index].scheme == "symmetric", "symmetric is not ranked first");
  c.expect(ranked.front().place == 1 && ranked[1].place == 2, "symmetric does not stand alone in first place");
}

void criterion7(Check& c) {
  oracle::RandomSets gen(7001);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = gen.dim(1, 3);
    const auto pts = gen.integer_set(m, 5, 3);
    const auto a = zset(m, pts);
    const auto p = phi(a);
    const auto r0 = agreement_threshold(a);
    for (std::uint64_t r = r0; r <= r0 + 5; ++r) {
      const auto expected = oracle::count_w(pts, m, static_cast<Coord>(r));
      c.expect(evaluate(p, r) == expected, "phi trial " + std::to_string(trial) + " r=" + std::to_string(r));
      c.expect(oracle_count_w(a, r) == expected, "oracle_count_w trial " + std::to_string(trial));
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = gen.dim(1, 3);
    const auto pts = gen.natural_set(m, 5, 3);
    const auto e = nset(m, pts);
    const auto w = omega(e);
    const auto r0 = agreement_threshold(e);
    for (std::uint64_t r = r0; r <= r0 + 5; ++r) {
      const auto expected = oracle::count_v(pts, m, static_cast<Coord>(r));
      c.expect(evaluate(w, r) == expected, "omega trial " + std::to_string(trial) + " r=" + std::to_string(r));
      c.expect(oracle_count_v(e, r) == expected, "oracle_count_v trial " + std::to_string(trial));
    }
  }
}

void criterion8(Check& c) {
  // Smallest instance: W(r) = {-r, ..., 2} for A = {(3)}, so phi = t + 3 = C(t+1,1) + 2.
  for (Coord r = 2; r <= 8; ++r) c.expect(oracle::count_w({{3}}, 1, r) == static_cast<std::uint64_t>(r + 3), "count for {(3)}");
  const auto single = phi(zset(1, {{3}}));
  c.expect(single.binomial_coeff(1) % 2 == 0, "A = {(3)} in Z^1: phi = " + show(single) + ", a_1 = " +
                                                  single.binomial_coeff(1).str());
  oracle::RandomSets gen(7001);
  int degree_failures = 0, divisibility_failures = 0, zero_failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = gen.dim(1, 3);
    const auto pts = gen.integer_set(m, 5, 3);
    const auto p = phi(zset(m, pts));
    const std::string tag = "trial " + std::to_string(trial) + " (m=" + std::to_string(m) + ")";
    degree_failures += p.degree() > static_cast<int>(m);
    c.expect(p.degree() <= static_cast<int>(m), tag + ": degree " + std::to_string(p.degree()));
    const Integer am = p.binomial_coeff(static_cast<int>(m));
    divisibility_failures += am % (Integer(1) << m) != 0;
    c.expect(am % (Integer(1) << m) == 0, tag + ": a_m = " + am.str() + " for phi = " + show(p));
    const bool has_origin = std::any_of(pts.begin(), pts.end(), [](const Point& x) { return x.is_zero(); });
    zero_failures += p.is_zero() != has_origin;
    c.expect(p.is_zero() == has_origin, tag + ": zero iff origin");
  }
  for (unsigned m = 1; m <= 4; ++m) {
    const auto p = phi(zset(m, {}));
    for (int r = 0; r <= 12; ++r) {
      c.expect(evaluate(p, r) == Rational(oracle::empty_set_count(m, r)), "empty set m=" + std::to_string(m));
    }
    c.expect(p == phi_empty(m), "phi_empty m=" + std::to_string(m));
  }
  if (c.failures) {
    c.log << "    failures by property: degree " << degree_failures << ", divisibility " << divisibility_failures
          << ", zero iff origin " << zero_failures << " (of 200)\n";
  }
}

void check_reductions(Check& c, const std::string& label, std::span<const DiffPolynomial> gens, const Ranking& rk) {
  const auto cs = gens.size() == 1 ? orbit_minimal_charset(gens[0], rk) : system_charset(gens, rk);
  for (const auto& a : gens) {
    for (const auto& g : enumerate_ball(rk.dim(), 4)) {
      const auto r = reduce_remainder(apply_gamma(a, g), cs);
      c.expect(r.remainder.is_zero(), label + ": shift " + to_string(g) + " leaves a remainder");
      c.expect(is_reduced(r.remainder, cs.elements, rk), label + ": remainder not reduced");
    }
  }
}

void criterion9(Check& c) {
  const Ranking rk(2, 1);
  const std::vector<DiffPolynomial> a{fixture::forward_diffusion()}, b{fixture::symmetric_diffusion()},
      cn{fixture::crank_nicolson()}, sym{fixture::symmetric_reaction_diffusion()},
      fwd{fixture::forward_reaction_diffusion()};
  check_reductions(c, "A", a, rk);
  check_reductions(c, "B", b, rk);
  check_reductions(c, "C", cn, rk);
  check_reductions(c, "forward reaction-diffusion", fwd, rk);
  check_reductions(c, "symmetric reaction-diffusion", sym, fixture::time_first());
  check_reductions(c, "kinetics", fixture::forward_kinetics(), Ranking(2, 3));
}

// Random point in the closed orthant with the given signs.
Gamma in_orthant(std::mt19937_64& rng, const std::vector<int>& signs) {
  std::uniform_int_distribution<Coord> mag(0, 3);
  std::vector<Coord> v(signs.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = signs[k] * mag(rng);
  return Gamma(v);
}

void criterion10(Check& c) {
  std::mt19937_64 rng(10010);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = 1 + trial % 3;
    std::vector<std::size_t> identity(m), swapped(m);
    for (std::size_t i = 0; i < m; ++i) identity[i] = swapped[i] = i;
    if (m >= 2) std::swap(swapped[0], swapped[1]);
    std::vector<int> signs(m);
    for (auto& s : signs) s = coin(rng) ? 1 : -1;
    const TermKey u{static_cast<std::size_t>(coin(rng)), in_orthant(rng, signs)};
    const TermKey v{static_cast<std::size_t>(coin(rng)), in_orthant(rng, signs)};
    const Gamma g = in_orthant(rng, signs);
    const std::string tag = "sample " + std::to_string(trial);
    for (const auto& priority : {identity, swapped}) {
      const Ranking rk(priority, {0, 1});
      const TermKey gu{u.idx, u.gamma + g}, gv{v.idx, v.gamma + g};
      // u <= gamma u when gamma lies in the orthant of u
      c.expect(rk.compare(u, gu) <= 0, tag + ": u > gamma u");
      // u <= v implies gamma u <= gamma v in a shared orthant
      if (rk.compare(u, v) <= 0) c.expect(rk.compare(gu, gv) <= 0, tag + ": shift breaks u <= v");
      if (u.ord() < v.ord()) c.expect(rk.compare(u, v) < 0, tag + ": not orderly");
      c.expect((rk.compare(u, v) == 0) == (u == v), tag + ": distinct terms compare equal");
      c.expect(rk.compare(v, u) == (0 <=> rk.compare(u, v)), tag + ": not antisymmetric");
      c.expect(rk.compare(u, v) == (oracle::rank_key(u, priority, {0, 1}) <=> oracle::rank_key(v, priority, {0, 1})),
               tag + ": tuple order");
    }
  }
}

void criterion11(Check& c) {
  const auto a = zset(2, kForward);
  for (Coord r = 3; r <= 10; ++r) {
    c.expect(oracle_count_w(a, r) == static_cast<std::uint64_t>(5 * r), "library count at r=" + std::to_string(r));
    c.expect(oracle::count_w(kForward, 2, r) == static_cast<std::uint64_t>(5 * r),
             "enumeration at r=" + std::to_string(r));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"phi of the forward leader set is 5t", criterion1},
      {"rho embedding of the symmetric set is E' and omega(E') = phi = 4t", criterion2},
      {"phi of the Crank-Nicolson leader set is 6t - 1", criterion3},
      {"orbit characteristic sets of A, B and C", criterion4},
      {"reaction-diffusion strengths: symmetric 4t, forward 5t for every catalog entry", criterion5},
      {"kinetics system: 15t, 12t, 18t - 3, symmetric ranked first", criterion6},
      {"phi and omega agree with enumeration on 200 + 200 random sets", criterion7},
      {"degree, divisibility, zero and empty-set properties of phi", criterion8},
      {"every shift of order <= 4 reduces to zero", criterion9},
      {"ranking axioms on 1000 random samples, both priorities", criterion10},
      {"oracle count for the forward set is 5r on [3,10]", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.failures == 0 ? "[PASS] " : "[FAIL] ") << "criterion " << (i + 1) << ": " << criteria[i].first
              << "\n";
    if (c.failures) {
      std::cout << c.log.str();
      ++failed;
    }
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed;
}
