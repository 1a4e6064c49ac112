#include "delta/charset.hpp"

#include "delta/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace delta {

std::vector<Gamma> enumerate_ball(std::size_t m, Coord radius) {
  std::vector<Gamma> out;
  std::vector<Coord> g(m, 0);
  std::function<void(std::size_t, Coord)> walk = [&](std::size_t i, Coord budget) {
    if (i == m) {
      out.emplace_back(g);
      return;
    }
    for (Coord x = -budget; x <= budget; ++x) {
      g[i] = x;
      walk(i + 1, budget - std::abs(x));
    }
    g[i] = 0;
  };
  if (radius >= 0) walk(0, radius);
  std::sort(out.begin(), out.end(), [](const Gamma& a, const Gamma& b) {
    if (a.ord() != b.ord()) return a.ord() < b.ord();
    return a < b;
  });
  return out;
}

Coord default_radius(const DiffPolynomial& a) { return 2 * a.max_term_order() + 2; }

namespace {

struct OrbitPoint {
  Gamma gamma;
  TermKey leader;
};

std::vector<TermKey> minimal_leaders(const std::vector<OrbitPoint>& orbit, Coord radius) {
  std::set<TermKey> seen;
  for (const auto& pt : orbit) {
    if (pt.gamma.ord() <= radius) seen.insert(pt.leader);
  }
  std::vector<TermKey> all(seen.begin(), seen.end());
  std::vector<TermKey> out;
  for (const auto& u : all) {
    const bool dominated =
        std::any_of(all.begin(), all.end(), [&](const TermKey& v) { return is_proper_transform(v, u); });
    if (!dominated) out.push_back(u);
  }
  return out;
}

// Among shifts producing the same leader: unlhd-minimal, then lexicographically smallest.
Gamma canonical_shift(const std::vector<Gamma>& candidates) {
  std::vector<Gamma> minimal;
  for (const auto& g : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                       [&](const Gamma& h) { return h != g && unlhd(h, g); });
    if (!dominated) minimal.push_back(g);
  }
  return *std::min_element(minimal.begin(), minimal.end());
}

void sort_charset(CharacteristicSet& cs) {
  std::vector<std::size_t> order(cs.elements.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rank_compare(cs.elements[a], cs.elements[b], cs.ranking) < 0;
  });
  CharacteristicSet sorted{.elements = {},
                           .ranking = cs.ranking,
                           .leaders = {},
                           .generator = {},
                           .shift = {},
                           .prime_certified = cs.prime_certified,
                           .search_radius_used = cs.search_radius_used};
  for (auto i : order) {
    sorted.elements.push_back(cs.elements[i]);
    sorted.leaders.push_back(cs.leaders[i]);
    sorted.generator.push_back(cs.generator[i]);
    sorted.shift.push_back(cs.shift[i]);
  }
  cs = std::move(sorted);
}

DiffPolynomial unit(const DiffPolynomial& like) { return DiffPolynomial::constant(like.dim(), like.arity(), 1); }

bool is_unit(const DiffPolynomial& p) {
  return p.size() == 1 && p.terms().begin()->first.is_unit() && p.terms().begin()->second == ConstantPoly(1);
}

}  // namespace

CharacteristicSet orbit_minimal_charset(const DiffPolynomial& a, const Ranking& rk, const OrbitSearch& search) {
  const auto init = initial_and_degree(a, rk);  // throws ConstantPolynomial for a in K
  if (init.degree != 1) {
    throw Error(ErrorKind::NotQuasiLinear,
                "leader occurs with degree " + std::to_string(init.degree) + ", expected 1");
  }
  const Coord radius = search.radius.value_or(default_radius(a));
  const Coord window = std::max<Coord>(search.window, 0);
  if (radius < 0) throw Error(ErrorKind::Unstable, "negative search radius");

  const auto support = a.support();
  std::vector<OrbitPoint> orbit;
  for (const auto& g : enumerate_ball(a.dim(), radius + window)) {
    TermKey best{support.front().idx, support.front().gamma + g};
    for (const auto& t : support) {
      TermKey shifted{t.idx, t.gamma + g};
      if (rk.compare(shifted, best) > 0) best = std::move(shifted);
    }
    orbit.push_back({g, std::move(best)});
  }

  const auto minimal = minimal_leaders(orbit, radius);
  for (Coord r = radius + 1; r <= radius + window; ++r) {
    if (minimal_leaders(orbit, r) != minimal) {
      throw Error(ErrorKind::Unstable, "minimal leaders change between radius " + std::to_string(radius) +
                                           " and " + std::to_string(r) + "; raise the radius");
    }
  }

  CharacteristicSet cs{.elements = {},
                       .ranking = rk,
                       .leaders = {},
                       .generator = {},
                       .shift = {},
                       .prime_certified = init.initial.in_ground_field() && !init.initial.is_zero(),
                       .search_radius_used = radius};
  for (const auto& u : minimal) {
    std::vector<Gamma> candidates;
    for (const auto& pt : orbit) {
      if (pt.gamma.ord() <= radius && pt.leader == u) candidates.push_back(pt.gamma);
    }
    const Gamma g = canonical_shift(candidates);
    cs.elements.push_back(apply_gamma(a, g));
    cs.leaders.push_back(u);
    cs.generator.push_back(0);
    cs.shift.push_back(g);
  }
  sort_charset(cs);
  if (!is_autoreduced(cs.elements, rk)) {
    throw Error(ErrorKind::NotAutoreduced, "orbit-minimal elements are not mutually reduced");
  }
  return cs;
}

CharacteristicSet system_charset(std::span<const DiffPolynomial> generators, const Ranking& rk,
                                 const OrbitSearch& search) {
  if (generators.empty()) throw Error(ErrorKind::NotTriangular, "empty system");

  CharacteristicSet all{.elements = {},
                        .ranking = rk,
                        .leaders = {},
                        .generator = {},
                        .shift = {},
                        .prime_certified = true,
                        .search_radius_used = 0};
  std::vector<std::size_t> leading_indet;
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const auto& g = generators[gi];
    const std::size_t idx = leader(g, rk).idx;
    if (std::find(leading_indet.begin(), leading_indet.end(), idx) != leading_indet.end()) {
      throw Error(ErrorKind::NotTriangular,
                  "generators " + std::to_string(gi) + " and an earlier one share leading indeterminate " +
                      std::to_string(idx));
    }
    leading_indet.push_back(idx);

    auto cs = orbit_minimal_charset(g, rk, search);
    for (std::size_t k = 0; k < cs.elements.size(); ++k) {
      if (cs.leaders[k].idx != idx) {
        throw Error(ErrorKind::NotTriangular, "an orbit leader of generator " + std::to_string(gi) +
                                                  " leaves its leading indeterminate");
      }
      all.elements.push_back(std::move(cs.elements[k]));
      all.leaders.push_back(cs.leaders[k]);
      all.generator.push_back(gi);
      all.shift.push_back(cs.shift[k]);
    }
    all.prime_certified = all.prime_certified && cs.prime_certified;
    all.search_radius_used = std::max(all.search_radius_used, cs.search_radius_used);
  }

  if (generators.size() > 1) {
    // Reduce each group modulo the groups of lower leading indeterminates.
    std::vector<std::size_t> order(generators.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto indet_order = rk.indeterminate_order();
    auto indet_pos = [&](std::size_t idx) {
      return std::find(indet_order.begin(), indet_order.end(), idx) - indet_order.begin();
    };
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return indet_pos(leading_indet[a]) < indet_pos(leading_indet[b]); });

    for (std::size_t pos = 1; pos < order.size(); ++pos) {
      CharacteristicSet lower{.elements = {},
                              .ranking = rk,
                              .leaders = {},
                              .generator = {},
                              .shift = {},
                              .prime_certified = false,
                              .search_radius_used = 0};
      for (std::size_t k = 0; k < all.elements.size(); ++k) {
        const auto gpos = std::find(order.begin(), order.end(), all.generator[k]) - order.begin();
        if (static_cast<std::size_t>(gpos) < pos) {
          lower.elements.push_back(all.elements[k]);
          lower.leaders.push_back(all.leaders[k]);
          lower.generator.push_back(all.generator[k]);
          lower.shift.push_back(all.shift[k]);
        }
      }
      for (std::size_t k = 0; k < all.elements.size(); ++k) {
        if (all.generator[k] != order[pos]) continue;
        const auto degree = initial_and_degree(all.elements[k], rk).degree;
        auto red = reduce_remainder(all.elements[k], lower, search.step_cap);
        if (red.remainder.in_ground_field() || leader(red.remainder, rk) != all.leaders[k] ||
            initial_and_degree(red.remainder, rk).degree != degree) {
          throw Error(ErrorKind::NotTriangular, "reduction modulo lower indeterminates changes the leader " +
                                                    std::string("of a shifted generator"));
        }
        all.elements[k] = std::move(red.remainder);
      }
    }
  }

  sort_charset(all);
  if (!is_autoreduced(all.elements, rk)) {
    throw Error(ErrorKind::NotTriangular, "union of the orbit characteristic sets is not autoreduced");
  }
  return all;
}

ReductionResult reduce_remainder(const DiffPolynomial& d, const CharacteristicSet& cs, std::uint64_t step_cap,
                                 bool record_certificate) {
  const auto& rk = cs.ranking;
  std::vector<InitialAndDegree> inits;
  inits.reserve(cs.elements.size());
  for (const auto& e : cs.elements) inits.push_back(initial_and_degree(e, rk));

  ReductionResult res{.multiplier = unit(d), .remainder = d, .steps = 0, .certificate = {}};
  for (;;) {
    // Highest term carrying an offending power, and the element to use.
    std::optional<TermKey> target;
    std::size_t chosen = 0;
    std::uint32_t target_degree = 0;
    std::map<TermKey, std::uint32_t> max_degree;
    for (const auto& [mono, c] : res.remainder.terms()) {
      for (const auto& [t, e] : mono.factors()) max_degree[t] = std::max(max_degree[t], e);
    }
    for (const auto& [t, e] : max_degree) {
      if (target && rk.compare(t, *target) <= 0) continue;
      std::optional<std::size_t> best;
      for (std::size_t k = 0; k < cs.elements.size(); ++k) {
        if (e < inits[k].degree || !is_transform(cs.leaders[k], t)) continue;
        if (!best || rk.compare(cs.leaders[k], cs.leaders[*best]) > 0) best = k;
      }
      if (best) {
        target = t;
        chosen = *best;
        target_degree = e;
      }
    }
    if (!target) break;

    if (res.steps >= step_cap) {
      throw Error(ErrorKind::StepCapExceeded,
                  "reduction exceeded " + std::to_string(step_cap) + " steps; " +
                      std::to_string(res.remainder.size()) + " monomials remain");
    }
    ++res.steps;

    const Gamma g = target->gamma - cs.leaders[chosen].gamma;
    const DiffPolynomial shifted = apply_gamma(cs.elements[chosen], g);
    const DiffPolynomial shifted_init = apply_gamma(inits[chosen].initial, g);

    // q = (coefficient of target^e) * target^(e - deg)
    DiffPolynomial q(d.dim(), d.arity());
    const std::uint32_t lift = target_degree - inits[chosen].degree;
    for (const auto& [mono, c] : res.remainder.terms()) {
      if (mono.degree_in(*target) != target_degree) continue;
      q.add(mono.without(*target) * Monomial(*target, lift), c);
    }

    const bool monic = is_unit(shifted_init);
    if (!monic) {
      res.remainder = shifted_init * res.remainder;
      res.multiplier = shifted_init * res.multiplier;
      if (record_certificate) {
        for (auto& cf : res.certificate) cf.coefficient = shifted_init * cf.coefficient;
      }
    }
    res.remainder -= q * shifted;
    if (record_certificate) res.certificate.push_back({std::move(q), g, chosen});
  }
  return res;
}

std::vector<LatticeSet> leader_exponent_sets(const CharacteristicSet& cs, std::size_t n) {
  std::vector<std::vector<Point>> pts(n);
  for (const auto& u : cs.leaders) {
    if (u.idx >= n) throw Error(ErrorKind::ArityError, "leader indeterminate outside the requested arity");
    pts[u.idx].push_back(u.gamma);
  }
  const std::size_t m = cs.ranking.dim();
  std::vector<LatticeSet> out;
  out.reserve(n);
  for (auto& p : pts) out.emplace_back(m, Signature::Integer, std::move(p));
  return out;
}

}  // namespace delta
