#include "delta/diffpoly.hpp"
#include "delta/errors.hpp"
#include "delta/text.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace delta;

namespace {

const Symbols kSym = fixture::one_var({"a"});

DiffPolynomial P(const std::string& text) { return parse_poly(text, kSym); }
TermKey T(Coord x, Coord t, std::size_t idx = 0) { return TermKey{idx, Gamma{x, t}}; }

const Ranking kStandard(2, 1);

}  // namespace

TEST(ConstantPoly, Arithmetic) {
  const auto a = ConstantPoly::symbol(0), b = ConstantPoly::symbol(1);
  const auto p = (a + 1) * (a - 1);
  EXPECT_EQ(p, a * a - 1);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_TRUE(ConstantPoly(Rational(3, 2)).is_numeric());
  EXPECT_EQ(ConstantPoly(Rational(3, 2)).as_rational(), Rational(3, 2));
  EXPECT_FALSE(a.as_rational());
  const std::vector<std::string> names{"a", "b", "c"};
  EXPECT_EQ(to_string(a * a * b - Rational(3, 2) * ConstantPoly::symbol(2) + 1, names), "a^2*b - 3/2*c + 1");
  const std::vector<std::size_t> swap{1, 0};
  EXPECT_EQ((a + 2 * b).renamed(swap), b + 2 * a);
}

TEST(DiffPolynomial, CollectsLikeMonomials) {
  const auto p = P("y*s1 y + s1 y * y - 2*s1*y*y");
  EXPECT_TRUE(p.is_zero());
  const auto q = P("y");
  EXPECT_EQ(q.size(), 1u);
}

TEST(DiffPolynomial, ShapeErrors) {
  EXPECT_THROW(DiffPolynomial::term(2, 1, TermKey{0, Gamma{1, 0, 0}}), Error);
  EXPECT_THROW(DiffPolynomial::term(2, 1, TermKey{1, Gamma{1, 0}}), Error);
  EXPECT_THROW(DiffPolynomial(2, 1) + DiffPolynomial(3, 1), Error);
}

TEST(ApplyGamma, ShiftsEveryTerm) {
  const auto a = fixture::forward_diffusion();
  // A2 = s1^-1 A as listed in the worked example
  EXPECT_EQ(apply_gamma(a, Gamma{-1, 0}), P("-s1^-1 s2 y + a*s1 y + (a+1)*s1^-1 y - 2*a*y"));
  EXPECT_EQ(apply_gamma(a, Gamma{0, 0}), a);
  EXPECT_EQ(apply_gamma(apply_gamma(a, Gamma{3, -2}), Gamma{-3, 2}), a);
  EXPECT_THROW(apply_gamma(a, Gamma{1}), Error);
}

TEST(Ranking, Examples) {
  EXPECT_EQ(ranking_compare(T(2, 0), T(0, 1), kStandard), std::strong_ordering::greater);
  EXPECT_EQ(ranking_compare(T(0, 1), T(1, 0), fixture::time_first()), std::strong_ordering::greater);
  EXPECT_EQ(ranking_compare(T(0, 1), T(1, 0), kStandard), std::strong_ordering::less);
  EXPECT_EQ(ranking_compare(T(1, -1), T(-1, -1), kStandard), std::strong_ordering::greater);
  EXPECT_EQ(ranking_compare(T(1, -1), T(1, -1), kStandard), std::strong_ordering::equal);
  EXPECT_THROW(ranking_compare(T(1, 0), TermKey{0, Gamma{1}}, kStandard), Error);
  EXPECT_THROW(Ranking({0, 0}, {0}), Error);
  EXPECT_THROW(Ranking({0, 1}, {1}), Error);
}

TEST(Ranking, MatchesExplicitTupleOrder) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<Coord> coord(-3, 3);
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<std::size_t> priority(m), indets(n);
      for (std::size_t i = 0; i < m; ++i) priority[i] = m - 1 - i;
      for (std::size_t i = 0; i < n; ++i) indets[i] = (i + 1) % n;
      const Ranking rk(priority, indets);
      EXPECT_EQ(rk.indeterminate_order(), indets);
      std::uniform_int_distribution<std::size_t> idx(0, n - 1);
      for (int trial = 0; trial < 300; ++trial) {
        std::vector<Coord> g(m), h(m);
        for (auto& x : g) x = coord(rng);
        for (auto& x : h) x = coord(rng);
        const TermKey u{idx(rng), Gamma(g)}, v{idx(rng), Gamma(h)};
        const auto ku = oracle::rank_key(u, priority, indets), kv = oracle::rank_key(v, priority, indets);
        ASSERT_EQ(rk.compare(u, v), ku <=> kv);
      }
    }
  }
}

TEST(Leader, Examples) {
  const auto a = fixture::forward_diffusion();
  EXPECT_EQ(leader(a, kStandard), T(2, 0));
  EXPECT_EQ(leader(apply_gamma(a, Gamma{-1, 0}), kStandard), T(-1, 1));
  EXPECT_EQ(leader(fixture::symmetric_reaction_diffusion(), fixture::time_first()), T(0, 1));
  try {
    leader(P("a + 1"), kStandard);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConstantPolynomial);
  }
}

TEST(Leader, CommutesWithShiftsInTheLeaderOrthant) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Coord> coord(0, 3);
  const auto a = fixture::forward_diffusion();
  const auto u = leader(a, kStandard);  // (2,0): first quadrant
  for (int trial = 0; trial < 50; ++trial) {
    const Gamma g{coord(rng), 0};
    const auto shifted = apply_gamma(a, g);
    EXPECT_EQ(leader(shifted, kStandard), (TermKey{0, u.gamma + g}));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const Gamma g{coord(rng) - 3, coord(rng) - 3};
    const auto shifted = apply_gamma(a, g);
    const auto l = leader(shifted, kStandard);
    const auto support = shifted.support();
    EXPECT_NE(std::find(support.begin(), support.end(), l), support.end());
  }
}

TEST(InitialAndDegree, Examples) {
  auto r = initial_and_degree(fixture::forward_diffusion(), kStandard);
  EXPECT_EQ(r.initial, P("a"));
  EXPECT_EQ(r.degree, 1u);

  const Symbols abc = fixture::one_var({"a", "b", "c", "f0", "f1", "f2"});
  r = initial_and_degree(fixture::symmetric_reaction_diffusion(), fixture::time_first());
  EXPECT_EQ(r.initial, parse_poly("c", abc));
  EXPECT_EQ(r.degree, 1u);

  r = initial_and_degree(P("(s1 y)^2 + y"), kStandard);
  EXPECT_EQ(r.initial, P("1"));
  EXPECT_EQ(r.degree, 2u);

  // initial mentions lower terms
  r = initial_and_degree(P("y*s1 y + s1^-1 y"), kStandard);
  EXPECT_EQ(r.initial, P("y"));
  EXPECT_THROW(initial_and_degree(P("3"), kStandard), Error);
}

TEST(Transform, Examples) {
  EXPECT_TRUE(is_transform(T(1, 0), T(2, 1)));
  EXPECT_FALSE(is_transform(T(1, 0), T(-1, 0)));
  EXPECT_TRUE(is_transform(T(0, -1), T(0, -2)));
  EXPECT_FALSE(is_transform(T(0, 0, 0), T(0, 0, 1)));
  EXPECT_TRUE(is_transform(T(1, 1), T(1, 1)));
  EXPECT_FALSE(is_proper_transform(T(1, 1), T(1, 1)));
  EXPECT_TRUE(is_proper_transform(T(1, 1), T(1, 2)));
}

TEST(Transform, MatchesOrthantDefinition) {
  for (Coord a = -2; a <= 2; ++a)
    for (Coord b = -2; b <= 2; ++b)
      for (Coord c = -2; c <= 2; ++c)
        for (Coord d = -2; d <= 2; ++d) {
          ASSERT_EQ(is_transform(T(a, b), T(c, d)), oracle::below_in_some_orthant({a, b}, {c, d}));
        }
}

TEST(QuasiLinear, Examples) {
  EXPECT_TRUE(is_quasi_linear(fixture::symmetric_reaction_diffusion(), fixture::time_first()));
  EXPECT_FALSE(is_quasi_linear(P("(s1 y)^2 + s2 y"), kStandard));
  EXPECT_TRUE(is_quasi_linear(fixture::forward_diffusion(), kStandard));
  EXPECT_THROW(is_quasi_linear(P("a"), kStandard), Error);
}

TEST(Reduced, Examples) {
  const auto a = fixture::forward_diffusion();
  EXPECT_TRUE(is_reduced(P("y"), a, kStandard));
  EXPECT_FALSE(is_reduced(P("s1^3 y"), a, kStandard));
  EXPECT_TRUE(is_reduced(P("s1^-1 y"), a, kStandard));
  // degree below the leader degree does not count
  EXPECT_TRUE(is_reduced(P("s1^3 y"), P("(s1^2 y)^2 + y"), kStandard));
  EXPECT_FALSE(is_reduced(P("(s1^3 y)^2"), P("(s1^2 y)^2 + y"), kStandard));
  EXPECT_THROW(is_reduced(P("y"), P("a"), kStandard), Error);
}

TEST(Autoreduced, Examples) {
  const auto a = fixture::forward_diffusion();
  std::vector<DiffPolynomial> cs{a, apply_gamma(a, Gamma{-1, 0}), apply_gamma(a, Gamma{-1, -1}),
                                 apply_gamma(a, Gamma{-2, -1})};
  EXPECT_TRUE(is_autoreduced(cs, kStandard));
  std::vector<DiffPolynomial> bad{a, apply_gamma(a, Gamma{1, 0})};
  EXPECT_FALSE(is_autoreduced(bad, kStandard));
  EXPECT_TRUE(is_autoreduced(std::vector<DiffPolynomial>{}, kStandard));
  std::vector<DiffPolynomial> with_constant{a, P("a")};
  EXPECT_FALSE(is_autoreduced(with_constant, kStandard));
}

TEST(Autoreduced, ImpliesDistinctLeaders) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Coord> coord(-3, 3);
  const auto a = fixture::forward_diffusion();
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<DiffPolynomial> set;
    for (int k = 0; k < 3; ++k) set.push_back(apply_gamma(a, Gamma{coord(rng), coord(rng)}));
    if (!is_autoreduced(set, kStandard)) continue;
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j)
        EXPECT_NE(leader(set[i], kStandard), leader(set[j], kStandard));
  }
}

TEST(RankCompare, Examples) {
  EXPECT_EQ(rank_compare(P("y + 1"), P("s1 y"), kStandard), std::strong_ordering::less);
  EXPECT_EQ(rank_compare(P("s1 y"), P("2*s1 y + y"), kStandard), std::strong_ordering::equal);
  EXPECT_EQ(rank_compare(P("5"), P("y"), kStandard), std::strong_ordering::less);
  EXPECT_EQ(rank_compare(P("(s1 y)^2"), P("s1 y"), kStandard), std::strong_ordering::greater);
  EXPECT_EQ(rank_compare(P("5"), P("a"), kStandard), std::strong_ordering::equal);
}

TEST(SetRankCompare, Examples) {
  const auto a = fixture::forward_diffusion();
  const auto a1 = apply_gamma(a, Gamma{1, 0});
  const auto a2 = apply_gamma(a, Gamma{-1, 0});
  const std::vector<DiffPolynomial> s{a}, t{a1}, longer{a, a2};
  EXPECT_EQ(set_rank_compare(s, t, kStandard), std::strong_ordering::less);
  EXPECT_EQ(set_rank_compare(t, s, kStandard), std::strong_ordering::greater);
  EXPECT_EQ(set_rank_compare(s, s, kStandard), std::strong_ordering::equal);
  EXPECT_EQ(set_rank_compare(longer, s, kStandard), std::strong_ordering::less);
  const std::vector<DiffPolynomial> bad{a, a1};
  try {
    set_rank_compare(bad, s, kStandard);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAutoreduced);
  }
}

TEST(SortByRank, Increasing) {
  const auto a = fixture::forward_diffusion();
  std::vector<DiffPolynomial> set{a, apply_gamma(a, Gamma{-2, -1}), P("y"), apply_gamma(a, Gamma{-1, 0})};
  sort_by_rank(set, kStandard);
  for (std::size_t i = 1; i < set.size(); ++i) EXPECT_TRUE(rank_compare(set[i - 1], set[i], kStandard) <= 0);
  EXPECT_EQ(set.front(), P("y"));
}
