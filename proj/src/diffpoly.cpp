#include "delta/diffpoly.hpp"

#include "delta/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace delta {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(const TermKey& t, std::uint32_t exponent) {
  if (exponent > 0) factors_.emplace_back(t, exponent);
}

std::uint32_t Monomial::degree_in(const TermKey& t) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), t,
                             [](const Factor& f, const TermKey& key) { return f.first < key; });
  return it != factors_.end() && it->first == t ? it->second : 0;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::without(const TermKey& t) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first != t) out.factors_.push_back(f);
  }
  return out;
}

Monomial Monomial::shifted(const Gamma& g) const {
  Monomial out = *this;
  for (auto& f : out.factors_) f.first.gamma += g;
  // Lexicographic order on exponent vectors is translation invariant.
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

// ---------------------------------------------------------- DiffPolynomial

DiffPolynomial DiffPolynomial::constant(std::size_t m, std::size_t n, const ConstantPoly& c) {
  DiffPolynomial p(m, n);
  p.add(Monomial(), c);
  return p;
}

DiffPolynomial DiffPolynomial::term(std::size_t m, std::size_t n, const TermKey& t, std::uint32_t exponent) {
  if (t.gamma.dim() != m) throw Error(ErrorKind::DimMismatch, "term has " + std::to_string(t.gamma.dim()) +
                                                                  " translation exponents, expected " +
                                                                  std::to_string(m));
  if (t.idx >= n) throw Error(ErrorKind::ArityError, "indeterminate index " + std::to_string(t.idx) +
                                                         " outside arity " + std::to_string(n));
  DiffPolynomial p(m, n);
  p.add(Monomial(t, exponent), ConstantPoly(1));
  return p;
}

bool DiffPolynomial::in_ground_field() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.is_unit(); });
}

std::vector<TermKey> DiffPolynomial::support() const {
  std::vector<TermKey> out;
  for (const auto& [mono, c] : terms_) {
    for (const auto& f : mono.factors()) out.push_back(f.first);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Coord DiffPolynomial::max_term_order() const {
  Coord best = 0;
  for (const auto& t : support()) best = std::max(best, t.ord());
  return best;
}

void DiffPolynomial::add(const Monomial& mono, const ConstantPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DiffPolynomial::check_compatible(const DiffPolynomial& rhs) const {
  if (m_ != rhs.m_) throw Error(ErrorKind::DimMismatch, "polynomials over different numbers of translations");
  if (n_ != rhs.n_) throw Error(ErrorKind::ArityError, "polynomials in different numbers of indeterminates");
}

DiffPolynomial& DiffPolynomial::operator+=(const DiffPolynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [mono, c] : rhs.terms_) add(mono, c);
  return *this;
}

DiffPolynomial& DiffPolynomial::operator-=(const DiffPolynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [mono, c] : rhs.terms_) add(mono, -c);
  return *this;
}

DiffPolynomial& DiffPolynomial::operator*=(const ConstantPoly& k) {
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = it->second * k;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b) {
  a.check_compatible(b);
  DiffPolynomial out(a.m_, a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, ca * cb);
  }
  return out;
}

DiffPolynomial DiffPolynomial::with_constants_renamed(std::span<const std::size_t> mapping) const {
  DiffPolynomial out(m_, n_);
  for (const auto& [mono, c] : terms_) out.add(mono, c.renamed(mapping));
  return out;
}

// ----------------------------------------------------------------- Ranking

namespace {

bool is_permutation_of_iota(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) return false;
  }
  return true;
}

}  // namespace

Ranking::Ranking(std::size_t m, std::size_t n) : priority_(m), indet_rank_(n) {
  std::iota(priority_.begin(), priority_.end(), std::size_t{0});
  std::iota(indet_rank_.begin(), indet_rank_.end(), std::size_t{0});
}

Ranking::Ranking(std::vector<std::size_t> translation_priority, std::vector<std::size_t> indeterminate_order)
    : priority_(std::move(translation_priority)), indet_rank_(indeterminate_order.size()) {
  if (!is_permutation_of_iota(priority_)) {
    throw Error(ErrorKind::DimMismatch, "translation priority is not a permutation");
  }
  if (!is_permutation_of_iota(indeterminate_order)) {
    throw Error(ErrorKind::DimMismatch, "indeterminate order is not a permutation");
  }
  for (std::size_t pos = 0; pos < indeterminate_order.size(); ++pos) indet_rank_[indeterminate_order[pos]] = pos;
}

std::vector<std::size_t> Ranking::indeterminate_order() const {
  std::vector<std::size_t> order(indet_rank_.size());
  for (std::size_t i = 0; i < indet_rank_.size(); ++i) order[indet_rank_[i]] = i;
  return order;
}

std::strong_ordering Ranking::compare(const TermKey& u, const TermKey& v) const {
  const auto m = priority_.size();
  if (u.gamma.dim() != m || v.gamma.dim() != m) {
    throw Error(ErrorKind::DimMismatch, "term dimension does not match the ranking");
  }
  if (u.idx >= indet_rank_.size() || v.idx >= indet_rank_.size()) {
    throw Error(ErrorKind::ArityError, "indeterminate index outside the ranking");
  }
  if (auto c = u.ord() <=> v.ord(); c != 0) return c;
  for (std::size_t k : priority_) {
    if (auto c = std::abs(u.gamma[k]) <=> std::abs(v.gamma[k]); c != 0) return c;
  }
  for (std::size_t k : priority_) {
    if (auto c = u.gamma[k] <=> v.gamma[k]; c != 0) return c;
  }
  return indet_rank_[u.idx] <=> indet_rank_[v.idx];
}

// -------------------------------------------------------------- operations

DiffPolynomial apply_gamma(const DiffPolynomial& p, const Gamma& g) {
  if (g.dim() != p.dim()) throw Error(ErrorKind::DimMismatch, "translation element has the wrong dimension");
  DiffPolynomial out(p.dim(), p.arity());
  for (const auto& [mono, c] : p.terms()) out.add(mono.shifted(g), c);
  return out;
}

std::strong_ordering ranking_compare(const TermKey& u, const TermKey& v, const Ranking& rk) {
  return rk.compare(u, v);
}

TermKey leader(const DiffPolynomial& p, const Ranking& rk) {
  const auto support = p.support();
  if (support.empty()) throw Error(ErrorKind::ConstantPolynomial, "polynomial has no leader");
  return *std::max_element(support.begin(), support.end(),
                           [&](const TermKey& a, const TermKey& b) { return rk.compare(a, b) < 0; });
}

InitialAndDegree initial_and_degree(const DiffPolynomial& p, const Ranking& rk) {
  const TermKey u = leader(p, rk);
  std::uint32_t d = 0;
  for (const auto& [mono, c] : p.terms()) d = std::max(d, mono.degree_in(u));
  DiffPolynomial init(p.dim(), p.arity());
  for (const auto& [mono, c] : p.terms()) {
    if (mono.degree_in(u) == d) init.add(mono.without(u), c);
  }
  return {std::move(init), d};
}

bool is_transform(const TermKey& u, const TermKey& v) {
  return u.idx == v.idx && unlhd(u.gamma, v.gamma);
}

bool is_proper_transform(const TermKey& u, const TermKey& v) {
  return u != v && is_transform(u, v);
}

bool is_quasi_linear(const DiffPolynomial& p, const Ranking& rk) {
  return initial_and_degree(p, rk).degree == 1;
}

namespace {

bool reduced_against(const DiffPolynomial& d, const TermKey& u, std::uint32_t deg) {
  for (const auto& [mono, c] : d.terms()) {
    for (const auto& [t, e] : mono.factors()) {
      if (e >= deg && is_transform(u, t)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_reduced(const DiffPolynomial& d, const DiffPolynomial& b, const Ranking& rk) {
  const auto [init, deg] = initial_and_degree(b, rk);
  return reduced_against(d, leader(b, rk), deg);
}

bool is_reduced(const DiffPolynomial& d, std::span<const DiffPolynomial> set, const Ranking& rk) {
  return std::all_of(set.begin(), set.end(), [&](const DiffPolynomial& b) { return is_reduced(d, b, rk); });
}

bool is_autoreduced(std::span<const DiffPolynomial> set, const Ranking& rk) {
  for (const auto& p : set) {
    if (p.in_ground_field()) return false;
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (i != j && !is_reduced(set[i], set[j], rk)) return false;
    }
  }
  return true;
}

std::strong_ordering rank_compare(const DiffPolynomial& a, const DiffPolynomial& b, const Ranking& rk) {
  const bool ka = a.in_ground_field();
  const bool kb = b.in_ground_field();
  if (ka || kb) return kb <=> ka;  // K-elements sit below everything else
  const TermKey ua = leader(a, rk);
  const TermKey ub = leader(b, rk);
  if (auto c = rk.compare(ua, ub); c != 0) return c;
  return initial_and_degree(a, rk).degree <=> initial_and_degree(b, rk).degree;
}

void sort_by_rank(std::vector<DiffPolynomial>& set, const Ranking& rk) {
  std::stable_sort(set.begin(), set.end(),
                   [&](const DiffPolynomial& a, const DiffPolynomial& b) { return rank_compare(a, b, rk) < 0; });
}

std::strong_ordering set_rank_compare(std::span<const DiffPolynomial> s, std::span<const DiffPolynomial> t,
                                      const Ranking& rk) {
  if (!is_autoreduced(s, rk) || !is_autoreduced(t, rk)) {
    throw Error(ErrorKind::NotAutoreduced, "rank comparison of sets requires autoreduced sets");
  }
  std::vector<DiffPolynomial> a(s.begin(), s.end());
  std::vector<DiffPolynomial> b(t.begin(), t.end());
  sort_by_rank(a, rk);
  sort_by_rank(b, rk);
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < common; ++k) {
    if (auto c = rank_compare(a[k], b[k], rk); c != 0) return c;
  }
  // A longer set has lower rank.
  return b.size() <=> a.size();
}

}  // namespace delta
