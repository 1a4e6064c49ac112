#include "delta/constant_poly.hpp"

#include "delta/errors.hpp"

#include <algorithm>
#include <numeric>

namespace delta {

namespace {

void trim(ConstantPoly::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

std::uint64_t total_degree(const ConstantPoly::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

}  // namespace

ConstantPoly::ConstantPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

ConstantPoly ConstantPoly::symbol(std::size_t index) {
  ConstantPoly p;
  Exponents e(index + 1, 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

bool ConstantPoly::is_numeric() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::optional<Rational> ConstantPoly::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (!is_numeric()) return std::nullopt;
  return terms_.begin()->second;
}

std::size_t ConstantPoly::symbol_bound() const {
  std::size_t bound = 0;
  for (const auto& [e, c] : terms_) bound = std::max(bound, e.size());
  return bound;
}

void ConstantPoly::add_term(Exponents e, const Rational& c) {
  if (c == 0) return;
  trim(e);
  auto [it, inserted] = terms_.emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ConstantPoly& ConstantPoly::operator+=(const ConstantPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

ConstantPoly& ConstantPoly::operator-=(const ConstantPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

ConstantPoly& ConstantPoly::operator*=(const Rational& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

ConstantPoly operator*(const ConstantPoly& a, const ConstantPoly& b) {
  ConstantPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ConstantPoly::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(std::move(e), ca * cb);
    }
  }
  return out;
}

ConstantPoly ConstantPoly::renamed(std::span<const std::size_t> mapping) const {
  ConstantPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= mapping.size()) throw Error(ErrorKind::UndeclaredSymbol, "constant index outside renaming map");
      const auto target = mapping[i];
      if (ne.size() <= target) ne.resize(target + 1, 0);
      ne[target] += e[i];
    }
    out.add_term(std::move(ne), c);
  }
  return out;
}

std::string to_string(const ConstantPoly& c, std::span<const std::string> names) {
  if (c.is_zero()) return "0";
  std::vector<std::pair<ConstantPoly::Exponents, Rational>> terms(c.terms().begin(), c.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    const auto dx = total_degree(x.first), dy = total_degree(y.first);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });

  std::string out;
  bool first = true;
  for (const auto& [e, q] : terms) {
    const bool negative = q < 0;
    const Rational mag = negative ? Rational(-q) : q;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string body;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += i < names.size() ? names[i] : "c" + std::to_string(i);
      if (e[i] > 1) body += "^" + std::to_string(e[i]);
    }
    if (body.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += body;
    }
  }
  return out;
}

}  // namespace delta
