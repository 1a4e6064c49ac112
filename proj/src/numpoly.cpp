#include "delta/numpoly.hpp"

#include "delta/errors.hpp"

#include <algorithm>

namespace delta {

namespace {

// Power-basis coefficients of (t+c)(t+c-1)...(t+c-m+1), before dividing by m!.
std::vector<Integer> falling_product(std::int64_t c, unsigned m) {
  std::vector<Integer> poly{1};
  for (unsigned k = 0; k < m; ++k) {
    const Integer shift = Integer(c) - k;
    std::vector<Integer> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] += poly[i] * shift;
    }
    poly = std::move(next);
  }
  return poly;
}

// Power-basis coefficients of C(t+i, i).
std::vector<Rational> basis_element(unsigned i) {
  const auto num = falling_product(static_cast<std::int64_t>(i), i);
  const Integer den = factorial(i);
  std::vector<Rational> out;
  out.reserve(num.size());
  for (const auto& c : num) out.emplace_back(c, den);
  return out;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

std::vector<Rational> difference(const NumericalPolynomial& p, const NumericalPolynomial& q) {
  auto a = p.monomial_coeffs();
  const auto b = q.monomial_coeffs();
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

}  // namespace

NumericalPolynomial NumericalPolynomial::from_binomial(std::vector<Integer> coeffs) {
  NumericalPolynomial p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

NumericalPolynomial NumericalPolynomial::constant(const Integer& c) {
  return from_binomial({c});
}

void NumericalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer NumericalPolynomial::binomial_coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

std::vector<Rational> NumericalPolynomial::monomial_coeffs() const {
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto basis = basis_element(static_cast<unsigned>(i));
    for (std::size_t k = 0; k < basis.size(); ++k) out[k] += Rational(coeffs_[i]) * basis[k];
  }
  return out;
}

NumericalPolynomial& NumericalPolynomial::operator+=(const NumericalPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

NumericalPolynomial& NumericalPolynomial::operator-=(const NumericalPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

NumericalPolynomial& NumericalPolynomial::operator*=(const Integer& k) {
  for (auto& c : coeffs_) c *= k;
  trim();
  return *this;
}

NumericalPolynomial canonicalize(std::span<const Rational> monomial_coeffs) {
  std::vector<Rational> rest(monomial_coeffs.begin(), monomial_coeffs.end());
  while (!rest.empty() && rest.back() == 0) rest.pop_back();
  if (rest.empty()) return {};

  // C(t+i, i) has leading coefficient 1/i!, so peel off degrees top-down.
  std::vector<Integer> a(rest.size(), 0);
  for (std::size_t i = rest.size(); i-- > 0;) {
    if (rest[i] == 0) continue;
    const Rational ai = rest[i] * Rational(factorial(static_cast<unsigned>(i)));
    if (!is_integral(ai)) {
      throw Error(ErrorKind::NotNumerical,
                  "binomial-basis coefficient a_" + std::to_string(i) + " = " + to_string(ai) + " is not an integer");
    }
    a[i] = boost::multiprecision::numerator(ai);
    const auto basis = basis_element(static_cast<unsigned>(i));
    for (std::size_t k = 0; k < basis.size(); ++k) rest[k] -= ai * basis[k];
  }
  return NumericalPolynomial::from_binomial(std::move(a));
}

Rational evaluate(const NumericalPolynomial& p, const Integer& r) {
  // C(r+i, i) = (r+i)(r+i-1)...(r+1)/i!, built incrementally in i.
  Integer total = 0;
  Integer numerator = 1;
  Integer denominator = 1;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i > 0) {
      numerator *= r + i;
      denominator *= i;
    }
    total += p.binomial_coeff(i) * (numerator / denominator);
  }
  return Rational(total);
}

NumericalPolynomial binomial_term(std::int64_t c, unsigned m) {
  const auto num = falling_product(c, m);
  const Integer den = factorial(m);
  std::vector<Rational> coeffs;
  coeffs.reserve(num.size());
  for (const auto& x : num) coeffs.emplace_back(x, den);
  return canonicalize(coeffs);
}

std::strong_ordering eventual_compare(const NumericalPolynomial& p, const NumericalPolynomial& q) {
  const auto diff = difference(p, q);
  if (diff.empty()) return std::strong_ordering::equal;
  return diff.back() < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

Integer eventual_threshold(const NumericalPolynomial& p, const NumericalPolynomial& q) {
  const auto diff = difference(p, q);
  if (diff.size() <= 1) return 0;
  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < diff.size(); ++i) bound = std::max(bound, Rational(abs(diff[i] / diff.back())));
  bound += 1;
  // ceil
  const Integer n = boost::multiprecision::numerator(bound);
  const Integer d = boost::multiprecision::denominator(bound);
  return (n + d - 1) / d;
}

SigmaInvariants sigma_invariants(const NumericalPolynomial& p, unsigned m) {
  if (p.degree() > static_cast<int>(m)) {
    throw Error(ErrorKind::NotSigmaShaped,
                "degree " + std::to_string(p.degree()) + " exceeds the number of translations " + std::to_string(m));
  }
  SigmaInvariants inv;
  inv.degree = p.degree();
  // The t^m coefficient is a_m/m!, so a = a_m / 2^m.
  const Integer am = p.binomial_coeff(static_cast<int>(m));
  const Integer two_m = Integer(1) << m;
  if (am % two_m != 0) {
    throw Error(ErrorKind::NotSigmaShaped, "a_" + std::to_string(m) + " = " + am.str() + " is not divisible by 2^" +
                                               std::to_string(m));
  }
  inv.a = am / two_m;
  if (!p.is_zero()) inv.leading = p.monomial_coeffs().back();
  return inv;
}

std::string to_string(const NumericalPolynomial& p, const std::string& var) {
  const auto c = p.monomial_coeffs();
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    const bool negative = c[i] < 0;
    const Rational mag = abs(c[i]);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace delta
