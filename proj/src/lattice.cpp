#include "delta/lattice.hpp"

#include "delta/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

namespace delta {

Coord Point::ord() const {
  Coord s = 0;
  for (Coord c : coords_) s += std::abs(c);
  return s;
}

bool Point::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c == 0; });
}

Point& Point::operator+=(const Point& rhs) {
  if (dim() != rhs.dim()) throw Error(ErrorKind::DimMismatch, "adding points of different dimension");
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& rhs) {
  if (dim() != rhs.dim()) throw Error(ErrorKind::DimMismatch, "subtracting points of different dimension");
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

Point operator-(Point p) {
  for (auto& c : p.coords_) c = -c;
  return p;
}

std::string to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

LatticeSet::LatticeSet(std::size_t dim, Signature signature, std::vector<Point> points)
    : dim_(dim), signature_(signature), points_(std::move(points)) {
  for (const auto& p : points_) {
    if (p.dim() != dim_) {
      throw Error(ErrorKind::DimMismatch,
                  "point " + to_string(p) + " has dimension " + std::to_string(p.dim()) + ", expected " +
                      std::to_string(dim_));
    }
    if (signature_ == Signature::NonNegative) {
      for (Coord c : p.coords()) {
        if (c < 0) throw Error(ErrorKind::InvalidSet, "point " + to_string(p) + " is not in N^m");
      }
    }
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool LatticeSet::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

bool product_leq(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimMismatch, "product order on points of different dimension");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool unlhd(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimMismatch, "orthant order on points of different dimension");
  // Zero coordinates belong to both half-lines, so a shared orthant exists
  // iff no coordinate pair has strictly opposite signs.
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if ((a[i] > 0 && b[i] < 0) || (a[i] < 0 && b[i] > 0)) return false;
    if (std::abs(a[i]) > std::abs(b[i])) return false;
  }
  return true;
}

namespace {

std::vector<Point> minimal_under(const std::vector<Point>& pts, bool (*leq)(const Point&, const Point&)) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < pts.size() && minimal; ++j) {
      if (i != j && leq(pts[j], pts[i])) minimal = false;
    }
    if (minimal) out.push_back(pts[i]);
  }
  return out;
}

void require_nonnegative(const LatticeSet& e) {
  for (const auto& p : e.points()) {
    for (Coord c : p.coords()) {
      if (c < 0) throw Error(ErrorKind::InvalidSet, "point " + to_string(p) + " is not in N^m");
    }
  }
}

}  // namespace

LatticeSet minimal_elements(const LatticeSet& s) {
  auto leq = s.signature() == Signature::NonNegative ? &product_leq : &unlhd;
  return LatticeSet(s.dim(), s.signature(), minimal_under(s.points(), leq));
}

NumericalPolynomial omega(const LatticeSet& e) {
  require_nonnegative(e);
  const auto m = e.dim();
  const auto minimal = minimal_under(e.points(), &product_leq);
  const std::size_t q = minimal.size();
  if (q > kMaxMinimalElements) {
    throw Error(ErrorKind::SizeLimit, std::to_string(q) + " minimal elements exceed the limit of " +
                                          std::to_string(kMaxMinimalElements));
  }

  // Signed number of subsets theta with a given b_theta; the binomial
  // polynomials are then summed once per distinct b.
  std::map<Coord, std::int64_t> weight;
  std::vector<Coord> running(m, 0);
  std::function<void(std::size_t, int, Coord)> visit = [&](std::size_t next, int sign, Coord b) {
    weight[b] += sign;
    for (std::size_t i = next; i < q; ++i) {
      const auto saved = running;
      Coord nb = 0;
      for (std::size_t j = 0; j < m; ++j) {
        running[j] = std::max(running[j], minimal[i][j]);
        nb += running[j];
      }
      visit(i + 1, -sign, nb);
      running = saved;
    }
  };
  visit(0, 1, 0);

  NumericalPolynomial result;
  for (const auto& [b, w] : weight) {
    if (w == 0) continue;
    result += Integer(w) * binomial_term(static_cast<std::int64_t>(m) - b, static_cast<unsigned>(m));
  }
  return result;
}

LatticeSet rho_embed(const LatticeSet& a) {
  const auto m = a.dim();
  std::vector<Point> out;
  out.reserve(a.size() + m);
  for (const auto& p : a.points()) {
    std::vector<Coord> c(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      c[i] = std::max<Coord>(p[i], 0);
      c[m + i] = std::max<Coord>(-p[i], 0);
    }
    out.emplace_back(std::move(c));
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Coord> c(2 * m, 0);
    c[i] = 1;
    c[m + i] = 1;
    out.emplace_back(std::move(c));
  }
  return LatticeSet(2 * m, Signature::NonNegative, std::move(out));
}

NumericalPolynomial phi(const LatticeSet& a) { return omega(rho_embed(a)); }

NumericalPolynomial phi_empty(std::size_t m) {
  std::vector<Integer> coeffs(m + 1, 0);
  Integer binom = 1;  // C(m, i)
  for (std::size_t i = 0; i <= m; ++i) {
    if (i > 0) binom = binom * (m - i + 1) / i;
    const Integer term = (Integer(1) << i) * binom;
    coeffs[i] = (m - i) % 2 == 0 ? term : Integer(-term);
  }
  return NumericalPolynomial::from_binomial(std::move(coeffs));
}

std::uint64_t oracle_count_v(const LatticeSet& e, std::uint64_t r) {
  require_nonnegative(e);
  const auto m = e.dim();
  const auto& pts = e.points();
  std::vector<Coord> v(m, 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t i, std::uint64_t budget) {
    if (i == m) {
      const Point candidate(v);
      for (const auto& p : pts) {
        if (product_leq(p, candidate)) return;
      }
      ++count;
      return;
    }
    for (std::uint64_t x = 0; x <= budget; ++x) {
      v[i] = static_cast<Coord>(x);
      walk(i + 1, budget - x);
    }
    v[i] = 0;
  };
  walk(0, r);
  return count;
}

std::uint64_t oracle_count_w(const LatticeSet& a, std::uint64_t r) {
  const auto m = a.dim();
  const auto& pts = a.points();
  std::vector<Coord> w(m, 0);
  std::uint64_t count = 0;
  const auto budget0 = static_cast<Coord>(r);
  std::function<void(std::size_t, Coord)> walk = [&](std::size_t i, Coord budget) {
    if (i == m) {
      const Point candidate(w);
      for (const auto& p : pts) {
        if (unlhd(p, candidate)) return;
      }
      ++count;
      return;
    }
    for (Coord x = -budget; x <= budget; ++x) {
      w[i] = x;
      walk(i + 1, budget - std::abs(x));
    }
    w[i] = 0;
  };
  walk(0, budget0);
  return count;
}

std::uint64_t agreement_threshold(const LatticeSet& s) {
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < s.dim(); ++j) {
    Coord best = 0;
    for (const auto& p : s.points()) best = std::max(best, std::abs(p[j]));
    total += static_cast<std::uint64_t>(best);
  }
  return total;
}

}  // namespace delta
