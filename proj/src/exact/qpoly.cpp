#include "puiseux/qpoly.hpp"

#include <sstream>

#include "puiseux/error.hpp"

namespace puiseux {

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QPoly QPoly::monomial(const Rat& c, int degree) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

const Rat& QPoly::leading() const {
  if (c_.empty()) throw MathError("zero polynomial has no leading coefficient");
  return c_.back();
}

Rat QPoly::operator()(const Rat& x) const {
  Rat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  return scaled(leading().inverse());
}

QPoly QPoly::scaled(const Rat& s) const {
  if (s.is_zero()) return {};
  std::vector<Rat> v = c_;
  for (auto& x : v) x *= s;
  return QPoly(std::move(v));
}

QPoly QPoly::compose(const QPoly& inner) const {
  QPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

std::string QPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (c.is_zero()) continue;
    Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly{}, a};
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  Rat inv = b.leading().inverse();
  int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i].is_zero()) continue;
    Rat q = rem[i] * inv;
    quo[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly operator/(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }
QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly pow(const QPoly& p, int e) {
  QPoly result = QPoly::constant(1), base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

QExtGcd ext_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {};
  Rat inv = r0.leading().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Rat resultant(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  QPoly f = a, g = b;
  Rat acc = 1;
  while (true) {
    int df = f.degree(), dg = g.degree();
    if (dg == 0) return acc * g.leading().pow(df);
    if (df == 0) return acc * f.leading().pow(dg);
    QPoly r = f % g;
    if (r.is_zero()) return 0;
    // res(f, g) = (-1)^(df dg) lc(g)^(df - dr) res(g, r)
    if ((df * dg) % 2 == 1) acc = -acc;
    acc *= g.leading().pow(df - r.degree());
    f = std::move(g);
    g = std::move(r);
  }
}

bool is_squarefree(const QPoly& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

QPoly interpolate(std::span<const Rat> xs, std::span<const Rat> ys) {
  if (xs.size() != ys.size()) throw MathError("interpolation needs matching point counts");
  // Newton divided differences.
  std::vector<Rat> dd(ys.begin(), ys.end());
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  QPoly result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * QPoly{-xs[i], 1} + QPoly::constant(dd[i]);
  }
  return result;
}

}  // namespace puiseux
