#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "puiseux/rat.hpp"

namespace puiseux {

/// Dense univariate polynomial over Q, coefficients in ascending order.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs);
  QPoly(std::initializer_list<Rat> coeffs) : QPoly(std::vector<Rat>(coeffs)) {}

  static QPoly constant(const Rat& c) { return QPoly(std::vector<Rat>{c}); }
  static QPoly monomial(const Rat& c, int degree);
  static QPoly variable() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rat(); }
  const Rat& leading() const;

  Rat operator()(const Rat& x) const;
  QPoly derivative() const;
  QPoly monic() const;
  QPoly scaled(const Rat& s) const;
  /// this(inner(Z))
  QPoly compose(const QPoly& inner) const;
  std::string str(std::string_view var = "Z") const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(const QPoly& a) { return a.scaled(-1); }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

 private:
  void trim();
  std::vector<Rat> c_;
};

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly operator/(const QPoly& a, const QPoly& b);
QPoly operator%(const QPoly& a, const QPoly& b);
QPoly pow(const QPoly& p, int e);

/// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

struct QExtGcd {
  QPoly g, s, t;  // s*a + t*b = g, g monic
};
QExtGcd ext_gcd(const QPoly& a, const QPoly& b);

Rat resultant(const QPoly& a, const QPoly& b);
bool is_squarefree(const QPoly& p);

/// The unique polynomial of degree < xs.size() through the given points.
QPoly interpolate(std::span<const Rat> xs, std::span<const Rat> ys);

}  // namespace puiseux
