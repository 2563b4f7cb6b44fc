// Test-only helpers: seeded generators and independent oracles.
#pragma once

#include <random>
#include <set>
#include <vector>

#include "puiseux/diffpoly.hpp"
#include "puiseux/factor.hpp"
#include "puiseux/number_field.hpp"
#include "puiseux/qpoly.hpp"
#include "puiseux/series.hpp"

namespace puiseux::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rat small_rat(long num_range = 5, long den_max = 3) {
  return Rat(Integer(uniform(-num_range, num_range)), Integer(uniform(1, den_max)));
}

inline Rat nonzero_rat(long num_range = 5, long den_max = 3) {
  Rat r;
  while (r.is_zero()) r = small_rat(num_range, den_max);
  return r;
}

inline QPoly random_qpoly(int degree, long range = 5) {
  std::vector<Rat> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(uniform(-range, range));
  long lead = 0;
  while (lead == 0) lead = uniform(-range, range);
  c.emplace_back(lead);
  return QPoly(std::move(c));
}

/// Irreducible minimal polynomials for test fields of degree <= 4.
inline const std::vector<FieldPtr>& test_fields() {
  static const std::vector<FieldPtr> fields = {
      NumberField::rational(),
      NumberField::make(QPoly{-2, 0, 1}),
      NumberField::make(QPoly{1, 0, 1}),
      NumberField::make(QPoly{1, 1, 1}),
      NumberField::make(QPoly{-2, 0, 0, 1}),
      NumberField::make(QPoly{-1, -1, 0, 1}),
      NumberField::make(QPoly{1, 0, 0, 0, 1}),
      NumberField::make(QPoly{1, 0, -10, 0, 1}),
      NumberField::make(QPoly{-2, 0, 0, 0, 1}),
  };
  return fields;
}

inline AlgNum random_alg(const FieldPtr& k, long range = 3) {
  std::vector<Rat> c;
  for (int i = 0; i < k->degree(); ++i) c.push_back(small_rat(range, 2));
  return AlgNum(k, std::move(c));
}

inline KPoly random_kpoly(const FieldPtr& k, int degree, long range = 3) {
  std::vector<AlgNum> c;
  for (int i = 0; i < degree; ++i) c.push_back(random_alg(k, range));
  AlgNum lead = AlgNum::zero(k);
  while (lead.is_zero()) lead = random_alg(k, range);
  c.push_back(lead);
  return KPoly(k, std::move(c));
}

/// Positive divisors of |n| by trial division (n != 0).
inline std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

/// Rational roots by the rational root theorem: clear denominators, then test every
/// +-p/q with p | trailing and q | leading. Independent of any factorization code.
inline std::set<Rat> rational_roots_bruteforce(const QPoly& p) {
  std::set<Rat> roots;
  Integer common = 1;
  for (const auto& c : p.coeffs()) common = lcm(common, c.den());
  std::vector<Integer> z;
  for (const auto& c : p.coeffs()) z.push_back(c.num() * (common / c.den()));
  std::size_t low = 0;
  while (z[low] == 0) ++low;
  if (low > 0) roots.insert(Rat(0));
  if (low + 1 == z.size()) return roots;
  for (const auto& num : divisors(z[low]))
    for (const auto& den : divisors(z.back()))
      for (int sign : {-1, 1}) {
        Rat cand(Integer(sign) * num, den);
        if (p(cand).is_zero()) roots.insert(cand);
      }
  return roots;
}

/// Whether a rational is the square of a rational.
inline bool is_rational_square(const Rat& r) {
  if (r.sign() < 0) return false;
  return mpz_perfect_square_p(r.num().get_mpz_t()) && mpz_perfect_square_p(r.den().get_mpz_t());
}

/// det(z I - M) by interpolation on integer points with Gaussian elimination: the
/// characteristic polynomial of a rational matrix, independent of resultants.
inline QPoly char_poly(const std::vector<std::vector<Rat>>& m) {
  const std::size_t n = m.size();
  std::vector<Rat> xs, ys;
  for (std::size_t pt = 0; pt <= n; ++pt) {
    Rat z(static_cast<long>(pt));
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? z : Rat(0)) - m[i][j];
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a[piv][col].is_zero()) ++piv;
      if (piv == n) {
        det = 0;
        break;
      }
      if (piv != col) {
        std::swap(a[piv], a[col]);
        det = -det;
      }
      det *= a[col][col];
      for (std::size_t r = col + 1; r < n; ++r) {
        Rat f = a[r][col] / a[col][col];
        for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      }
    }
    xs.push_back(z);
    ys.push_back(det);
  }
  return interpolate(xs, ys);
}

struct TermSpec {
  Rat coeff;
  Rat xexp;
  std::vector<int> alpha;
};

/// A rational differential polynomial of order n from (coeff, xexp, alpha) triples.
inline DiffPoly make_dp(int n, std::initializer_list<TermSpec> terms) {
  DiffPoly f(NumberField::rational(), n);
  for (const auto& t : terms) f.add_term(AlgNum(NumberField::rational(), t.coeff), t.xexp, t.alpha);
  return f;
}

/// Exponents p/q with p in [-4, 6] and q in {1, 2}.
inline Rat small_exponent() { return Rat(Integer(uniform(-4, 6)), Integer(uniform(1, 2))); }

/// Random differential polynomial with order <= max_n, degree <= max_d and at most
/// max_terms terms, over `k` (coefficients drawn small).
inline DiffPoly random_diffpoly(const FieldPtr& k, int max_n = 2, int max_d = 3, int max_terms = 6) {
  const int n = static_cast<int>(uniform(0, max_n));
  for (;;) {
    DiffPoly f(k, n);
    const int count = static_cast<int>(uniform(1, max_terms));
    for (int t = 0; t < count; ++t) {
      std::vector<int> alpha(static_cast<std::size_t>(n) + 1, 0);
      const int deg = static_cast<int>(uniform(0, max_d));
      for (int i = 0; i < deg; ++i) ++alpha[static_cast<std::size_t>(uniform(0, n))];
      AlgNum c = random_alg(k);
      if (c.is_zero()) c = AlgNum::one(k);
      f.add_term(c, small_exponent(), std::move(alpha));
    }
    if (!f.is_zero()) return f;
  }
}

/// Exact random series with up to `count` terms at small exponents.
inline PuiseuxSeries random_series(const FieldPtr& k, int count = 3) {
  PuiseuxSeries s(k);
  for (int i = 0; i < count; ++i) s.add_term(random_alg(k), small_exponent());
  return s;
}

}  // namespace puiseux::testing
