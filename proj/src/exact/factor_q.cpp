#include <algorithm>

#include "puiseux/error.hpp"
#include "puiseux/factor.hpp"
#include "zassenhaus.hpp"

namespace puiseux {
namespace {

bool qpoly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

// Irreducible monic factors of a squarefree polynomial of positive degree.
std::vector<QPoly> factor_squarefree(const QPoly& g) {
  if (g.degree() == 1) return {g.monic()};
  Integer common = 1;
  for (const auto& c : g.coeffs()) common = lcm(common, c.den());
  detail::ZPoly z;
  z.reserve(g.coeffs().size());
  Integer content = 0;
  for (const auto& c : g.coeffs()) {
    z.push_back(c.num() * (common / c.den()));
    content = gcd(content, z.back());
  }
  if (z.back() < 0) content = -content;
  for (auto& c : z) c /= content;
  std::vector<QPoly> out;
  for (const auto& f : detail::factor_squarefree_z(z)) {
    std::vector<Rat> v(f.begin(), f.end());
    out.push_back(QPoly(std::move(v)).monic());
  }
  return out;
}

}  // namespace

QPoly QFactorization::expand() const {
  QPoly acc = QPoly::constant(constant);
  for (const auto& f : factors) acc = acc * pow(f.poly, f.multiplicity);
  return acc;
}

std::vector<QFactor> squarefree_decomposition(const QPoly& p) {
  if (p.is_zero()) throw MathError("squarefree decomposition of zero");
  std::vector<QFactor> out;
  if (p.degree() == 0) return out;
  QPoly a = p.monic();
  QPoly b = a.derivative();
  QPoly c = gcd(a, b);
  QPoly w = a / c;
  QPoly y = b / c;
  QPoly z = y - w.derivative();
  for (int i = 1; w.degree() > 0; ++i) {
    QPoly g = gcd(w, z);
    if (g.degree() > 0) out.push_back({g, i});
    w = w / g;
    y = z / g;
    z = y - w.derivative();
  }
  return out;
}

QFactorization factor_over_Q(const QPoly& p) {
  if (p.is_zero()) throw MathError("cannot factor zero");
  QFactorization result{p.leading(), {}};
  for (const auto& [part, mult] : squarefree_decomposition(p))
    for (auto& f : factor_squarefree(part)) result.factors.push_back({std::move(f), mult});
  std::sort(result.factors.begin(), result.factors.end(),
            [](const QFactor& a, const QFactor& b) { return qpoly_less(a.poly, b.poly); });
  return result;
}

std::vector<Rat> rational_roots(const QPoly& p) {
  if (p.is_zero()) throw MathError("rational roots of an identically zero polynomial");
  std::vector<Rat> roots;
  for (const auto& f : factor_over_Q(p).factors)
    if (f.poly.degree() == 1) roots.push_back(-f.poly.coeff(0));
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Rat> rational_roots(const KPoly& p) {
  if (p.is_zero()) throw MathError("rational roots of an identically zero polynomial");
  const int n = p.field()->degree();
  QPoly common;
  for (int k = 0; k < n; ++k) {
    std::vector<Rat> v;
    for (const auto& c : p.coeffs()) v.push_back(c.coords()[k]);
    common = gcd(common, QPoly(std::move(v)));
  }
  return rational_roots(common);
}

}  // namespace puiseux
