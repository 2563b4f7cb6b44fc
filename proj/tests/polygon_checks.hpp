// Property checks for the polygon properties, shared by unit tests and the acceptance run.
// Each returns an empty string on success and a short reason otherwise.
#pragma once

#include <algorithm>
#include <set>
#include <string>

#include "puiseux/factor.hpp"
#include "puiseux/polygon.hpp"
#include "support.hpp"

namespace puiseux::testing {

inline std::set<NewtonPoint> point_set(const DiffPoly& f) {
  std::set<NewtonPoint> s;
  for (const auto& [key, c] : f.terms()) s.insert(point_of(key));
  return s;
}

inline std::set<NewtonPoint> translated(const std::set<NewtonPoint>& pts, int j, int k) {
  std::set<NewtonPoint> out;
  for (const auto& p : pts) out.insert({p.u + Rat(k * j), p.v - k});
  return out;
}

/// P(d^k F / dy_j^k) = P(F) + (kj, -k), and the same for N(., a, b) on a few directions.
inline std::string check_translation(const DiffPoly& f, int j, int k) {
  DiffPoly d = f.partial_derivative(j, k);
  if (d.is_zero()) return "derivative vanished";
  if (point_set(d) != translated(point_set(f), j, k)) return "marked points do not translate";
  for (auto [a, b] : {std::pair{1, 0}, {1, 1}, {2, 1}, {1, 3}, {3, 2}}) {
    auto lhs = support(d, Rat(a), Rat(b));
    auto rhs_v = support(f, Rat(a), Rat(b));
    std::set<NewtonPoint> rhs = translated({rhs_v.begin(), rhs_v.end()}, j, k);
    if (std::set<NewtonPoint>(lhs.begin(), lhs.end()) != rhs) return "support sets do not translate";
  }
  return {};
}

/// H^{(k)}(C) = sum over compositions kappa of k of k!/kappa! prod_j (mu)_j^kappa_j H_{(d^kappa F, e)}(C).
/// With `multinomial` false the printed form without k!/kappa! is tested instead.
inline std::string check_derivative_formula(const DiffPoly& f, const Edge& e, int k, bool multinomial = true) {
  KPoly lhs = characteristic_poly(f, e);
  for (int i = 0; i < k; ++i) lhs = lhs.derivative();
  KPoly rhs(f.field());
  for (const auto& kappa : compositions(k, f.order() + 1)) {
    Rat w = 1;
    for (std::size_t j = 1; j < kappa.size(); ++j) w *= falling_factorial(e.mu, static_cast<int>(j)).pow(kappa[j]);
    if (multinomial) {
      Integer den = 1;
      for (int x : kappa) den *= factorial(x);
      w *= Rat(factorial(k), den);
    }
    rhs += derivative_char_poly(f, kappa, e) * KPoly::constant(AlgNum(f.field(), w));
  }
  return lhs == rhs ? std::string{} : "derivative formula mismatch";
}

/// Substitution property of G = F(c x^mu_e + y): no point of G_s lies left of the line
/// u + mu v = x_intercept(e); the summed coefficient on it is q_s; each monomial y^kappa on
/// it carries H_{(d^kappa F, e)}(c) / kappa!; and hull edges above e are unchanged.
inline std::string check_substitution(const DiffPoly& f, const Edge& e, const AlgNum& c) {
  DiffPoly g = f.substitute_shift(c, e.mu);
  const Rat u0 = e.x_intercept();
  for (int s = 0; s <= f.degree(); ++s) {
    const Rat line_u = u0 - e.mu * Rat(s);
    AlgNum sum = AlgNum::zero(f.field());
    const DiffPoly gs = g.homogeneous_part(s);
    for (const auto& [key, coeff] : gs.terms()) {
      NewtonPoint p = point_of(key);
      if (p.u < line_u) return "a point of G lies left of the edge line";
      if (p.u == line_u) {
        sum += coeff;
        Integer den = 1;
        for (int x : key.alpha) den *= factorial(x);
        if (!(coeff == derivative_char_poly(f, key.alpha, e)(c) * Rat(Integer(1), den)))
          return "monomial coefficient differs from H of the derivative";
      }
    }
    if (!(sum == q_s_coefficient(f, e, c, s))) return "q_s mismatch at s = " + std::to_string(s);
  }
  if (g.is_zero()) return {};
  PolygonView pf = build_polygon(f, false), pg = build_polygon(g, false);
  std::vector<Edge> above_f, above_g;
  for (const auto& x : pf.hull_edges)
    if (x.mu < e.mu) above_f.push_back(x);
  for (const auto& x : pg.hull_edges)
    if (x.mu < e.mu) above_g.push_back(x);
  return above_f == above_g ? std::string{} : "edges above e changed";
}

/// After a root c of H_{(F,e)}, G = F(c x^mu_e + y) has a hull edge of inclination above
/// mu_e, or its constant part vanishes (the ray to (+inf, 0) is then the steeper side).
inline std::string check_edge_gain(const DiffPoly& f, const Edge& e, const AlgNum& c) {
  if (!characteristic_poly(f, e)(c).is_zero()) return "c is not a root of H";
  DiffPoly g = f.substitute_shift(c, e.mu);
  if (g.constant_part().is_zero()) return {};
  PolygonView pg = build_polygon(g, false);
  for (const auto& x : pg.hull_edges)
    if (x.mu > e.mu) {
      // The line through e no longer meets v = 0 at a vertex of G.
      for (const auto& v : pg.hull)
        if (v.point.v == 0 && v.point.u == e.x_intercept()) return "x-intercept of e is still a vertex";
      return {};
    }
  return "no steeper edge after the shift";
}

inline std::string check_sum_polygon(const DiffPoly& f, const DiffPoly& g, bool strict = true) {
  DiffPoly s = f + g;
  if (s.is_zero()) return {};
  return sum_polygon(f, g, strict).same_geometry(build_polygon(s, strict)) ? std::string{} : "sum polygon differs";
}

/// Random F whose every term is divisible by y_j^k (so differentiation translates P(F)).
inline DiffPoly random_translatable(int& j, int& k) {
  for (;;) {
    DiffPoly base = random_diffpoly(NumberField::rational(), 2, 2, 6);
    j = static_cast<int>(uniform(0, base.order()));
    k = static_cast<int>(uniform(1, 3 - std::max(base.degree(), 0)));
    if (k < 1) continue;
    DiffPoly f(base.field(), base.order());
    for (const auto& [key, c] : base.terms()) {
      std::vector<int> alpha = key.alpha;
      alpha[static_cast<std::size_t>(j)] += k;
      f.add_term(c, key.xexp, alpha);
    }
    return f;
  }
}

/// Random F over k with at least one edge in E(F); `e` receives a random such edge.
inline DiffPoly random_with_edge(const FieldPtr& k, Edge& e, int max_terms = 6) {
  for (;;) {
    DiffPoly f = random_diffpoly(k, 2, 3, max_terms);
    PolygonView view = build_polygon(f);
    if (view.edges.empty()) continue;
    e = view.edges[static_cast<std::size_t>(uniform(0, static_cast<long>(view.edges.size()) - 1))];
    return f;
  }
}

}  // namespace puiseux::testing
