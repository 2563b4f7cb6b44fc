#pragma once

#include <vector>

#include "puiseux/diffpoly.hpp"

namespace puiseux {

/// P_{i,alpha} = (i - alpha1 - 2 alpha2 - ... - n alphan, |alpha|).
struct NewtonPoint {
  Rat u;
  int v = 0;

  friend bool operator==(const NewtonPoint&, const NewtonPoint&) = default;
  friend auto operator<=>(const NewtonPoint& a, const NewtonPoint& b) {
    if (a.v != b.v) return a.v <=> b.v;
    return a.u <=> b.u;
  }
};

NewtonPoint point_of(const MonomialKey& key);

struct MarkedPoint {
  NewtonPoint point;
  std::vector<MonomialKey> contributors;
};

/// A hull segment from `upper` (larger v) to `lower`, lying in N(F, a, b) with
/// gcd(a, |b|) = 1, a > 0 and inclination mu = b / a.
struct Edge {
  NewtonPoint upper;
  NewtonPoint lower;
  Integer a;
  Integer b;
  Rat mu;

  /// u-coordinate where the edge's line meets v = 0.
  Rat x_intercept() const { return upper.u + mu * Rat(upper.v); }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A hull vertex with the inclinations of its neighbouring hull edges; mu_lo is
/// -inf at the top vertex and mu_hi is +inf at the bottom one.
struct PolygonVertex {
  NewtonPoint point;
  ExtRat mu_lo;
  ExtRat mu_hi;

  friend bool operator==(const PolygonVertex&, const PolygonVertex&) = default;
};

struct PolygonView {
  std::vector<MarkedPoint> points;         // sorted by (v, u)
  std::vector<PolygonVertex> hull;         // every hull vertex, top to bottom
  std::vector<Edge> hull_edges;            // every hull edge, increasing mu
  std::vector<PolygonVertex> vertices;     // V(F)
  std::vector<Edge> edges;                 // E(F), increasing mu
  bool strict = true;

  /// Same hull, vertices and edges (points and contributors are not compared).
  bool same_geometry(const PolygonView& o) const;
};

/// Marked points of F with their contributing terms. Throws on zero.
std::vector<MarkedPoint> mark_points(const DiffPoly& f);

/// N(F, a, b): the points of P(F) minimising a u + b v.
std::vector<NewtonPoint> support(const DiffPoly& f, const Rat& a, const Rat& b);

/// The Newton polygon. In strict mode only directions with a > 0 and b >= 0 define
/// V(F) and E(F); otherwise every a > 0 direction does.
PolygonView build_polygon(const DiffPoly& f, bool strict = true);

/// Polygon of the points (min u of row s, s) of F_s + G_s. Throws when F + G = 0.
PolygonView sum_polygon(const DiffPoly& f, const DiffPoly& g, bool strict = true);

/// H_{(F,e)}(C).
KPoly characteristic_poly(const DiffPoly& f, const Edge& e);

/// h_{(F,p)}(mu); the zero polynomial when the contributions cancel.
KPoly indicial_poly(const DiffPoly& f, const NewtonPoint& p);

/// H of the derivative d^kappa F / dy^kappa on the support of e translated by kappa:
/// sum over P in N(F, a(e), b(e)) of f (alpha)_kappa C^(|alpha| - |kappa|) prod_j (mu)_j^(alpha_j - kappa_j).
KPoly derivative_char_poly(const DiffPoly& f, const std::vector<int>& kappa, const Edge& e);
KPoly derivative_char_poly(const DiffPoly& f, int j, int k, const Edge& e);

/// The indicial polynomial of d^kappa F / dy^kappa at p translated by kappa.
KPoly derivative_indicial_poly(const DiffPoly& f, const std::vector<int>& kappa, const NewtonPoint& p);
KPoly derivative_indicial_poly(const DiffPoly& f, int j, int k, const NewtonPoint& p);

/// q_s(c, mu_e) = sum over compositions kappa of s of H_{(d^kappa F, e)}(c) / kappa!.
AlgNum q_s_coefficient(const DiffPoly& f, const Edge& e, const AlgNum& c, int s);

/// All tuples of `parts` nonnegative integers summing to k, in lexicographic order.
std::vector<std::vector<int>> compositions(int k, int parts);

/// (mu)_k as a polynomial in mu.
QPoly falling_factorial_poly(int k);

}  // namespace puiseux
