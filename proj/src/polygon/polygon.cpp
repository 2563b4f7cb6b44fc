#include "puiseux/polygon.hpp"

#include <algorithm>
#include <map>

#include "puiseux/error.hpp"

namespace puiseux {
namespace {

// Inclination of the segment from p (upper) to q (lower).
Rat inclination(const NewtonPoint& p, const NewtonPoint& q) { return (q.u - p.u) / Rat(p.v - q.v); }

Edge make_edge(const NewtonPoint& p, const NewtonPoint& q) {
  Rat mu = inclination(p, q);
  return {p, q, mu.den(), mu.num(), mu};
}

// Hull of the lower-left boundary through the given row minima, top to bottom.
PolygonView hull_from_rows(const std::map<int, Rat>& rows, bool strict) {
  PolygonView view;
  view.strict = strict;
  std::vector<NewtonPoint> chain;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    NewtonPoint p{it->second, it->first};
    while (chain.size() >= 2 &&
           inclination(chain[chain.size() - 2], chain.back()) >= inclination(chain.back(), p))
      chain.pop_back();
    chain.push_back(p);
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) view.hull_edges.push_back(make_edge(chain[i], chain[i + 1]));
  for (std::size_t i = 0; i < chain.size(); ++i) {
    ExtRat lo = i == 0 ? ExtRat::neg_inf() : ExtRat(view.hull_edges[i - 1].mu);
    ExtRat hi = i + 1 == chain.size() ? ExtRat::pos_inf() : ExtRat(view.hull_edges[i].mu);
    view.hull.push_back({chain[i], lo, hi});
  }
  for (const auto& v : view.hull)
    if (!strict || v.mu_hi > ExtRat(Rat(0))) view.vertices.push_back(v);
  for (const auto& e : view.hull_edges)
    if (!strict || e.mu.sign() >= 0) view.edges.push_back(e);
  return view;
}

std::map<int, Rat> row_minima(const std::vector<MarkedPoint>& pts) {
  std::map<int, Rat> rows;
  for (const auto& mp : pts) {
    auto [it, inserted] = rows.emplace(mp.point.v, mp.point.u);
    if (!inserted && mp.point.u < it->second) it->second = mp.point.u;
  }
  return rows;
}

// Product over j of ((mu)_j)^(e_j) at a fixed rational mu.
Rat falling_product(const Rat& mu, const std::vector<int>& exps) {
  Rat r = 1;
  for (std::size_t j = 1; j < exps.size(); ++j)
    if (exps[j] > 0) r *= falling_factorial(mu, static_cast<int>(j)).pow(exps[j]);
  return r;
}

std::vector<int> unit_kappa(const DiffPoly& f, int j, int k) {
  if (j < 0 || j > f.order()) throw MathError("derivative variable out of range");
  std::vector<int> kappa(static_cast<std::size_t>(f.order()) + 1, 0);
  kappa[static_cast<std::size_t>(j)] = k;
  return kappa;
}

// alpha >= kappa componentwise; the falling factorial (alpha)_kappa otherwise vanishes.
bool dominates(const std::vector<int>& alpha, const std::vector<int>& kappa) {
  for (std::size_t j = 0; j < kappa.size(); ++j)
    if ((j < alpha.size() ? alpha[j] : 0) < kappa[j]) return false;
  return true;
}

Rat falling_multi(const std::vector<int>& alpha, const std::vector<int>& kappa) {
  Rat r = 1;
  for (std::size_t j = 0; j < kappa.size(); ++j) r *= falling_factorial(Rat(alpha[j]), kappa[j]);
  return r;
}

}  // namespace

NewtonPoint point_of(const MonomialKey& key) { return {key.xexp - Rat(key.weight()), key.total_degree()}; }

bool PolygonView::same_geometry(const PolygonView& o) const {
  return strict == o.strict && hull == o.hull && hull_edges == o.hull_edges && vertices == o.vertices &&
         edges == o.edges;
}

std::vector<MarkedPoint> mark_points(const DiffPoly& f) {
  if (f.is_zero()) throw MathError("the zero polynomial has no Newton polygon");
  std::map<NewtonPoint, std::vector<MonomialKey>> grouped;
  for (const auto& [key, c] : f.terms()) grouped[point_of(key)].push_back(key);
  std::vector<MarkedPoint> out;
  for (auto& [p, keys] : grouped) out.push_back({p, std::move(keys)});
  return out;
}

std::vector<NewtonPoint> support(const DiffPoly& f, const Rat& a, const Rat& b) {
  if (a.is_zero() && b.is_zero()) throw MathError("support direction must be nonzero");
  std::vector<NewtonPoint> best;
  Rat best_value;
  for (const auto& mp : mark_points(f)) {
    Rat value = a * mp.point.u + b * Rat(mp.point.v);
    if (best.empty() || value < best_value) {
      best = {mp.point};
      best_value = value;
    } else if (value == best_value) {
      best.push_back(mp.point);
    }
  }
  return best;
}

PolygonView build_polygon(const DiffPoly& f, bool strict) {
  std::vector<MarkedPoint> pts = mark_points(f);
  PolygonView view = hull_from_rows(row_minima(pts), strict);
  view.points = std::move(pts);
  return view;
}

PolygonView sum_polygon(const DiffPoly& f, const DiffPoly& g, bool strict) {
  std::map<int, Rat> rows;
  const int d = std::max(f.degree(), g.degree());
  for (int s = 0; s <= d; ++s) {
    DiffPoly part = f.homogeneous_part(s) + g.homogeneous_part(s);
    if (part.is_zero()) continue;
    Rat best;
    bool first = true;
    for (const auto& [key, c] : part.terms()) {
      Rat u = point_of(key).u;
      if (first || u < best) best = u;
      first = false;
    }
    rows.emplace(s, best);
  }
  if (rows.empty()) throw MathError("zero sum has no polygon");
  PolygonView view = hull_from_rows(rows, strict);
  for (const auto& [v, u] : rows) view.points.push_back({{u, v}, {}});
  return view;
}

KPoly derivative_char_poly(const DiffPoly& f, const std::vector<int>& kappa, const Edge& e) {
  std::vector<NewtonPoint> supp = support(f, Rat(e.a), Rat(e.b));
  int k = 0;
  for (int x : kappa) k += x;
  KPoly out(f.field());
  for (const auto& [key, c] : f.terms()) {
    if (std::find(supp.begin(), supp.end(), point_of(key)) == supp.end()) continue;
    if (!dominates(key.alpha, kappa)) continue;
    std::vector<int> rest = key.alpha;
    for (std::size_t j = 0; j < kappa.size(); ++j) rest[j] -= kappa[j];
    Rat scale = falling_multi(key.alpha, kappa) * falling_product(e.mu, rest);
    out += KPoly::monomial(c * scale, key.total_degree() - k);
  }
  return out;
}

KPoly derivative_char_poly(const DiffPoly& f, int j, int k, const Edge& e) {
  return derivative_char_poly(f, unit_kappa(f, j, k), e);
}

KPoly characteristic_poly(const DiffPoly& f, const Edge& e) {
  return derivative_char_poly(f, std::vector<int>(static_cast<std::size_t>(f.order()) + 1, 0), e);
}

QPoly falling_factorial_poly(int k) {
  QPoly r = QPoly::constant(1);
  for (int i = 0; i < k; ++i) r = r * QPoly{Rat(-i), 1};
  return r;
}

KPoly derivative_indicial_poly(const DiffPoly& f, const std::vector<int>& kappa, const NewtonPoint& p) {
  KPoly out(f.field());
  for (const auto& [key, c] : f.terms()) {
    if (!(point_of(key) == p) || !dominates(key.alpha, kappa)) continue;
    QPoly poly = QPoly::constant(falling_multi(key.alpha, kappa));
    for (std::size_t j = 1; j < key.alpha.size(); ++j)
      if (key.alpha[j] > kappa[j]) poly = poly * pow(falling_factorial_poly(static_cast<int>(j)), key.alpha[j] - kappa[j]);
    out += KPoly(f.field(), poly) * KPoly::constant(c);
  }
  return out;
}

KPoly derivative_indicial_poly(const DiffPoly& f, int j, int k, const NewtonPoint& p) {
  return derivative_indicial_poly(f, unit_kappa(f, j, k), p);
}

KPoly indicial_poly(const DiffPoly& f, const NewtonPoint& p) {
  return derivative_indicial_poly(f, std::vector<int>(static_cast<std::size_t>(f.order()) + 1, 0), p);
}

AlgNum q_s_coefficient(const DiffPoly& f, const Edge& e, const AlgNum& c, int s) {
  AlgNum acc = AlgNum::zero(f.field());
  for (const auto& kappa : compositions(s, f.order() + 1)) {
    Integer denom = 1;
    for (int k : kappa) denom *= factorial(k);
    acc += derivative_char_poly(f, kappa, e)(c) * Rat(Integer(1), denom);
  }
  return acc;
}

std::vector<std::vector<int>> compositions(int k, int parts) {
  std::vector<std::vector<int>> out;
  if (parts <= 0 || k < 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  auto rec = [&](auto&& self, int idx, int left) -> void {
    if (idx == parts - 1) {
      cur[static_cast<std::size_t>(idx)] = left;
      out.push_back(cur);
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur[static_cast<std::size_t>(idx)] = x;
      self(self, idx + 1, left - x);
    }
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace puiseux
