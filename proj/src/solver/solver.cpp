#include "puiseux/solver.hpp"

#include <algorithm>
#include <deque>

#include "puiseux/error.hpp"
#include "puiseux/factor.hpp"

namespace puiseux {
namespace {

bool is_bare_variable(const KPoly& h) { return h.degree() == 1 && h.coeff(0).is_zero(); }

// The exponent range (lo, hi) cut down by deg(tau) and, in strict mode, by 0.
void clamp_range(ExtRat lo, ExtRat hi, const ExtRat& deg, bool strict, VertexBranch& out) {
  out.lo = std::max(lo, deg);
  out.lo_closed = false;
  if (strict && out.lo < ExtRat(Rat(0))) {
    out.lo = ExtRat(Rat(0));
    out.lo_closed = true;
  }
  out.hi = std::move(hi);
}

bool admissible(const Rat& mu, const PolygonVertex& p, const ExtRat& deg, bool strict) {
  ExtRat m(mu);
  return p.mu_lo < m && m < p.mu_hi && deg < m && (!strict || mu.sign() >= 0);
}

// A son of tau at exponent mu whose coefficient is a root of the monic irreducible h.
TreeNode make_son(const TreeNode& tau, const Rat& mu, const KPoly& h, const Rat& intercept, Integer a) {
  PrimitiveElement pe = primitive_element(h);
  Embedding emb = pe.embedding(tau.field);
  TreeNode son;
  son.parent = tau.id;
  son.field = pe.field;
  son.gamma = pe.gamma;
  son.c = pe.embed_root;
  son.mu = ExtRat(mu);
  son.partial = tau.partial.mapped(emb) + PuiseuxSeries::monomial(son.c, mu);
  son.nu = lcm(tau.nu, a);
  son.shifted = tau.shifted.mapped(emb).substitute_shift(son.c, mu);
  son.level = tau.level + 1;
  son.factor = h;
  // The initial condition kills the term of the constant part on the line through the edge or vertex.
  if (!(son.shifted.constant_part().ord() > ExtRat(intercept)))
    throw InternalError("branch inconsistent: initial condition left the leading residual term");
  if (son.nu % son.partial.nu() != 0) throw InternalError("branch inconsistent: ramification index");
  return son;
}

TreeNode family_node(const TreeNode& tau, NodeStatus status, ExtRat lo, ExtRat hi, bool lo_closed) {
  TreeNode fam;
  fam.parent = tau.id;
  fam.field = tau.field;
  fam.c = AlgNum::zero(tau.field);
  fam.mu = lo;
  fam.partial = tau.partial;
  fam.nu = tau.nu;
  fam.shifted = tau.shifted;
  fam.level = tau.level + 1;
  fam.status = status;
  fam.family_lo = std::move(lo);
  fam.family_hi = std::move(hi);
  fam.family_lo_closed = lo_closed;
  return fam;
}

// Sort key of a candidate son: its exponent, or the low end of a continuum.
ExtRat sort_key(const TreeNode& n) { return n.mu; }

}  // namespace

std::string to_string(NodeStatus s) {
  switch (s) {
    case NodeStatus::expandable: return "expandable";
    case NodeStatus::leaf: return "leaf";
    case NodeStatus::parametric: return "parametric";
    case NodeStatus::continuum: return "continuum";
    case NodeStatus::truncated: return "truncated";
    case NodeStatus::barren: return "barren";
  }
  return "?";
}

std::string to_string(SolutionKind k) {
  switch (k) {
    case SolutionKind::exact_leaf: return "exact-leaf";
    case SolutionKind::truncated: return "truncated";
    case SolutionKind::parametric_family: return "parametric-family";
    case SolutionKind::continuum_family: return "continuum-family";
  }
  return "?";
}

TreeNode init_root(const DiffPoly& f) {
  if (f.is_zero()) throw MathError("cannot solve the zero equation");
  TreeNode root;
  root.field = f.field();
  root.c = AlgNum::zero(f.field());
  root.mu = ExtRat::neg_inf();
  root.partial = PuiseuxSeries(f.field());
  root.shifted = f;
  return root;
}

std::vector<TreeNode> edge_branches(const TreeNode& tau, bool strict) {
  std::vector<TreeNode> sons;
  if (tau.shifted.is_zero()) return sons;
  PolygonView view = build_polygon(tau.shifted, strict);
  for (const auto& e : view.edges) {
    if (!(ExtRat(e.mu) > tau.mu)) continue;
    KPoly h = characteristic_poly(tau.shifted, e);
    if (h.is_zero()) {
      sons.push_back(family_node(tau, NodeStatus::parametric, ExtRat(e.mu), ExtRat(e.mu), true));
      continue;
    }
    for (const auto& f : factor_over_field(h).factors) {
      if (f.poly.degree() < 1 || is_bare_variable(f.poly)) continue;
      sons.push_back(make_son(tau, e.mu, f.poly, e.x_intercept(), e.a));
    }
  }
  return sons;
}

std::vector<VertexBranch> vertex_branches(const TreeNode& tau, bool strict) {
  std::vector<VertexBranch> out;
  if (tau.shifted.is_zero()) return out;
  PolygonView view = build_polygon(tau.shifted, strict);
  for (const auto& p : view.vertices) {
    if (!(p.mu_hi > tau.mu)) continue;
    KPoly h = indicial_poly(tau.shifted, p.point);
    if (h.is_zero()) {
      VertexBranch b;
      b.vertex = p.point;
      b.continuum = true;
      clamp_range(p.mu_lo, p.mu_hi, tau.mu, strict, b);
      // The upper end is an edge inclination and never belongs to the range.
      if (b.lo < b.hi) out.push_back(b);
      continue;
    }
    for (const auto& mu : rational_roots(h)) {
      if (!admissible(mu, p, tau.mu, strict)) continue;
      VertexBranch b;
      b.vertex = p.point;
      b.mu = mu;
      b.lo = b.hi = ExtRat(mu);
      b.lo_closed = true;
      out.push_back(b);
    }
  }
  return out;
}

TreeNode materialize(const TreeNode& tau, const Rat& mu, const NewtonPoint& vertex, const ParamValue& value) {
  const Rat intercept = vertex.u + mu * Rat(vertex.v);
  if (value.rational) {
    if (value.rational->is_zero()) throw MathError("a free leading coefficient must be nonzero");
    KPoly h(tau.field, std::vector<AlgNum>{AlgNum(tau.field, -*value.rational), AlgNum::one(tau.field)});
    return make_son(tau, mu, h, intercept, mu.den());
  }
  if (value.minpoly.degree() < 1 || value.minpoly.coeff(0).is_zero())
    throw MathError("a free leading coefficient must be a nonzero algebraic number");
  KFactorization fac = factor_over_field(KPoly(tau.field, value.minpoly));
  return make_son(tau, mu, fac.factors.front().poly, intercept, mu.den());
}

bool is_leaf(const TreeNode& tau, bool strict) {
  if (!tau.shifted.constant_part().is_zero()) return false;
  if (tau.shifted.is_zero()) return true;
  PolygonView view = build_polygon(tau.shifted, strict);
  for (const auto& e : view.edges)
    if (ExtRat(e.mu) > tau.mu) return false;
  return vertex_branches(tau, strict).empty();
}

ExtRat certified_next_exponent(const DiffPoly& f, const PuiseuxSeries& psi) {
  if (!psi.is_exact()) throw MathError("certification needs the exact partial sum");
  PuiseuxSeries residual = evaluate_series(f, psi, ExtRat::pos_inf());
  if (residual.is_zero()) return ExtRat::pos_inf();
  const Rat r = residual.ord().value();
  ExtRat best = ExtRat::neg_inf();
  const DiffPoly g = f.over(psi.field());
  for (int s = 1; s <= g.degree(); ++s) {
    for (const auto& kappa : compositions(s, g.order() + 1)) {
      DiffPoly d = g;
      int weight = 0;
      for (std::size_t j = 0; j < kappa.size(); ++j) {
        if (kappa[j] > 0) d = d.partial_derivative(static_cast<int>(j), kappa[j]);
        weight += static_cast<int>(j) * kappa[j];
      }
      if (d.is_zero()) continue;
      PuiseuxSeries coeff = evaluate_series(d, psi, ExtRat::pos_inf());
      if (coeff.is_zero()) continue;
      Rat u = coeff.ord().value() - Rat(weight);
      best = std::max(best, ExtRat((r - u) / Rat(s)));
    }
  }
  return best;
}

SolveResult expand(const DiffPoly& f, const SolveOptions& options) {
  SolveResult result;
  auto& tree = result.tree;
  tree.push_back(init_root(f));
  const Budget& budget = options.budget;
  int family_count = 0;

  auto emit_exact = [&](const TreeNode& node) {
    PuiseuxSolution sol;
    sol.kind = SolutionKind::exact_leaf;
    sol.node = node.id;
    sol.nu = node.nu;
    sol.series = node.partial;
    if (!evaluate_series(f, sol.series, ExtRat::pos_inf()).is_zero()) throw InternalError("branch inconsistent");
    sol.certified = ExtRat::pos_inf();
    sol.factor = node.factor;
    result.solutions.push_back(std::move(sol));
  };

  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    TreeNode tau = tree[static_cast<std::size_t>(id)];

    // Candidate sons in (mu, discovery) order.
    std::vector<TreeNode> candidates = edge_branches(tau, options.strict);
    std::vector<VertexBranch> vbs = vertex_branches(tau, options.strict);
    bool has_continuum = false;
    for (const auto& b : vbs) {
      if (b.continuum) {
        has_continuum = true;
        candidates.push_back(family_node(tau, NodeStatus::continuum, b.lo, b.hi, b.lo_closed));
        continue;
      }
      TreeNode fam = family_node(tau, NodeStatus::parametric, ExtRat(b.mu), ExtRat(b.mu), true);
      fam.family = "@" + b.vertex.u.str() + "," + std::to_string(b.vertex.v);  // resolved below
      candidates.push_back(std::move(fam));
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const TreeNode& a, const TreeNode& b) { return sort_key(a) < sort_key(b); });

    const bool y0_solves = tau.shifted.constant_part().is_zero();
    bool dropped = false;
    ExtRat first_dropped = ExtRat::pos_inf();
    std::vector<TreeNode> kept;
    for (auto& cand : candidates) {
      bool fits = cand.level <= budget.max_level &&
                  static_cast<int>(tree.size() + kept.size()) < budget.max_nodes;
      if (cand.status == NodeStatus::continuum)
        fits = fits && (cand.family_lo < ExtRat(budget.max_exponent) ||
                        (cand.family_lo_closed && cand.family_lo == ExtRat(budget.max_exponent)));
      else
        fits = fits && cand.mu <= ExtRat(budget.max_exponent);
      if (!fits) {
        dropped = true;
        first_dropped = std::min(first_dropped, cand.mu);
        continue;
      }
      kept.push_back(std::move(cand));
    }

    TreeNode& node = tree[static_cast<std::size_t>(id)];
    if (candidates.empty()) {
      node.status = y0_solves ? NodeStatus::leaf : NodeStatus::barren;
      if (y0_solves) emit_exact(node);
      continue;
    }
    node.status = dropped ? NodeStatus::truncated : NodeStatus::expandable;

    // y_tau itself solves F when the constant part of F_tau vanishes. A
    // continuum family with free c already contains it.
    if (y0_solves && !has_continuum) {
      TreeNode inf = tau;
      inf.id = static_cast<int>(tree.size());
      inf.parent = id;
      inf.c = AlgNum::zero(tau.field);
      inf.mu = ExtRat::pos_inf();
      inf.level = tau.level + 1;
      inf.status = NodeStatus::leaf;
      inf.factor.reset();
      inf.children.clear();
      tree[static_cast<std::size_t>(id)].children.push_back(inf.id);
      emit_exact(inf);
      tree.push_back(std::move(inf));
    }

    if (dropped) {
      PuiseuxSolution sol;
      sol.kind = SolutionKind::truncated;
      sol.node = id;
      sol.nu = tau.nu;
      sol.series = tau.partial.truncated(first_dropped);
      sol.certified = certified_next_exponent(f, tau.partial);
      sol.factor = tau.factor;
      ExtRat last = tau.partial.is_zero() ? ExtRat::neg_inf() : ExtRat(tau.partial.terms().rbegin()->first);
      if (!(sol.certified > last)) throw InternalError("branch inconsistent: residual does not exceed the last exponent");
      result.solutions.push_back(std::move(sol));
    }

    for (auto& son : kept) {
      son.id = static_cast<int>(tree.size());
      son.parent = id;
      tree[static_cast<std::size_t>(id)].children.push_back(son.id);
      if (son.status == NodeStatus::parametric || son.status == NodeStatus::continuum) {
        std::string vertex_tag = son.family;
        son.family = "c" + std::to_string(++family_count);
        auto given = options.params.find(son.family);
        if (given != options.params.end() && son.status == NodeStatus::parametric) {
          // Continue the branch with the supplied coefficient.
          NewtonPoint vertex;
          if (vertex_tag.empty()) {
            // Edge with vanishing H: the edge line passes through the upper hull point.
            vertex = {tau.shifted.ord().value(), 0};
            PolygonView view = build_polygon(tau.shifted, options.strict);
            for (const auto& e : view.edges)
              if (ExtRat(e.mu) == son.mu) vertex = e.upper;
          } else {
            auto comma = vertex_tag.find(',');
            vertex = {Rat::parse(vertex_tag.substr(1, comma - 1)), std::stoi(vertex_tag.substr(comma + 1))};
          }
          TreeNode made = materialize(tau, son.mu.value(), vertex, given->second);
          made.id = son.id;
          made.family = son.family;
          tree.push_back(std::move(made));
          queue.push_back(son.id);
          continue;
        }
        PuiseuxSolution sol;
        sol.kind = son.status == NodeStatus::parametric ? SolutionKind::parametric_family : SolutionKind::continuum_family;
        sol.node = son.id;
        sol.nu = tau.nu;
        sol.series = tau.partial;
        sol.certified = ExtRat::pos_inf();
        sol.factor = tau.factor;
        sol.parameter = son.family;
        sol.mu_lo = son.family_lo;
        sol.mu_hi = son.family_hi;
        sol.mu_lo_closed = son.family_lo_closed;
        result.solutions.push_back(std::move(sol));
        tree.push_back(std::move(son));
        continue;
      }
      queue.push_back(son.id);
      tree.push_back(std::move(son));
    }
  }

  for (const auto& n : tree) result.max_level = std::max(result.max_level, n.level);
  result.bounds = degree_bound_check(tree, f.degree());
  return result;
}

BoundsReport degree_bound_check(const std::vector<TreeNode>& tree, int d) {
  BoundsReport report;
  report.d = d;
  for (const auto& n : tree) {
    Integer bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(std::max(d, 0)), static_cast<unsigned long>(n.level));
    if (Integer(n.field->degree()) > bound) report.violations.push_back({n.id, n.level, n.field->degree()});
  }
  return report;
}

}  // namespace puiseux
