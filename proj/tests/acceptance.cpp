// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>

#include "polygon_checks.hpp"
#include "puiseux/error.hpp"
#include "puiseux/parser.hpp"
#include "puiseux/report.hpp"
#include "puiseux/solver.hpp"

using namespace puiseux;
using namespace puiseux::testing;

namespace {

const FieldPtr Q = NumberField::rational();

// Every expansion made here, for the degree bound check.
std::vector<SolveResult> g_runs;

SolveResult solve(const std::string& text, SolveOptions o = {}) {
  g_runs.push_back(expand(parse_diffpoly(text), o));
  return g_runs.back();
}

// Oracle: F at a finite sum of rational monomials, by termwise calculus on exponent maps.
using Sum = std::map<Rat, Rat>;

Sum multiply(const Sum& a, const Sum& b) {
  Sum out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Sum differentiate(const Sum& a) {
  Sum out;
  for (const auto& [e, c] : a)
    if (!e.is_zero()) out[e - Rat(1)] += c * e;
  return out;
}

Sum oracle_eval(const DiffPoly& f, const Sum& y) {
  std::vector<Sum> d{y};
  for (int j = 1; j <= f.order(); ++j) d.push_back(differentiate(d.back()));
  Sum out;
  for (const auto& [key, c] : f.terms()) {
    Sum term{{key.xexp, c.rational_value()}};
    for (std::size_t j = 0; j < key.alpha.size(); ++j)
      for (int p = 0; p < key.alpha[j]; ++p) term = multiply(term, d[j]);
    for (const auto& [e, v] : term) out[e] += v;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Sum rational_terms(const PuiseuxSeries& s) {
  Sum out;
  for (const auto& [e, c] : s.terms()) out[e] = c.rational_value();
  return out;
}

struct Outcome {
  bool pass;
  std::string detail;
};

int g_failed = 0;

void criterion(int n, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) {
    o.pass = false;
    o.detail += "; over the time limit";
  }
  if (!o.pass) ++g_failed;
  std::printf("%s  %2d  %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", n, name.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
}

// A random (F, e) over one of the small fields whose H has a root other than 0,
// with F moved to the field of that root.
bool random_edge_root(DiffPoly& f, Edge& e, AlgNum& c, std::size_t trial) {
  const FieldPtr& k = test_fields()[trial % 4];
  DiffPoly g = random_with_edge(k, e);
  KPoly h = characteristic_poly(g, e);
  if (h.is_zero()) return false;
  for (const auto& fac : factor_over_field(h).factors) {
    if (fac.poly.degree() == 1 && fac.poly.coeff(0).is_zero()) continue;
    PrimitiveElement pe = primitive_element(fac.poly);
    f = g.mapped(pe.embedding(k));
    c = pe.embed_root;
    return true;
  }
  return false;
}

}  // namespace

int main() {
  reset_factor_audit();

  criterion(1, "x y0 y2 - x y1^2 + y0 y1 is a continuum family", 5, [] {
    const std::string text = "x*y0*y2 - x*y1^2 + y0*y1";
    DiffPoly f = parse_diffpoly(text);
    PolygonView v = build_polygon(f);
    if (v.vertices.size() != 1 || !v.edges.empty()) return Outcome{false, "polygon is not a single vertex"};
    if (!indicial_poly(f, v.vertices[0].point).is_zero()) return Outcome{false, "indicial polynomial is not zero"};
    SolveResult r = solve(text);
    if (r.solutions.size() != 1 || r.solutions[0].kind != SolutionKind::continuum_family)
      return Outcome{false, std::to_string(r.solutions.size()) + " solutions, expected one continuum family"};
    int zero = 0;
    for (int i = 0; i < 20; ++i) {
      Rat c = nonzero_rat(9, 5), mu = small_rat(9, 4);
      if (oracle_eval(f, Sum{{mu, c}}).empty()) ++zero;
    }
    return Outcome{zero == 20, "1 continuum family c1, mu in [0, +inf); F(c x^mu) = 0 for " + std::to_string(zero) + "/20 pairs"};
  });

  criterion(2, "y0^2 - x gives +-x^(1/2)", 1, [] {
    DiffPoly f = parse_diffpoly("y0^2 - x");
    SolveResult r = solve("y0^2 - x");
    std::set<Rat> coeffs;
    for (const auto& s : r.solutions) {
      if (s.kind != SolutionKind::exact_leaf || s.nu != 2 || s.field()->degree() != 1 || s.series.terms().size() != 1)
        return Outcome{false, "unexpected solution " + s.series.str()};
      if (s.series.terms().begin()->first != Rat(1, 2)) return Outcome{false, "exponent is not 1/2"};
      if (!oracle_eval(f, rational_terms(s.series)).empty()) return Outcome{false, "residual is not zero"};
      coeffs.insert(s.series.terms().begin()->second.rational_value());
    }
    bool ok = r.solutions.size() == 2 && coeffs == std::set<Rat>{-1, 1};
    return Outcome{ok, std::to_string(r.solutions.size()) + " exact leaves, nu = 2, residual identically zero"};
  });

  criterion(3, "y' - y - 1 truncated at exponent 4", 5, [] {
    DiffPoly f = parse_diffpoly("y' - y - 1");
    SolveOptions o;
    o.budget.max_exponent = 4;
    SolveResult r = solve("y' - y - 1", o);
    const PuiseuxSolution *trunc = nullptr, *fam = nullptr;
    int other = 0;
    for (const auto& s : r.solutions) {
      if (s.kind == SolutionKind::truncated)
        trunc = &s;
      else if (s.kind == SolutionKind::parametric_family)
        fam = &s;
      else
        ++other;
    }
    if (!trunc || !fam || r.solutions.size() != 2 || other) return Outcome{false, "expected one truncated and one parametric"};
    if (!(fam->mu_lo == ExtRat(Rat(0)) && fam->mu_hi == ExtRat(Rat(0)))) return Outcome{false, "family not at mu = 0"};
    Sum expect;
    Integer fact = 1;
    for (int i = 1; i <= 4; ++i) expect[Rat(i)] = Rat(Integer(1), fact *= i);
    Sum got = rational_terms(trunc->series);
    if (got != expect) return Outcome{false, "coefficients " + trunc->series.str()};
    // The exact partial sum leaves -x^4/24, which the next term 1/120 x^5 cancels
    // through its derivative: the residual bound on the solution is x^5.
    Sum res = oracle_eval(f, got);
    Sum next = got;
    next[Rat(5)] = Rat(1, 120);
    Sum res_next = oracle_eval(f, next);
    bool ok = trunc->certified == ExtRat(Rat(5)) && res == Sum{{Rat(4), Rat(-1, 24)}} && !res_next.empty() && res_next.begin()->first == Rat(5);
    return Outcome{ok, "terms 1, 1/2, 1/6, 1/24 at 1..4; certified next exponent " + trunc->certified.str() +
                           " > 4; parametric family c1 at mu = 0"};
  });

  criterion(4, "marked points of a partial derivative translate", 0, [] {
    int fails = 0;
    for (int i = 0; i < 200; ++i) {
      int j = 0, k = 0;
      DiffPoly f = random_translatable(j, k);
      if (!check_translation(f, j, k).empty()) ++fails;
    }
    return Outcome{fails == 0, "200 instances with y_j^k dividing every term, " + std::to_string(fails) + " failures"};
  });

  criterion(5, "derivative formula for H", 0, [] {
    int fails = 0, printed_fails = 0;
    for (std::size_t i = 0; i < 100; ++i) {
      Edge e;
      DiffPoly f = random_with_edge(test_fields()[i % 4], e);
      for (int k : {1, 2}) {
        if (!check_derivative_formula(f, e, k).empty()) ++fails;
        if (!check_derivative_formula(f, e, k, false).empty()) ++printed_fails;
      }
    }
    return Outcome{fails == 0, "100 instances, k = 1, 2, " + std::to_string(fails) +
                                   " failures (the form without k!/kappa! fails " + std::to_string(printed_fails) + " of 200)"};
  });

  criterion(6, "substitution property", 0, [] {
    int fails = 0;
    for (std::size_t i = 0; i < 100; ++i) {
      const FieldPtr& k = test_fields()[i % 4];
      Edge e;
      DiffPoly f = random_with_edge(k, e);
      AlgNum c = random_alg(k);
      if (c.is_zero()) c = AlgNum::one(k);
      if (!check_substitution(f, e, c).empty()) ++fails;
    }
    return Outcome{fails == 0, "100 (F, e, c), " + std::to_string(fails) + " failures"};
  });

  criterion(7, "edge gain after a root of H", 0, [] {
    int fails = 0, done = 0;
    for (std::size_t trial = 0; done < 100; ++trial) {
      DiffPoly f;
      Edge e;
      AlgNum c;
      if (!random_edge_root(f, e, c, trial)) continue;
      ++done;
      if (!check_edge_gain(f, e, c).empty()) ++fails;
    }
    return Outcome{fails == 0, "100 (F, e) with c a computed root, " + std::to_string(fails) + " failures"};
  });

  criterion(8, "sum polygon", 0, [] {
    int fails = 0;
    for (int i = 0; i < 100; ++i) {
      DiffPoly f = random_diffpoly(Q), g = random_diffpoly(Q);
      if (i % 3 == 0) g -= f.homogeneous_part(static_cast<int>(uniform(0, 3)));
      if (!check_sum_polygon(f, g).empty()) ++fails;
    }
    return Outcome{fails == 0, "100 pairs, " + std::to_string(fails) + " failures"};
  });

  criterion(9, "degree bound deg phi <= d^level", 0, [] {
    for (const char* text : {"y0^2 - 2*x", "y0^3 - x*y0 + x^2", "y0^4 - 2*x^3", "y0^3 - 2*x + x^2*y1", "y0*y1^2 - 3*x^2 + y0^2"}) {
      SolveOptions o;
      o.budget.max_exponent = 3;
      o.budget.max_nodes = 200;
      solve(text, o);
    }
    for (int i = 0; i < 30; ++i) {
      SolveOptions o;
      o.budget.max_exponent = 3;
      o.budget.max_nodes = 60;
      o.budget.max_level = 4;
      g_runs.push_back(expand(random_diffpoly(Q, 2, 3, 4), o));
    }
    std::size_t nodes = 0, violations = 0;
    int top = 1;
    for (const auto& r : g_runs) {
      BoundsReport b = degree_bound_check(r.tree, r.bounds.d);
      violations += b.violations.size() + r.bounds.violations.size();
      nodes += r.tree.size();
      for (const auto& n : r.tree) top = std::max(top, n.field->degree());
    }
    return Outcome{violations == 0, std::to_string(g_runs.size()) + " runs, " + std::to_string(nodes) + " nodes, largest field degree " +
                                        std::to_string(top) + ", " + std::to_string(violations) + " violations"};
  });

  criterion(10, "factorization soundness", 0, [] {
    int fails = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const FieldPtr& k = test_fields()[static_cast<std::size_t>(trial) % test_fields().size()];
      std::vector<KPoly> planted;
      KPoly prod = KPoly::constant(random_alg(k) + AlgNum(k, Rat(5)));
      for (int i = 0, n = static_cast<int>(uniform(1, 3)); i < n; ++i) {
        planted.push_back(random_kpoly(k, 1).monic());
        prod = prod * planted.back();
      }
      if (uniform(0, 1)) prod = prod * random_kpoly(k, 2);
      if (prod.degree() < 1) continue;
      KFactorization f = factor_over_field(prod);
      bool ok = f.expand() == prod;
      int degree_sum = 0;
      for (const auto& q : f.factors) degree_sum += q.poly.degree() * q.multiplicity;
      ok = ok && degree_sum == prod.degree();
      for (const auto& l : planted) {
        bool found = false;
        for (const auto& q : f.factors) found = found || q.poly == l;
        ok = ok && found;
      }
      if (!ok) ++fails;
    }
    FactorAudit audit = factor_audit();
    return Outcome{fails == 0 && audit.failures == 0,
                   "500 random products over fields of degree <= 4, " + std::to_string(fails) + " failures; product identity on all " +
                       std::to_string(audit.calls) + " calls this run, " + std::to_string(audit.failures) + " failures"};
  });

  std::printf("%d of 10 criteria failed\n", g_failed);
  return g_failed ? 1 : 0;
}
