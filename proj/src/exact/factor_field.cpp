#include <algorithm>
#include <atomic>

#include "puiseux/error.hpp"
#include "puiseux/factor.hpp"

namespace puiseux {
namespace {

std::atomic<std::uint64_t> g_audit_calls{0};
std::atomic<std::uint64_t> g_audit_failures{0};

bool kpoly_less(const KPoly& a, const KPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    const auto& x = a.coeffs()[i].coords();
    const auto& y = b.coeffs()[i].coords();
    if (x != y) return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }
  return false;
}

// Irreducible factors of a monic squarefree g over a field of degree > 1.
std::vector<KPoly> trager(const KPoly& g) {
  if (g.degree() <= 1) return {g.monic()};
  const FieldPtr& k = g.field();
  const AlgNum theta = AlgNum::generator(k);
  for (long i = 0; i < 64; ++i) {
    long s = (i % 2 == 1) ? (i + 1) / 2 : -(i / 2);  // 0, 1, -1, 2, -2, ...
    KPoly gs = g.shifted(theta * Rat(-s));
    QPoly n = norm(gs);
    if (!is_squarefree(n)) continue;
    QFactorization fac = factor_over_Q(n);
    if (fac.factors.size() == 1) return {g};
    std::vector<KPoly> out;
    for (const auto& f : fac.factors) {
      KPoly h = gcd(gs, KPoly(k, f.poly));
      if (h.degree() < 1) throw InternalError("norm factor shares no divisor with the shifted polynomial");
      out.push_back(h.shifted(theta * Rat(s)).monic());
    }
    return out;
  }
  throw InternalError("no squarefree norm found for Trager factorization");
}

// Solves A x = b over Q for a square invertible A.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw InternalError("singular system in primitive element construction");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rat inv = a[col][col].inverse();
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rat f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

// Coordinates of an element of K[C]/(h) in the Q-basis theta^i C^j.
std::vector<Rat> flatten(const KPoly& e, int n, int m) {
  std::vector<Rat> v(static_cast<std::size_t>(n * m));
  for (int j = 0; j <= e.degree(); ++j)
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(j * n + i)] = e.coeffs()[j].coords()[i];
  return v;
}

}  // namespace

KPoly KFactorization::expand() const {
  KPoly acc = KPoly::constant(constant);
  for (const auto& f : factors) acc = acc * pow(f.poly, f.multiplicity);
  return acc;
}

std::vector<KFactor> squarefree_decomposition(const KPoly& p) {
  if (p.is_zero()) throw MathError("squarefree decomposition of zero");
  std::vector<KFactor> out;
  if (p.degree() == 0) return out;
  KPoly a = p.monic();
  KPoly b = a.derivative();
  KPoly c = gcd(a, b);
  KPoly w = a / c;
  KPoly y = b / c;
  KPoly z = y - w.derivative();
  for (int i = 1; w.degree() > 0; ++i) {
    KPoly g = gcd(w, z);
    if (g.degree() > 0) out.push_back({g, i});
    w = w / g;
    y = z / g;
    z = y - w.derivative();
  }
  return out;
}

QPoly norm(const KPoly& p) {
  const FieldPtr& k = p.field();
  if (k->is_rational()) return p.to_qpoly();
  if (p.is_zero()) return {};
  const int points = p.degree() * k->degree() + 1;
  std::vector<Rat> xs, ys;
  for (int i = 0; i < points; ++i) {
    xs.emplace_back(i);
    AlgNum v = p(AlgNum(k, Rat(i)));
    ys.push_back(resultant(k->minpoly(), v.as_poly()));
  }
  return interpolate(xs, ys);
}

KFactorization factor_over_field(const KPoly& p) {
  if (p.is_zero()) throw MathError("cannot factor zero");
  ++g_audit_calls;
  const FieldPtr& k = p.field();
  KFactorization result{p.leading(), {}};
  if (k->is_rational()) {
    for (const auto& f : factor_over_Q(p.to_qpoly()).factors) result.factors.push_back({KPoly(k, f.poly), f.multiplicity});
  } else {
    for (const auto& [part, mult] : squarefree_decomposition(p))
      for (auto& h : trager(part)) result.factors.push_back({std::move(h), mult});
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const KFactor& a, const KFactor& b) { return kpoly_less(a.poly, b.poly); });
  if (!(result.expand() == p)) {
    ++g_audit_failures;
    throw InternalError("factorization does not reconstruct its input");
  }
  return result;
}

PrimitiveElement primitive_element(const KPoly& h) {
  const FieldPtr& k = h.field();
  const int n = k->degree();
  const int m = h.degree();
  if (m < 1) throw MathError("cannot adjoin a root of a constant");
  if (!(h.leading() == AlgNum::one(k))) throw MathError("primitive element needs a monic polynomial");
  if (m > 1 && gcd(h, h.derivative()).degree() > 0) throw MathError("not irreducible");

  if (n == 1) {
    QPoly hq = h.to_qpoly();
    QFactorization fac = factor_over_Q(hq);
    if (fac.factors.size() != 1 || fac.factors.front().multiplicity != 1) throw MathError("not irreducible");
    if (m == 1) return {k, 0, AlgNum::one(k), AlgNum(k, -hq.coeff(0))};
    FieldPtr f = NumberField::make(hq, k->label());
    return {f, 1, AlgNum::one(f), AlgNum::generator(f)};
  }
  if (m == 1) return {k, 0, AlgNum::generator(k), -h.coeff(0)};

  const AlgNum theta = AlgNum::generator(k);
  const long cap = static_cast<long>(n) * m;
  for (long gamma = 1; gamma <= cap; ++gamma) {
    // Characteristic polynomial of theta + gamma*root: Norm(gamma^m h((Z - theta)/gamma)).
    Rat ginv = Rat(gamma).inverse();
    KPoly inner(k, std::vector<AlgNum>{-theta * ginv, AlgNum(k, ginv)});
    KPoly chi_k = h.compose(inner).scaled(AlgNum(k, Rat(gamma).pow(m)));
    QPoly chi = norm(chi_k);
    if (!is_squarefree(chi)) continue;
    QFactorization fac = factor_over_Q(chi);
    if (fac.factors.size() != 1) throw MathError("not irreducible");
    FieldPtr f = NumberField::make(chi, k->label());

    // Express theta and the root in powers of the new generator by linear algebra in K[C]/(h).
    const int dim = n * m;
    KPoly gen(k, std::vector<AlgNum>{theta, AlgNum(k, Rat(gamma))});
    KPoly power = KPoly::constant(AlgNum::one(k));
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(dim), std::vector<Rat>(static_cast<std::size_t>(dim)));
    for (int col = 0; col < dim; ++col) {
      std::vector<Rat> v = flatten(power, n, m);
      for (int r = 0; r < dim; ++r) a[r][col] = v[r];
      power = (power * gen) % h;
    }
    std::vector<Rat> old_coords = solve_linear(a, flatten(KPoly::constant(theta), n, m));
    std::vector<Rat> root_coords = solve_linear(a, flatten(KPoly::variable(k), n, m));
    return {f, gamma, AlgNum(f, std::move(old_coords)), AlgNum(f, std::move(root_coords))};
  }
  throw InternalError("no primitive element within the gamma bound");
}

FactorAudit factor_audit() { return {g_audit_calls.load(), g_audit_failures.load()}; }

void reset_factor_audit() {
  g_audit_calls = 0;
  g_audit_failures = 0;
}

}  // namespace puiseux
