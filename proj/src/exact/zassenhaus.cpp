// Zassenhaus factorization over Z: Cantor-Zassenhaus modulo a small prime,
// linear Hensel lifting past the Mignotte bound, then subset recombination.

#include "zassenhaus.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>

#include "puiseux/error.hpp"

namespace puiseux::detail {
namespace {

using i64 = std::int64_t;
using Fp = std::vector<i64>;

void trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Fp& a) { return static_cast<int>(a.size()) - 1; }
int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

i64 mulmod(i64 a, i64 b, i64 p) { return static_cast<i64>((static_cast<__int128>(a) * b) % p); }

i64 powmod(i64 b, i64 e, i64 p) {
  i64 r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 p) { return powmod(a, p - 2, p); }

Fp to_fp(const ZPoly& a, i64 p) {
  Fp r(a.size());
  Integer pp = static_cast<long>(p), t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r(t.get_mpz_t(), a[i].get_mpz_t(), pp.get_mpz_t());
    r[i] = t.get_si();
  }
  trim(r);
  return r;
}

ZPoly to_z(const Fp& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<long>(a[i]);
  return r;
}

Fp fp_sub(Fp a, const Fp& b, i64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] - b[i] + p) % p;
  trim(a);
  return a;
}

Fp fp_mul(const Fp& a, const Fp& b, i64 p) {
  if (a.empty() || b.empty()) return {};
  Fp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

std::pair<Fp, Fp> fp_divmod(const Fp& a, const Fp& b, i64 p) {
  if (b.empty()) throw InternalError("division by zero polynomial modulo p");
  if (deg(a) < deg(b)) return {Fp{}, a};
  Fp rem = a, quo(static_cast<std::size_t>(deg(a) - deg(b)) + 1, 0);
  i64 inv = invmod(b.back(), p);
  int db = deg(b);
  for (int i = deg(a); i >= db; --i) {
    if (rem[i] == 0) continue;
    i64 q = mulmod(rem[i], inv, p);
    quo[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] = (rem[i - db + j] - mulmod(q, b[j], p) + p) % p;
  }
  rem.resize(static_cast<std::size_t>(db));
  trim(rem);
  trim(quo);
  return {quo, rem};
}

Fp fp_mod(const Fp& a, const Fp& b, i64 p) { return fp_divmod(a, b, p).second; }

Fp fp_monic(Fp a, i64 p) {
  if (a.empty()) return a;
  i64 inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

Fp fp_gcd(Fp a, Fp b, i64 p) {
  while (!b.empty()) {
    Fp r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(std::move(a), p);
}

// s*a + t*b = 1 for coprime a, b.
std::pair<Fp, Fp> fp_bezout(const Fp& a, const Fp& b, i64 p) {
  Fp r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = fp_divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Fp s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    Fp t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw InternalError("Hensel lifting needs coprime factors");
  i64 inv = invmod(r0[0], p);
  for (auto& c : s0) c = mulmod(c, inv, p);
  for (auto& c : t0) c = mulmod(c, inv, p);
  return {s0, t0};
}

Fp fp_powmod(Fp base, const Integer& e, const Fp& modulus, i64 p) {
  Fp result{1};
  base = fp_mod(base, modulus, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = fp_mod(fp_mul(result, result, p), modulus, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = fp_mod(fp_mul(result, base, p), modulus, p);
  }
  return result;
}

Fp fp_derivative(const Fp& a, i64 p) {
  Fp d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mulmod(a[i], static_cast<i64>(i) % p, p));
  trim(d);
  return d;
}

std::vector<std::pair<Fp, int>> distinct_degree(Fp f, i64 p) {
  std::vector<std::pair<Fp, int>> out;
  const Fp x{0, 1};
  Fp h = x;
  int d = 0;
  while (deg(f) >= 2 * (d + 1)) {
    ++d;
    h = fp_powmod(h, Integer(static_cast<long>(p)), f, p);
    Fp g = fp_gcd(f, fp_sub(h, x, p), p);
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      f = fp_divmod(f, g, p).first;
      h = fp_mod(h, f, p);
    }
  }
  if (deg(f) > 0) out.emplace_back(fp_monic(f, p), deg(f));
  return out;
}

void equal_degree(const Fp& g, int d, i64 p, std::mt19937_64& rng, std::vector<Fp>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<i64> coeff(0, p - 1);
  while (true) {
    Fp a(static_cast<std::size_t>(deg(g)));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (deg(a) < 1) continue;
    Fp b = fp_sub(fp_powmod(a, e, g, p), Fp{1}, p);
    Fp h = fp_gcd(g, b, p);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      equal_degree(h, d, p, rng, out);
      equal_degree(fp_divmod(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<Fp> factor_mod_p(const Fp& f, i64 p) {
  std::mt19937_64 rng(0x5eed + static_cast<std::uint64_t>(p));
  std::vector<Fp> out;
  for (auto& [g, d] : distinct_degree(fp_monic(f, p), p)) equal_degree(g, d, p, rng, out);
  return out;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

// ---------------------------------------------------------------- integer helpers

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void reduce_nonneg(ZPoly& a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(a);
}

void reduce_symmetric(ZPoly& a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(a);
}

// Exact division by a monic divisor; returns false when the remainder is nonzero.
bool zdivide_monic(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (deg(a) < deg(b)) return false;
  ZPoly rem = a;
  ZPoly quo(static_cast<std::size_t>(deg(a) - deg(b)) + 1);
  int db = deg(b);
  for (int i = deg(a); i >= db; --i) {
    Integer q = rem[i];
    quo[i - db] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b[j];
  }
  for (int i = 0; i < db; ++i)
    if (rem[i] != 0) return false;
  trim(quo);
  quotient = std::move(quo);
  return true;
}

// f = g*h mod p with g, h monic; lifts to modulus p^k.
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& f, const Fp& g, const Fp& h, i64 p, int k) {
  auto [s, t] = fp_bezout(g, h, p);
  ZPoly G = to_z(g), H = to_z(h);
  Integer m = static_cast<long>(p);
  for (int step = 1; step < k; ++step) {
    ZPoly e = zsub(f, zmul(G, H));
    for (auto& c : e) {
      if (!mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t())) throw InternalError("Hensel congruence lost");
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    Fp ep = to_fp(e, p);
    ZPoly dG = to_z(fp_mod(fp_mul(t, ep, p), g, p));
    ZPoly dH = to_z(fp_mod(fp_mul(s, ep, p), h, p));
    if (dG.size() > G.size()) G.resize(dG.size());
    if (dH.size() > H.size()) H.resize(dH.size());
    for (std::size_t i = 0; i < dG.size(); ++i) G[i] += m * dG[i];
    for (std::size_t i = 0; i < dH.size(); ++i) H[i] += m * dH[i];
    m *= static_cast<long>(p);
    reduce_nonneg(G, m);
    reduce_nonneg(H, m);
  }
  return {G, H};
}

std::vector<ZPoly> hensel_multi(const ZPoly& f, std::vector<Fp> factors, i64 p, int k, const Integer& modulus) {
  if (factors.size() == 1) {
    ZPoly r = f;
    reduce_nonneg(r, modulus);
    return {r};
  }
  Fp g = factors.front();
  Fp h{1};
  for (std::size_t i = 1; i < factors.size(); ++i) h = fp_mul(h, factors[i], p);
  auto [G, H] = hensel_pair(f, g, h, p, k);
  factors.erase(factors.begin());
  std::vector<ZPoly> rest = hensel_multi(H, std::move(factors), p, k, modulus);
  rest.insert(rest.begin(), G);
  return rest;
}

std::vector<ZPoly> factor_monic(const ZPoly& f) {
  const int n = deg(f);
  if (n <= 1) return {f};

  // Choose the prime with the fewest modular factors among a handful of good ones.
  std::vector<Fp> best;
  i64 best_p = 0;
  int good = 0;
  for (i64 p = 3; good < 5; p += 2) {
    if (!is_prime(p)) continue;
    Fp fp = to_fp(f, p);
    if (deg(fp) != n) continue;
    if (deg(fp_gcd(fp, fp_derivative(fp, p), p)) != 0) continue;
    ++good;
    std::vector<Fp> facs = factor_mod_p(fp, p);
    if (best_p == 0 || facs.size() < best.size()) {
      best = std::move(facs);
      best_p = p;
    }
    if (best.size() == 1) return {f};
  }

  // Mignotte-style bound on factor coefficients.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  Integer bound = (root + 1) << n;
  Integer modulus = static_cast<long>(best_p);
  int k = 1;
  while (modulus <= 2 * bound) {
    modulus *= static_cast<long>(best_p);
    ++k;
  }

  std::vector<ZPoly> lifted = hensel_multi(f, best, best_p, k, modulus);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<std::size_t> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;

  for (std::size_t size = 1; 2 * size <= alive.size();) {
    bool found = false;
    std::vector<bool> pick(alive.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      ZPoly cand{1};
      for (std::size_t i = 0; i < alive.size(); ++i)
        if (pick[i]) {
          cand = zmul(cand, lifted[alive[i]]);
          reduce_nonneg(cand, modulus);
        }
      reduce_symmetric(cand, modulus);
      ZPoly quotient;
      if (zdivide_monic(rest, cand, quotient)) {
        result.push_back(cand);
        rest = std::move(quotient);
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < alive.size(); ++i)
          if (!pick[i]) keep.push_back(alive[i]);
        alive = std::move(keep);
        found = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++size;
  }
  if (deg(rest) > 0) result.push_back(rest);
  return result;
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

}  // namespace

std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
  const int n = deg(f);
  if (n < 1) throw InternalError("factoring a constant");
  if (n == 1) return {f};
  const Integer a = f.back();
  // F(x) = a^(n-1) f(x/a) is monic with integer coefficients.
  ZPoly monic(f.size());
  Integer scale = 1;
  for (int i = n - 1; i >= 0; --i) {
    monic[i] = f[i] * scale;
    scale *= a;
  }
  monic[n] = 1;
  std::vector<ZPoly> out;
  for (ZPoly g : factor_monic(monic)) {
    // g(a x), then primitive part.
    Integer pw = 1;
    for (auto& c : g) {
      c *= pw;
      pw *= a;
    }
    Integer ct = content(g);
    if (g.back() < 0) ct = -ct;
    for (auto& c : g) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ct.get_mpz_t());
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace puiseux::detail
