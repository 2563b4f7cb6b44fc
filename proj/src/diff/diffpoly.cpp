#include "puiseux/diffpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "puiseux/error.hpp"

namespace puiseux {
namespace {

void pad(std::vector<int>& alpha, int order) { alpha.resize(static_cast<std::size_t>(order) + 1, 0); }

std::string exponent_str(const Rat& e) {
  if (e.is_integer() && e.sign() > 0) return e.str();
  return "(" + e.str() + ")";
}

}  // namespace

int MonomialKey::total_degree() const { return std::accumulate(alpha.begin(), alpha.end(), 0); }

int MonomialKey::weight() const {
  int w = 0;
  for (std::size_t j = 0; j < alpha.size(); ++j) w += static_cast<int>(j) * alpha[j];
  return w;
}

DiffPoly::DiffPoly(FieldPtr field, int order) : field_(std::move(field)), order_(order) {
  if (order < 0) throw MathError("differential polynomial order must be nonnegative");
}

DiffPoly DiffPoly::constant(const AlgNum& c, int order) { return x_power(c, Rat(0), order); }

DiffPoly DiffPoly::x_power(const AlgNum& c, const Rat& xexp, int order) {
  DiffPoly p(c.field(), order);
  p.add_term(c, xexp, {});
  return p;
}

DiffPoly DiffPoly::y(const FieldPtr& field, int j, int order) {
  DiffPoly p(field, std::max(order, j));
  std::vector<int> alpha(static_cast<std::size_t>(j) + 1, 0);
  alpha[static_cast<std::size_t>(j)] = 1;
  p.add_term(AlgNum::one(field), Rat(0), std::move(alpha));
  return p;
}

void DiffPoly::add_term(const AlgNum& c, const Rat& xexp, std::vector<int> alpha) {
  if (!same_field(c.field(), field_)) throw MathError("coefficient outside the polynomial's field");
  for (int a : alpha)
    if (a < 0) throw MathError("negative power of a derivative variable");
  while (alpha.size() > static_cast<std::size_t>(order_) + 1 && alpha.back() == 0) alpha.pop_back();
  if (alpha.size() > static_cast<std::size_t>(order_) + 1) {
    // Raise the order of every existing term.
    *this = with_order(static_cast<int>(alpha.size()) - 1);
  }
  pad(alpha, order_);
  if (c.is_zero()) return;
  MonomialKey key{xexp, std::move(alpha)};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::vector<DiffMonomial> DiffPoly::monomials() const {
  std::vector<DiffMonomial> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.push_back({c, k});
  return out;
}

int DiffPoly::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.total_degree());
  return d;
}

Integer DiffPoly::nu() const {
  Integer l = 1;
  for (const auto& [k, c] : terms_) l = lcm(l, k.xexp.den());
  return l;
}

ExtRat DiffPoly::ord() const {
  if (terms_.empty()) return ExtRat::pos_inf();
  return ExtRat(terms_.begin()->first.xexp);
}

DiffPoly DiffPoly::with_order(int n) const {
  if (n < order_) throw MathError("cannot lower the order of a differential polynomial");
  DiffPoly out(field_, n);
  for (const auto& [k, c] : terms_) {
    MonomialKey key = k;
    pad(key.alpha, n);
    out.terms_.emplace(std::move(key), c);
  }
  return out;
}

DiffPoly DiffPoly::partial_derivative(int j, int k) const {
  if (j < 0 || j > order_) throw MathError("derivative variable out of range");
  if (k < 0) throw MathError("negative derivative multiplicity");
  DiffPoly out(field_, order_);
  for (const auto& [key, c] : terms_) {
    int a = key.alpha[static_cast<std::size_t>(j)];
    if (a < k) continue;
    MonomialKey nk = key;
    nk.alpha[static_cast<std::size_t>(j)] = a - k;
    out.terms_.emplace(std::move(nk), c * falling_factorial(Rat(a), k));
  }
  return out;
}

DiffPoly DiffPoly::homogeneous_part(int s) const {
  DiffPoly out(field_, order_);
  for (const auto& [key, c] : terms_)
    if (key.total_degree() == s) out.terms_.emplace(key, c);
  return out;
}

DiffPoly DiffPoly::substitute_shift(const AlgNum& c, const Rat& mu) const {
  if (c.is_zero()) return *this;
  if (!same_field(c.field(), field_)) throw MathError("shift coefficient outside the polynomial's field");
  // L_j = c (mu)_j x^(mu - j) + y_j, the image of y_j.
  std::vector<DiffPoly> images;
  for (int j = 0; j <= order_; ++j) {
    DiffPoly l = y(field_, j, order_);
    AlgNum coeff = c * falling_factorial(mu, j);
    if (!coeff.is_zero()) l += x_power(coeff, mu - Rat(j), order_);
    images.push_back(std::move(l));
  }
  // Powers of each image are shared between terms.
  std::vector<std::map<int, DiffPoly>> powers(images.size());
  auto image_pow = [&](int j, int e) -> const DiffPoly& {
    auto& cache = powers[static_cast<std::size_t>(j)];
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    return cache.emplace(e, images[static_cast<std::size_t>(j)].pow(e)).first->second;
  };
  DiffPoly out(field_, order_);
  for (const auto& [key, f] : terms_) {
    DiffPoly term = x_power(f, key.xexp, order_);
    for (int j = 0; j <= order_; ++j) {
      int a = key.alpha[static_cast<std::size_t>(j)];
      if (a > 0) term = term * image_pow(j, a);
    }
    out += term;
  }
  return out;
}

DiffPoly DiffPoly::mapped(const Embedding& e) const {
  DiffPoly out(e.target(), order_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, e(c));
  return out;
}

DiffPoly DiffPoly::over(const FieldPtr& field) const {
  if (same_field(field, field_)) return *this;
  if (!field_->is_rational()) throw MathError("no embedding between the coefficient fields");
  DiffPoly out(field, order_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, AlgNum(field, c.rational_value()));
  return out;
}

DiffPoly DiffPoly::scaled(const AlgNum& s) const {
  DiffPoly out(field_, order_);
  if (s.is_zero()) return out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * s);
  return out;
}

DiffPoly DiffPoly::pow(int e) const {
  if (e < 0) throw MathError("negative power of a differential polynomial");
  DiffPoly acc = constant(AlgNum::one(field_), order_);
  DiffPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

std::string DiffPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    std::vector<std::string> factors;
    if (!key.xexp.is_zero()) factors.push_back(key.xexp.is_one() ? "x" : "x^" + exponent_str(key.xexp));
    for (std::size_t j = 0; j < key.alpha.size(); ++j) {
      if (key.alpha[j] == 0) continue;
      std::string v = "y" + std::to_string(j);
      if (key.alpha[j] > 1) v += "^" + std::to_string(key.alpha[j]);
      factors.push_back(std::move(v));
    }
    bool negative = c.is_rational() && c.rational_value().sign() < 0;
    AlgNum mag = negative ? -c : c;
    bool unit = mag.is_rational() && mag.rational_value().is_one();
    if (!unit || factors.empty()) factors.insert(factors.begin(), mag.str());
    std::string body;
    for (std::size_t i = 0; i < factors.size(); ++i) body += (i ? "*" : "") + factors[i];
    if (first)
      os << (negative ? "-" : "") << body;
    else
      os << (negative ? " - " : " + ") << body;
    first = false;
  }
  return os.str();
}

void DiffPoly::check_compatible(const DiffPoly& o) const {
  if (!same_field(field_, o.field_)) throw MathError("arithmetic between different number fields");
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  check_compatible(o);
  if (o.order_ > order_) *this = with_order(o.order_);
  for (const auto& [k, c] : o.terms_) add_term(c, k.xexp, k.alpha);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) { return *this += -o; }

DiffPoly operator-(const DiffPoly& a) { return a.scaled(AlgNum(a.field_, Rat(-1))); }

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  a.check_compatible(b);
  const int n = std::max(a.order_, b.order_);
  DiffPoly out(a.field_, n);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      std::vector<int> alpha(static_cast<std::size_t>(n) + 1, 0);
      for (std::size_t j = 0; j < ka.alpha.size(); ++j) alpha[j] += ka.alpha[j];
      for (std::size_t j = 0; j < kb.alpha.size(); ++j) alpha[j] += kb.alpha[j];
      out.add_term(ca * cb, ka.xexp + kb.xexp, std::move(alpha));
    }
  return out;
}

bool operator==(const DiffPoly& a, const DiffPoly& b) {
  if (!same_field(a.field_, b.field_)) return false;
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  const int n = std::max(a.order_, b.order_);
  return a.with_order(n).terms_ == b.with_order(n).terms_;
}

}  // namespace puiseux
