#include "puiseux/number_field.hpp"

#include <sstream>

#include "puiseux/error.hpp"

namespace puiseux {

FieldPtr NumberField::make(QPoly minpoly, std::string label) {
  if (minpoly.degree() < 1) throw MathError("minimal polynomial must have positive degree");
  if (!minpoly.leading().is_one()) throw MathError("minimal polynomial must be monic");
  if (!is_squarefree(minpoly)) throw MathError("minimal polynomial must be squarefree");
  return FieldPtr(new NumberField(std::move(minpoly), std::move(label)));
}

FieldPtr NumberField::rational() {
  static const FieldPtr q = make(QPoly{-1, 1});
  return q;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->minpoly() == b->minpoly();
}

// ---------------------------------------------------------------- AlgNum

AlgNum::AlgNum(FieldPtr field, std::vector<Rat> coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw MathError("algebraic number without a field");
  if (static_cast<int>(coords_.size()) != field_->degree())
    throw MathError("coordinate count does not match field degree");
}

AlgNum::AlgNum(FieldPtr field, const Rat& value) : field_(std::move(field)) {
  if (!field_) throw MathError("algebraic number without a field");
  coords_.assign(static_cast<std::size_t>(field_->degree()), Rat());
  coords_[0] = value;
}

AlgNum AlgNum::generator(const FieldPtr& field) {
  if (field->degree() == 1) return from_poly(field, QPoly::variable());
  std::vector<Rat> c(static_cast<std::size_t>(field->degree()));
  c[1] = 1;
  return AlgNum(field, std::move(c));
}

AlgNum AlgNum::from_poly(const FieldPtr& field, const QPoly& p) {
  QPoly r = p % field->minpoly();
  std::vector<Rat> c(static_cast<std::size_t>(field->degree()));
  for (int i = 0; i <= r.degree(); ++i) c[i] = r.coeffs()[i];
  return AlgNum(field, std::move(c));
}

bool AlgNum::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool AlgNum::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return false;
  return true;
}

Rat AlgNum::rational_value() const {
  if (!is_rational()) throw MathError("algebraic number is not rational");
  return coords_.empty() ? Rat() : coords_[0];
}

void AlgNum::check_same(const AlgNum& o) const {
  if (!same_field(field_, o.field_)) throw MathError("arithmetic between different number fields");
}

AlgNum& AlgNum::operator+=(const AlgNum& o) {
  check_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) {
  check_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

AlgNum& AlgNum::operator*=(const AlgNum& o) {
  check_same(o);
  if (field_->degree() == 1) {
    coords_[0] *= o.coords_[0];
    return *this;
  }
  *this = from_poly(field_, as_poly() * o.as_poly());
  return *this;
}

AlgNum& AlgNum::operator*=(const Rat& r) {
  for (auto& c : coords_) c *= r;
  return *this;
}

AlgNum AlgNum::inverse() const {
  if (is_zero()) throw MathError("inverse of zero in number field");
  if (field_->degree() == 1) return AlgNum(field_, coords_[0].inverse());
  QExtGcd eg = ext_gcd(as_poly(), field_->minpoly());
  if (eg.g.degree() != 0) throw MathError("element is a zero divisor: minimal polynomial is reducible");
  return from_poly(field_, eg.s);
}

AlgNum AlgNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  AlgNum result = one(field_), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string AlgNum::str() const {
  if (is_rational()) return rational_value().str();
  return "(" + as_poly().str(field_->label()) + ")";
}

bool operator==(const AlgNum& a, const AlgNum& b) {
  if (!same_field(a.field_, b.field_)) return false;
  return a.coords_ == b.coords_;
}

// ---------------------------------------------------------------- KPoly

KPoly::KPoly(FieldPtr field, std::vector<AlgNum> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (!same_field(c.field(), field_)) throw MathError("coefficient outside the polynomial's field");
  trim();
}

KPoly::KPoly(FieldPtr field, const QPoly& p) : field_(std::move(field)) {
  c_.reserve(p.coeffs().size());
  for (const auto& r : p.coeffs()) c_.emplace_back(field_, r);
  trim();
}

void KPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

KPoly KPoly::constant(const AlgNum& c) { return KPoly(c.field(), std::vector<AlgNum>{c}); }

KPoly KPoly::monomial(const AlgNum& c, int degree) {
  std::vector<AlgNum> v(static_cast<std::size_t>(degree) + 1, AlgNum::zero(c.field()));
  v.back() = c;
  return KPoly(c.field(), std::move(v));
}

KPoly KPoly::variable(const FieldPtr& field) { return monomial(AlgNum::one(field), 1); }

AlgNum KPoly::coeff(int i) const {
  if (i >= 0 && i < static_cast<int>(c_.size())) return c_[i];
  return AlgNum::zero(field_);
}

const AlgNum& KPoly::leading() const {
  if (c_.empty()) throw MathError("zero polynomial has no leading coefficient");
  return c_.back();
}

AlgNum KPoly::operator()(const AlgNum& x) const {
  AlgNum acc = AlgNum::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

KPoly KPoly::derivative() const {
  std::vector<AlgNum> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
  return KPoly(field_, std::move(d));
}

KPoly KPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

KPoly KPoly::scaled(const AlgNum& s) const {
  std::vector<AlgNum> v = c_;
  for (auto& x : v) x *= s;
  return KPoly(field_, std::move(v));
}

KPoly KPoly::compose(const KPoly& inner) const {
  KPoly acc(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

KPoly KPoly::shifted(const AlgNum& a) const {
  return compose(KPoly(field_, std::vector<AlgNum>{a, AlgNum::one(field_)}));
}

bool KPoly::is_rational() const {
  for (const auto& c : c_)
    if (!c.is_rational()) return false;
  return true;
}

QPoly KPoly::to_qpoly() const {
  std::vector<Rat> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.rational_value());
  return QPoly(std::move(v));
}

std::string KPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const AlgNum& c = c_[i];
    if (c.is_zero()) continue;
    const bool negative = c.is_rational() && c.rational_value().sign() < 0;
    const AlgNum mag = negative ? -c : c;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    bool unit = mag == AlgNum::one(field_);
    if (i == 0 || !unit) os << mag.str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

KPoly& KPoly::operator+=(const KPoly& o) {
  if (!same_field(field_, o.field_)) throw MathError("arithmetic between different number fields");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), AlgNum::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

KPoly& KPoly::operator-=(const KPoly& o) {
  if (!same_field(field_, o.field_)) throw MathError("arithmetic between different number fields");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), AlgNum::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

KPoly operator*(const KPoly& a, const KPoly& b) {
  if (!same_field(a.field_, b.field_)) throw MathError("arithmetic between different number fields");
  if (a.is_zero() || b.is_zero()) return KPoly(a.field_);
  std::vector<AlgNum> r(a.c_.size() + b.c_.size() - 1, AlgNum::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return KPoly(a.field_, std::move(r));
}

bool operator==(const KPoly& a, const KPoly& b) {
  return same_field(a.field_, b.field_) && a.c_ == b.c_;
}

std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  const FieldPtr& k = a.field();
  if (a.degree() < b.degree()) return {KPoly(k), a};
  std::vector<AlgNum> rem = a.coeffs();
  std::vector<AlgNum> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, AlgNum::zero(k));
  AlgNum inv = b.leading().inverse();
  int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i].is_zero()) continue;
    AlgNum q = rem[i] * inv;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
    quo[i - db] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(db), AlgNum::zero(k));
  return {KPoly(k, std::move(quo)), KPoly(k, std::move(rem))};
}

KPoly operator/(const KPoly& a, const KPoly& b) { return divmod(a, b).first; }
KPoly operator%(const KPoly& a, const KPoly& b) { return divmod(a, b).second; }

KPoly pow(const KPoly& p, int e) {
  KPoly result = KPoly::constant(AlgNum::one(p.field())), base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

KPoly gcd(const KPoly& a, const KPoly& b) {
  KPoly x = a, y = b;
  while (!y.is_zero()) {
    KPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ---------------------------------------------------------------- Embedding

Embedding::Embedding(FieldPtr source, AlgNum image_of_generator)
    : source_(std::move(source)), image_(std::move(image_of_generator)) {
  // The image must satisfy the source's minimal polynomial.
  KPoly mp(image_.field(), source_->minpoly());
  if (!mp(image_).is_zero()) throw MathError("embedding image does not satisfy the minimal polynomial");
}

Embedding Embedding::identity(const FieldPtr& field) { return Embedding(field, AlgNum::generator(field)); }

AlgNum Embedding::operator()(const AlgNum& a) const {
  if (!same_field(a.field(), source_)) throw MathError("embedding applied outside its source field");
  const FieldPtr& tgt = target();
  AlgNum acc = AlgNum::zero(tgt);
  const auto& c = a.coords();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * image_ + AlgNum(tgt, *it);
  return acc;
}

KPoly Embedding::operator()(const KPoly& p) const {
  std::vector<AlgNum> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back((*this)(c));
  return KPoly(target(), std::move(v));
}

Embedding Embedding::then(const Embedding& next) const { return Embedding(source_, next(image_)); }

}  // namespace puiseux
