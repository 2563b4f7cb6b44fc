#include "puiseux/series.hpp"

#include <sstream>

#include "puiseux/error.hpp"

namespace puiseux {

PuiseuxSeries::PuiseuxSeries(FieldPtr field, ExtRat truncation) : field_(std::move(field)), trunc_(std::move(truncation)) {
  if (trunc_.is_neg_inf()) throw MathError("series truncated at -inf");
}

PuiseuxSeries PuiseuxSeries::monomial(const AlgNum& c, const Rat& exp, ExtRat truncation) {
  PuiseuxSeries s(c.field(), std::move(truncation));
  s.add_term(c, exp);
  return s;
}

AlgNum PuiseuxSeries::coeff(const Rat& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? AlgNum::zero(field_) : it->second;
}

ExtRat PuiseuxSeries::ord() const { return terms_.empty() ? trunc_ : ExtRat(terms_.begin()->first); }

Integer PuiseuxSeries::nu() const {
  Integer l = 1;
  for (const auto& [e, c] : terms_) l = lcm(l, e.den());
  return l;
}

void PuiseuxSeries::add_term(const AlgNum& c, const Rat& exp) {
  if (!same_field(c.field(), field_)) throw MathError("coefficient outside the series' field");
  if (c.is_zero() || !(ExtRat(exp) < trunc_)) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PuiseuxSeries PuiseuxSeries::truncated(const ExtRat& t) const {
  PuiseuxSeries out(field_, std::min(t, trunc_));
  for (const auto& [e, c] : terms_) out.add_term(c, e);
  return out;
}

PuiseuxSeries PuiseuxSeries::derivative() const {
  PuiseuxSeries out(field_, trunc_.is_finite() ? ExtRat(trunc_.value() - Rat(1)) : trunc_);
  for (const auto& [e, c] : terms_) out.add_term(c * e, e - Rat(1));
  return out;
}

PuiseuxSeries PuiseuxSeries::mapped(const Embedding& e) const {
  PuiseuxSeries out(e.target(), trunc_);
  for (const auto& [x, c] : terms_) out.terms_.emplace(x, e(c));
  return out;
}

PuiseuxSeries PuiseuxSeries::over(const FieldPtr& field) const {
  if (same_field(field, field_)) return *this;
  if (!field_->is_rational()) throw MathError("no embedding between the coefficient fields");
  PuiseuxSeries out(field, trunc_);
  for (const auto& [x, c] : terms_) out.terms_.emplace(x, AlgNum(field, c.rational_value()));
  return out;
}

PuiseuxSeries PuiseuxSeries::scaled(const AlgNum& s) const {
  PuiseuxSeries out(field_, trunc_);
  for (const auto& [x, c] : terms_) out.add_term(c * s, x);
  return out;
}

PuiseuxSeries PuiseuxSeries::pow(int e) const {
  if (e < 0) throw MathError("negative power of a series");
  PuiseuxSeries acc = monomial(AlgNum::one(field_), Rat(0));
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

std::string PuiseuxSeries::str(std::string_view var) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = c.is_rational() && c.rational_value().sign() < 0;
    AlgNum mag = negative ? -c : c;
    bool unit = mag.is_rational() && mag.rational_value().is_one();
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    if (e.is_zero()) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << "*";
      os << var;
      if (!e.is_one()) os << "^" << (e.is_integer() && e.sign() > 0 ? e.str() : "(" + e.str() + ")");
    }
    first = false;
  }
  if (is_exact()) {
    if (first) os << "0";
  } else {
    const Rat& t = trunc_.value();
    os << (first ? "" : " + ") << "O(" << var << "^" << (t.is_integer() && t.sign() > 0 ? t.str() : "(" + t.str() + ")") << ")";
  }
  return os.str();
}

PuiseuxSeries& PuiseuxSeries::operator+=(const PuiseuxSeries& o) {
  if (!same_field(field_, o.field_)) throw MathError("arithmetic between different number fields");
  if (o.trunc_ < trunc_) *this = truncated(o.trunc_);
  for (const auto& [e, c] : o.terms_) add_term(c, e);
  return *this;
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (!same_field(a.field_, b.field_)) throw MathError("arithmetic between different number fields");
  // The unknown tail of a starts at trunc(a) and meets b from ord(b) upward, and vice versa.
  ExtRat t = std::min(a.trunc_ + b.ord(), b.trunc_ + a.ord());
  PuiseuxSeries out(a.field_, t);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ca * cb, ea + eb);
  return out;
}

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return same_field(a.field_, b.field_) && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

PuiseuxSeries evaluate_series(const DiffPoly& f, const PuiseuxSeries& psi) {
  const FieldPtr& k = psi.field();
  DiffPoly g = f.over(k);
  std::vector<PuiseuxSeries> derivs{psi};
  for (int j = 1; j <= g.order(); ++j) derivs.push_back(derivs.back().derivative());
  std::vector<std::map<int, PuiseuxSeries>> powers(derivs.size());
  auto deriv_pow = [&](std::size_t j, int e) -> const PuiseuxSeries& {
    auto it = powers[j].find(e);
    if (it != powers[j].end()) return it->second;
    return powers[j].emplace(e, derivs[j].pow(e)).first->second;
  };
  PuiseuxSeries acc(k);
  for (const auto& [key, c] : g.terms()) {
    PuiseuxSeries term = PuiseuxSeries::monomial(c, key.xexp);
    for (std::size_t j = 0; j < key.alpha.size(); ++j)
      if (key.alpha[j] > 0) term = term * deriv_pow(j, key.alpha[j]);
    acc += term;
  }
  return acc;
}

PuiseuxSeries evaluate_series(const DiffPoly& f, const PuiseuxSeries& psi, const ExtRat& up_to) {
  PuiseuxSeries acc = evaluate_series(f, psi);
  if (acc.truncation() < up_to) throw MathError("series too short to certify residual up to " + up_to.str());
  return acc.truncated(up_to);
}

}  // namespace puiseux
