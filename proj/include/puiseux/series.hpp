#pragma once

#include <map>
#include <string>

#include "puiseux/diffpoly.hpp"

namespace puiseux {

/// A Puiseux polynomial sum c_i x^i, known exactly below truncation() and unknown from
/// there on. An exact (finite) series has truncation +inf.
class PuiseuxSeries {
 public:
  using Terms = std::map<Rat, AlgNum>;

  PuiseuxSeries() : PuiseuxSeries(NumberField::rational()) {}
  explicit PuiseuxSeries(FieldPtr field, ExtRat truncation = ExtRat::pos_inf());
  static PuiseuxSeries monomial(const AlgNum& c, const Rat& exp, ExtRat truncation = ExtRat::pos_inf());

  const FieldPtr& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  const ExtRat& truncation() const { return trunc_; }
  bool is_exact() const { return trunc_.is_pos_inf(); }
  /// No known nonzero term. Says nothing about the unknown tail.
  bool is_zero() const { return terms_.empty(); }
  AlgNum coeff(const Rat& exp) const;
  /// Least known exponent, or the truncation when no term is known.
  ExtRat ord() const;
  /// Least common denominator of the exponents.
  Integer nu() const;

  /// Adds c x^exp; terms at or beyond the truncation are discarded.
  void add_term(const AlgNum& c, const Rat& exp);
  /// Lowers the truncation to t and drops the terms it hides.
  PuiseuxSeries truncated(const ExtRat& t) const;
  PuiseuxSeries derivative() const;
  PuiseuxSeries mapped(const Embedding& e) const;
  PuiseuxSeries over(const FieldPtr& field) const;
  PuiseuxSeries scaled(const AlgNum& c) const;
  PuiseuxSeries pow(int e) const;

  std::string str(std::string_view var = "x") const;

  PuiseuxSeries& operator+=(const PuiseuxSeries& o);
  friend PuiseuxSeries operator+(PuiseuxSeries a, const PuiseuxSeries& b) { return a += b; }
  friend PuiseuxSeries operator-(const PuiseuxSeries& a) { return a.scaled(AlgNum(a.field(), Rat(-1))); }
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);

 private:
  FieldPtr field_;
  Terms terms_;
  ExtRat trunc_;
};

/// F(psi, psi', ..., psi^(n)) below `up_to`. Throws MathError when psi's truncation
/// does not determine every term below `up_to`.
PuiseuxSeries evaluate_series(const DiffPoly& f, const PuiseuxSeries& psi, const ExtRat& up_to);
/// F(psi, ...) known as far as psi determines it.
PuiseuxSeries evaluate_series(const DiffPoly& f, const PuiseuxSeries& psi);

}  // namespace puiseux
