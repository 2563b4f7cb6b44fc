#pragma once

#include <map>
#include <string>
#include <vector>

#include "puiseux/number_field.hpp"

namespace puiseux {

/// Exponent data of one term x^xexp y0^alpha[0] ... yn^alpha[n].
struct MonomialKey {
  Rat xexp;
  std::vector<int> alpha;

  int total_degree() const;
  /// sum of j * alpha[j]
  int weight() const;

  friend bool operator==(const MonomialKey&, const MonomialKey&) = default;
  friend auto operator<=>(const MonomialKey& a, const MonomialKey& b) {
    if (auto c = a.xexp <=> b.xexp; c != 0) return c;
    return a.alpha <=> b.alpha;
  }
};

struct DiffMonomial {
  AlgNum coeff;
  MonomialKey key;
};

/// A differential polynomial sum f_{i,alpha} x^i y0^alpha0 ... yn^alphan with
/// finitely many terms, rational exponents of x and coefficients in one number field.
/// Terms are kept collected and ordered by (xexp, alpha); zero coefficients never appear.
class DiffPoly {
 public:
  using Terms = std::map<MonomialKey, AlgNum>;

  DiffPoly() : DiffPoly(NumberField::rational(), 0) {}
  DiffPoly(FieldPtr field, int order);

  static DiffPoly constant(const AlgNum& c, int order);
  /// c x^xexp (no y).
  static DiffPoly x_power(const AlgNum& c, const Rat& xexp, int order);
  /// The variable y_j.
  static DiffPoly y(const FieldPtr& field, int j, int order);

  /// Adds c x^xexp y^alpha into the polynomial, growing the order if alpha is longer.
  void add_term(const AlgNum& c, const Rat& xexp, std::vector<int> alpha);

  const FieldPtr& field() const { return field_; }
  /// n: the highest derivative index that may appear.
  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  std::vector<DiffMonomial> monomials() const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Max |alpha|; -1 for the zero polynomial.
  int degree() const;
  /// Least common denominator of the x exponents.
  Integer nu() const;
  /// min xexp, +inf for zero.
  ExtRat ord() const;
  /// Same polynomial with the order raised to n (extra y's absent).
  DiffPoly with_order(int n) const;

  DiffPoly partial_derivative(int j, int k = 1) const;
  DiffPoly homogeneous_part(int s) const;
  DiffPoly constant_part() const { return homogeneous_part(0); }
  /// G(y) = F(c x^mu + y).
  DiffPoly substitute_shift(const AlgNum& c, const Rat& mu) const;
  DiffPoly mapped(const Embedding& e) const;
  /// Coefficients moved into `field`: identity if equal, embedding of Q otherwise.
  DiffPoly over(const FieldPtr& field) const;
  DiffPoly scaled(const AlgNum& c) const;
  DiffPoly pow(int e) const;

  std::string str() const;

  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator-(const DiffPoly& a);
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend bool operator==(const DiffPoly& a, const DiffPoly& b);

 private:
  void check_compatible(const DiffPoly& o) const;
  FieldPtr field_;
  int order_;
  Terms terms_;
};

/// Order of a differential polynomial; +inf for zero.
inline ExtRat order_of(const DiffPoly& f) { return f.ord(); }

}  // namespace puiseux
