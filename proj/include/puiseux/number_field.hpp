#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "puiseux/qpoly.hpp"

namespace puiseux {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q[theta]/(minpoly). Q itself is represented with minpoly Z - 1 (theta = 1).
class NumberField {
 public:
  /// Validates that `minpoly` is monic and squarefree. Irreducibility is the caller's contract.
  static FieldPtr make(QPoly minpoly, std::string label = "t");
  static FieldPtr rational();

  const QPoly& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  bool is_rational() const { return degree() == 1; }
  const std::string& label() const { return label_; }

 private:
  NumberField(QPoly minpoly, std::string label) : minpoly_(std::move(minpoly)), label_(std::move(label)) {}
  QPoly minpoly_;
  std::string label_;
};

/// Two handles denote the same field when their minimal polynomials agree.
bool same_field(const FieldPtr& a, const FieldPtr& b);

/// An element of a number field in the power basis 1, theta, ..., theta^(deg-1).
class AlgNum {
 public:
  AlgNum() = default;
  AlgNum(FieldPtr field, std::vector<Rat> coords);
  AlgNum(FieldPtr field, const Rat& value);

  static AlgNum zero(const FieldPtr& field) { return AlgNum(field, Rat()); }
  static AlgNum one(const FieldPtr& field) { return AlgNum(field, Rat(1)); }
  static AlgNum generator(const FieldPtr& field);
  /// Reduces an arbitrary polynomial in theta modulo the minimal polynomial.
  static AlgNum from_poly(const FieldPtr& field, const QPoly& p);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coords() const { return coords_; }
  QPoly as_poly() const { return QPoly(coords_); }
  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; throws unless is_rational().
  Rat rational_value() const;

  AlgNum inverse() const;
  AlgNum pow(long e) const;
  std::string str() const;

  AlgNum& operator+=(const AlgNum& o);
  AlgNum& operator-=(const AlgNum& o);
  AlgNum& operator*=(const AlgNum& o);
  AlgNum& operator/=(const AlgNum& o) { return *this *= o.inverse(); }
  AlgNum& operator*=(const Rat& r);
  friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
  friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
  friend AlgNum operator*(AlgNum a, const AlgNum& b) { return a *= b; }
  friend AlgNum operator/(AlgNum a, const AlgNum& b) { return a /= b; }
  friend AlgNum operator*(AlgNum a, const Rat& r) { return a *= r; }
  friend AlgNum operator*(const Rat& r, AlgNum a) { return a *= r; }
  friend AlgNum operator-(const AlgNum& a) { return a * Rat(-1); }
  friend bool operator==(const AlgNum& a, const AlgNum& b);

 private:
  void check_same(const AlgNum& o) const;
  FieldPtr field_;
  std::vector<Rat> coords_;
};

/// Dense univariate polynomial with coefficients in a number field.
class KPoly {
 public:
  explicit KPoly(FieldPtr field) : field_(std::move(field)) {}
  KPoly(FieldPtr field, std::vector<AlgNum> coeffs);
  /// Coerces a rational polynomial into `field`.
  KPoly(FieldPtr field, const QPoly& p);

  static KPoly constant(const AlgNum& c);
  static KPoly monomial(const AlgNum& c, int degree);
  static KPoly variable(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<AlgNum>& coeffs() const { return c_; }
  AlgNum coeff(int i) const;
  const AlgNum& leading() const;

  AlgNum operator()(const AlgNum& x) const;
  KPoly derivative() const;
  KPoly monic() const;
  KPoly scaled(const AlgNum& s) const;
  KPoly compose(const KPoly& inner) const;
  /// p(C + a)
  KPoly shifted(const AlgNum& a) const;
  /// True when every coefficient is rational.
  bool is_rational() const;
  /// The rational polynomial; throws unless is_rational().
  QPoly to_qpoly() const;
  std::string str(std::string_view var = "C") const;

  KPoly& operator+=(const KPoly& o);
  KPoly& operator-=(const KPoly& o);
  friend KPoly operator+(KPoly a, const KPoly& b) { return a += b; }
  friend KPoly operator-(KPoly a, const KPoly& b) { return a -= b; }
  friend KPoly operator*(const KPoly& a, const KPoly& b);
  friend bool operator==(const KPoly& a, const KPoly& b);

 private:
  void trim();
  FieldPtr field_;
  std::vector<AlgNum> c_;
};

std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b);
KPoly operator/(const KPoly& a, const KPoly& b);
KPoly operator%(const KPoly& a, const KPoly& b);
KPoly pow(const KPoly& p, int e);
/// Monic gcd over the coefficient field.
KPoly gcd(const KPoly& a, const KPoly& b);

/// A field homomorphism K -> L fixed by the image of K's generator.
class Embedding {
 public:
  Embedding(FieldPtr source, AlgNum image_of_generator);
  static Embedding identity(const FieldPtr& field);

  const FieldPtr& source() const { return source_; }
  const FieldPtr& target() const { return image_.field(); }
  const AlgNum& image_of_generator() const { return image_; }

  AlgNum operator()(const AlgNum& a) const;
  KPoly operator()(const KPoly& p) const;
  /// this, then `next`.
  Embedding then(const Embedding& next) const;

 private:
  FieldPtr source_;
  AlgNum image_;
};

}  // namespace puiseux
