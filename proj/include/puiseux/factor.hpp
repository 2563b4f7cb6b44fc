#pragma once

#include <cstdint>
#include <vector>

#include "puiseux/number_field.hpp"

namespace puiseux {

struct QFactor {
  QPoly poly;  // monic, irreducible over Q
  int multiplicity;
};

struct QFactorization {
  Rat constant;
  std::vector<QFactor> factors;

  QPoly expand() const;
};

struct KFactor {
  KPoly poly;  // monic, irreducible over its field
  int multiplicity;
};

struct KFactorization {
  AlgNum constant;
  std::vector<KFactor> factors;

  KPoly expand() const;
};

/// Yun's algorithm: monic squarefree, pairwise coprime parts with multiplicities.
std::vector<QFactor> squarefree_decomposition(const QPoly& p);
std::vector<KFactor> squarefree_decomposition(const KPoly& p);

/// Irreducible factors over Q, sorted by (degree, coefficients). Throws on zero.
QFactorization factor_over_Q(const QPoly& p);

/// Irreducible factors over p's coefficient field (Trager's norm method).
/// Every result is checked to multiply back to the input.
KFactorization factor_over_field(const KPoly& p);

/// Norm_{K/Q} of a polynomial with coefficients in K.
QPoly norm(const KPoly& p);

struct PrimitiveElement {
  FieldPtr field;      // Q[theta_new]
  long gamma;          // theta_new = theta_old + gamma * root (over Q the root itself is used)
  AlgNum embed_old;    // theta_old expressed in the new field
  AlgNum embed_root;   // the adjoined root expressed in the new field

  Embedding embedding(const FieldPtr& old_field) const { return Embedding(old_field, embed_old); }
};

/// Adjoins a root of the monic irreducible h over K. Throws "not irreducible" otherwise.
PrimitiveElement primitive_element(const KPoly& h);

/// Rational roots, ascending. A rational root of p in K[mu] is a common root of all
/// coordinate polynomials. Throws on the zero polynomial.
std::vector<Rat> rational_roots(const KPoly& p);
std::vector<Rat> rational_roots(const QPoly& p);

/// Counters for the product-identity check run on every field factorization.
struct FactorAudit {
  std::uint64_t calls = 0;
  std::uint64_t failures = 0;
};
FactorAudit factor_audit();
void reset_factor_audit();

}  // namespace puiseux
