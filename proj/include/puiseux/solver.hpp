#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "puiseux/polygon.hpp"
#include "puiseux/series.hpp"

namespace puiseux {

enum class NodeStatus {
  expandable,  // not yet expanded, or expanded into sons
  leaf,        // y = 0 solves F_tau: the partial sum is an exact solution
  parametric,  // family with a free leading coefficient
  continuum,   // family with free coefficient and exponent (h identically zero)
  truncated,   // some sons fell outside the budget
  barren,      // no son and no solution
};

enum class SolutionKind { exact_leaf, truncated, parametric_family, continuum_family };

std::string to_string(NodeStatus s);
std::string to_string(SolutionKind k);

struct Budget {
  Rat max_exponent = 10;
  int max_level = 32;
  int max_nodes = 10000;
};

/// A concrete value for a free constant: a rational, or a root of a polynomial over Q.
struct ParamValue {
  std::optional<Rat> rational;
  QPoly minpoly;
};

struct SolveOptions {
  Budget budget;
  bool strict = true;
  std::map<std::string, ParamValue> params;
};

struct TreeNode {
  int id = 0;
  std::optional<int> parent;
  FieldPtr field;               // K_tau = Q[theta_tau]/(phi_tau)
  long gamma = 0;               // theta_tau = theta_parent + gamma c_tau
  AlgNum c;                     // c_tau
  ExtRat mu;                    // mu_tau = deg(tau)
  PuiseuxSeries partial;        // y_tau
  Integer nu = 1;               // nu(tau)
  DiffPoly shifted;             // F_tau(y) = F(y + y_tau)
  int level = 0;
  NodeStatus status = NodeStatus::expandable;
  std::optional<KPoly> factor;  // irreducible factor of H that c_tau is a root of
  std::string family;           // name of the free constant for family nodes
  ExtRat family_lo, family_hi;  // admissible exponents of a family
  bool family_lo_closed = false;
  std::vector<int> children;

  const QPoly& minpoly() const { return field->minpoly(); }
};

struct PuiseuxSolution {
  SolutionKind kind = SolutionKind::exact_leaf;
  int node = 0;
  Integer nu = 1;
  PuiseuxSeries series;     // the known terms; the family term is not included
  ExtRat certified;         // exact: +inf; truncated: bound on the next exponent
  std::optional<KPoly> factor;
  std::string parameter;    // free constant of a family
  ExtRat mu_lo, mu_hi;      // exponent range of a family (a point for parametric ones)
  bool mu_lo_closed = false;

  const FieldPtr& field() const { return series.field(); }
};

struct BoundViolation {
  int node = 0;
  int level = 0;
  int degree = 0;
};

struct BoundsReport {
  int d = 0;
  std::vector<BoundViolation> violations;
  bool ok() const { return violations.empty(); }
};

struct SolveResult {
  std::vector<TreeNode> tree;
  std::vector<PuiseuxSolution> solutions;
  BoundsReport bounds;
  int max_level = 0;
};

/// One admissible vertex direction: a rational root of h, or a continuum when h = 0.
struct VertexBranch {
  NewtonPoint vertex;
  bool continuum = false;
  Rat mu;                   // the root (parametric only)
  ExtRat lo, hi;            // admissible range (continuum only)
  bool lo_closed = false;
};

TreeNode init_root(const DiffPoly& f);

/// Edge sons of tau: one per irreducible factor other than C of each H_(F_tau, e) with
/// mu_e > deg(tau). A vanishing H yields a parametric family node instead. Ids are unset.
std::vector<TreeNode> edge_branches(const TreeNode& tau, bool strict = true);

/// Vertex directions of tau with exponent above deg(tau).
std::vector<VertexBranch> vertex_branches(const TreeNode& tau, bool strict = true);

/// The son of tau with leading term c x^mu for a chosen value of the free constant.
TreeNode materialize(const TreeNode& tau, const Rat& mu, const NewtonPoint& vertex, const ParamValue& value);

/// y = 0 solves F_tau and no edge or vertex direction above deg(tau) remains.
bool is_leaf(const TreeNode& tau, bool strict = true);

/// Largest exponent a next term of a solution extending psi can have: with r = ord F(psi)
/// and u_s the least u over the y-degree-s coefficients of F(psi + y), max_s (r - u_s) / s.
/// +inf when psi solves F exactly.
ExtRat certified_next_exponent(const DiffPoly& f, const PuiseuxSeries& psi);

SolveResult expand(const DiffPoly& f, const SolveOptions& options = {});

/// deg(phi_tau) <= d^level(tau) for every node.
BoundsReport degree_bound_check(const std::vector<TreeNode>& tree, int d);

}  // namespace puiseux
