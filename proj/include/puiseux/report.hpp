#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "puiseux/solver.hpp"

namespace puiseux {

struct ProblemSpec {
  std::string source;
  DiffPoly f;
  SolveOptions options;
  std::map<std::string, std::string> param_text;  // as given, for the report
  std::optional<ExtRat> verify_to;
};

// Everything below is plain text so that the report round-trips through JSON unchanged.
struct ReportTerm {
  std::string exponent;
  std::vector<std::string> coords;  // power basis coordinates of the coefficient
  std::string coeff;                // the coefficient as a polynomial in t
  friend bool operator==(const ReportTerm&, const ReportTerm&) = default;
};

struct ReportSolution {
  std::string kind;
  int node = 0;
  std::string nu;
  std::vector<std::string> minpoly;  // coefficients of the field's minimal polynomial, low to high
  std::string minpoly_text;          // the same in t
  std::string factor;                // irreducible factor of H the last coefficient is a root of
  std::vector<ReportTerm> terms;
  std::string truncation;            // "+inf" for exact sums
  std::string certified;             // bound on the next exponent
  std::string residual;              // F at the known terms
  std::string verified_to;           // F vanishes below this
  std::string parameter;
  std::string mu_lo, mu_hi;
  bool mu_lo_closed = false;
  friend bool operator==(const ReportSolution&, const ReportSolution&) = default;
};

struct ReportViolation {
  int node = 0, level = 0, degree = 0;
  friend bool operator==(const ReportViolation&, const ReportViolation&) = default;
};

struct SolutionReport {
  std::string input;
  std::string max_exponent;
  int max_level = 0;
  int max_nodes = 0;
  bool strict = true;
  std::map<std::string, std::string> params;
  std::string verify_to;
  std::vector<ReportSolution> solutions;
  int node_count = 0;
  int tree_max_level = 0;
  std::map<std::string, int> node_status;
  int bound_d = 0;
  std::vector<ReportViolation> violations;
  friend bool operator==(const SolutionReport&, const SolutionReport&) = default;
};

ProblemSpec make_spec(std::string_view source, SolveOptions options = {});

/// Expands, verifies every solution against F and packages the outcome.
/// Throws InternalError when a verification fails.
SolutionReport run(const ProblemSpec& spec);
SolutionReport build_report(const ProblemSpec& spec, const SolveResult& result);

std::string to_text(const SolutionReport& r);
std::string to_json(const SolutionReport& r);
SolutionReport report_from_json(std::string_view text);

}  // namespace puiseux
