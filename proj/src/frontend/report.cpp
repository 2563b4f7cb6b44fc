#include "puiseux/report.hpp"

#include <sstream>

#include "json.hpp"
#include "puiseux/error.hpp"
#include "puiseux/parser.hpp"

namespace puiseux {
namespace {

using json = nlohmann::ordered_json;

std::string coeff_text(const AlgNum& c) {
  if (c.is_rational()) return c.rational_value().str();
  return c.as_poly().str("t");
}

std::vector<std::string> rat_strings(const std::vector<Rat>& v) {
  std::vector<std::string> out;
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

// "x", "x^2", "x^(1/2)", "x^(-1)"
std::string x_power_text(const std::string& e) {
  if (e == "0") return "";
  if (e == "1") return "x";
  if (e.find('/') == std::string::npos && e[0] != '-') return "x^" + e;
  return "x^(" + e + ")";
}

bool is_compound(const std::string& c) { return c.find_first_of("+-", 1) != std::string::npos; }

std::string series_text(const std::vector<ReportTerm>& terms) {
  std::string out;
  for (const auto& t : terms) {
    std::string c = t.coeff;
    bool neg = !is_compound(c) && c[0] == '-';
    if (neg) c = c.substr(1);
    if (is_compound(c)) c = "(" + c + ")";
    std::string x = x_power_text(t.exponent);
    std::string body = x.empty() ? c : (c == "1" ? x : c + "*" + x);
    if (out.empty())
      out = neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

std::string range_text(const ReportSolution& s) {
  return std::string(s.mu_lo_closed ? "[" : "(") + s.mu_lo + ", " + s.mu_hi + (s.mu_hi == "+inf" ? ")" : "]");
}

}  // namespace

ProblemSpec make_spec(std::string_view source, SolveOptions options) {
  ProblemSpec spec;
  spec.source = std::string(source);
  spec.f = parse_diffpoly(source);
  spec.options = std::move(options);
  return spec;
}

SolutionReport build_report(const ProblemSpec& spec, const SolveResult& result) {
  SolutionReport r;
  r.input = serialize(spec.f);
  r.max_exponent = spec.options.budget.max_exponent.str();
  r.max_level = spec.options.budget.max_level;
  r.max_nodes = spec.options.budget.max_nodes;
  r.strict = spec.options.strict;
  r.params = spec.param_text;
  r.verify_to = spec.verify_to ? spec.verify_to->str() : "+inf";

  for (const auto& s : result.solutions) {
    ReportSolution out;
    out.kind = to_string(s.kind);
    out.node = s.node;
    out.nu = s.nu.get_str();
    out.minpoly = rat_strings(s.field()->minpoly().coeffs());
    out.minpoly_text = s.field()->minpoly().str("t");
    if (s.factor) out.factor = s.factor->str("C");
    for (const auto& [e, c] : s.series.terms()) out.terms.push_back({e.str(), rat_strings(c.coords()), coeff_text(c)});
    out.truncation = s.series.truncation().str();
    out.certified = s.certified.str();
    const bool family = s.kind == SolutionKind::parametric_family || s.kind == SolutionKind::continuum_family;
    if (family) {
      out.parameter = s.parameter;
      out.mu_lo = s.mu_lo.str();
      out.mu_hi = s.mu_hi.str();
      out.mu_lo_closed = s.mu_lo_closed;
    } else {
      // The oracle: F at the known terms vanishes as far as those terms determine it.
      PuiseuxSeries residual = evaluate_series(spec.f, s.series);
      ExtRat known = residual.truncation();
      ExtRat target = spec.verify_to ? std::min(*spec.verify_to, known) : known;
      if (!residual.truncated(target).is_zero()) throw InternalError("residual does not vanish at solution " + std::to_string(s.node));
      ExtRat last = s.series.is_zero() ? ExtRat::neg_inf() : ExtRat(s.series.terms().rbegin()->first);
      if (!(s.certified > last)) throw InternalError("certified bound does not exceed the last exponent");
      out.residual = residual.is_zero() && residual.is_exact() ? "0" : residual.str();
      out.verified_to = target.str();
    }
    r.solutions.push_back(std::move(out));
  }

  r.node_count = static_cast<int>(result.tree.size());
  r.tree_max_level = result.max_level;
  for (const auto& n : result.tree) ++r.node_status[to_string(n.status)];
  r.bound_d = result.bounds.d;
  for (const auto& v : result.bounds.violations) r.violations.push_back({v.node, v.level, v.degree});
  return r;
}

SolutionReport run(const ProblemSpec& spec) { return build_report(spec, expand(spec.f, spec.options)); }

std::string to_text(const SolutionReport& r) {
  std::ostringstream os;
  os << "F = " << r.input << "\n";
  os << "budget: max exponent " << r.max_exponent << ", max level " << r.max_level << ", max nodes " << r.max_nodes
     << (r.strict ? "" : ", negative inclinations allowed") << "\n";
  for (const auto& [k, v] : r.params) os << "param " << k << " = " << v << "\n";
  os << "\n" << r.solutions.size() << (r.solutions.size() == 1 ? " solution" : " solutions") << "\n";
  int i = 0;
  for (const auto& s : r.solutions) {
    os << "\n[" << ++i << "] " << s.kind << "  (node " << s.node << ", nu = " << s.nu << ")\n";
    if (s.minpoly.size() > 2) os << "    field: Q(t), " << s.minpoly_text << " = 0\n";
    std::string body = series_text(s.terms);
    if (s.kind == "parametric-family" || s.kind == "continuum-family") {
      std::string tail = s.kind == "parametric-family" ? s.parameter + "*" + x_power_text(s.mu_lo)
                                                       : s.parameter + "*x^mu";
      if (s.kind == "parametric-family" && s.mu_lo == "0") tail = s.parameter;
      os << "    y = " << (body.empty() ? "" : body + " + ") << tail << " + ...\n";
      os << "    " << s.parameter << " != 0 free";
      if (s.kind == "continuum-family") os << ", mu in " << range_text(s);
      os << "\n";
      continue;
    }
    os << "    y = " << (body.empty() ? "0" : body);
    if (s.truncation != "+inf") os << " + O(x^" << s.truncation << ")";
    os << "\n";
    if (!s.factor.empty()) os << "    last coefficient: root of " << s.factor << "\n";
    os << "    residual: " << s.residual << ", zero below x^" << s.verified_to << "\n";
    if (s.certified != "+inf") os << "    next exponent at most " << s.certified << "\n";
  }
  os << "\ntree: " << r.node_count << " nodes, max level " << r.tree_max_level;
  for (const auto& [k, v] : r.node_status) os << ", " << k << " " << v;
  os << "\ndegree bound d^level with d = " << r.bound_d << ": "
     << (r.violations.empty() ? "holds" : std::to_string(r.violations.size()) + " violations") << "\n";
  return os.str();
}

std::string to_json(const SolutionReport& r) {
  json j;
  j["input"] = r.input;
  j["options"] = {{"max_exponent", r.max_exponent}, {"max_level", r.max_level}, {"max_nodes", r.max_nodes},
                  {"strict", r.strict},             {"params", r.params},       {"verify_to", r.verify_to}};
  json sols = json::array();
  for (const auto& s : r.solutions) {
    json terms = json::array();
    for (const auto& t : s.terms) terms.push_back({{"exponent", t.exponent}, {"coeff", t.coeff}, {"coords", t.coords}});
    json js = {{"kind", s.kind},
               {"node", s.node},
               {"nu", s.nu},
               {"field", {{"minpoly", s.minpoly}, {"text", s.minpoly_text}}},
               {"factor", s.factor},
               {"terms", terms},
               {"truncation", s.truncation},
               {"certified", s.certified},
               {"residual", s.residual},
               {"verified_to", s.verified_to}};
    if (s.parameter.empty())
      js["family"] = nullptr;
    else
      js["family"] = {{"parameter", s.parameter}, {"mu_lo", s.mu_lo}, {"mu_hi", s.mu_hi}, {"mu_lo_closed", s.mu_lo_closed}};
    sols.push_back(js);
  }
  j["solutions"] = sols;
  j["tree"] = {{"nodes", r.node_count}, {"max_level", r.tree_max_level}, {"status", r.node_status}};
  json viol = json::array();
  for (const auto& v : r.violations) viol.push_back({{"node", v.node}, {"level", v.level}, {"degree", v.degree}});
  j["bounds"] = {{"d", r.bound_d}, {"ok", r.violations.empty()}, {"violations", viol}};
  return j.dump(2) + "\n";
}

SolutionReport report_from_json(std::string_view text) {
  SolutionReport r;
  json j;
  try {
    j = json::parse(text);
    r.input = j.at("input").get<std::string>();
    const json& o = j.at("options");
    r.max_exponent = o.at("max_exponent").get<std::string>();
    r.max_level = o.at("max_level").get<int>();
    r.max_nodes = o.at("max_nodes").get<int>();
    r.strict = o.at("strict").get<bool>();
    r.params = o.at("params").get<std::map<std::string, std::string>>();
    r.verify_to = o.at("verify_to").get<std::string>();
    for (const auto& js : j.at("solutions")) {
      ReportSolution s;
      s.kind = js.at("kind").get<std::string>();
      s.node = js.at("node").get<int>();
      s.nu = js.at("nu").get<std::string>();
      s.minpoly = js.at("field").at("minpoly").get<std::vector<std::string>>();
      s.minpoly_text = js.at("field").at("text").get<std::string>();
      s.factor = js.at("factor").get<std::string>();
      for (const auto& t : js.at("terms"))
        s.terms.push_back({t.at("exponent").get<std::string>(), t.at("coords").get<std::vector<std::string>>(),
                           t.at("coeff").get<std::string>()});
      s.truncation = js.at("truncation").get<std::string>();
      s.certified = js.at("certified").get<std::string>();
      s.residual = js.at("residual").get<std::string>();
      s.verified_to = js.at("verified_to").get<std::string>();
      const json& fam = js.at("family");
      if (!fam.is_null()) {
        s.parameter = fam.at("parameter").get<std::string>();
        s.mu_lo = fam.at("mu_lo").get<std::string>();
        s.mu_hi = fam.at("mu_hi").get<std::string>();
        s.mu_lo_closed = fam.at("mu_lo_closed").get<bool>();
      }
      r.solutions.push_back(std::move(s));
    }
    r.node_count = j.at("tree").at("nodes").get<int>();
    r.tree_max_level = j.at("tree").at("max_level").get<int>();
    r.node_status = j.at("tree").at("status").get<std::map<std::string, int>>();
    r.bound_d = j.at("bounds").at("d").get<int>();
    for (const auto& v : j.at("bounds").at("violations"))
      r.violations.push_back({v.at("node").get<int>(), v.at("level").get<int>(), v.at("degree").get<int>()});
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 1, 1);
  }
  return r;
}

}  // namespace puiseux
