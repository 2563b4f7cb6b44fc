// puiseux solve <file|expr|->: Puiseux solutions of a differential polynomial equation.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "puiseux/error.hpp"
#include "puiseux/parser.hpp"
#include "puiseux/render.hpp"
#include "puiseux/report.hpp"

using namespace puiseux;

namespace {

enum Exit { kOk = 0, kInputError = 1, kInternalError = 2 };

std::string read_source(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(arg);
  if (in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Puiseux series solutions of differential polynomial equations"};
  app.require_subcommand(1);
  CLI::App* solve = app.add_subcommand("solve", "expand the solutions of F = 0");

  std::string input, max_exponent = "10", format = "text", polygon, out, verify_to;
  int max_level = 32, max_nodes = 10000;
  bool allow_negative = false;
  std::vector<std::string> params;
  solve->add_option("input", input, "file, expression, or - for stdin")->required();
  solve->add_option("--max-exponent", max_exponent, "largest exponent expanded (p/q)");
  solve->add_option("--max-level", max_level, "deepest tree level")->check(CLI::NonNegativeNumber);
  solve->add_option("--max-nodes", max_nodes, "largest tree size")->check(CLI::PositiveNumber);
  solve->add_flag("--allow-negative-inclinations", allow_negative, "admit edges with b < 0");
  solve->add_option("--param", params, "value of a free constant: name=p/q or name=root(poly)");
  solve->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
  solve->add_option("--polygon", polygon, "render the Newton polygon of F")->check(CLI::IsMember({"ascii", "svg"}));
  solve->add_option("--out", out, "write the polygon to this file");
  solve->add_option("--verify-to", verify_to, "check the residual up to this exponent (p/q)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    SolveOptions options;
    options.budget.max_exponent = Rat::parse(max_exponent);
    options.budget.max_level = max_level;
    options.budget.max_nodes = max_nodes;
    options.strict = !allow_negative;
    std::map<std::string, std::string> param_text;
    for (const auto& p : params) {
      auto eq = p.find('=');
      if (eq == std::string::npos || eq == 0) throw ParseError("--param expects name=value", 1, 1);
      options.params[p.substr(0, eq)] = parse_param_value(p.substr(eq + 1));
      param_text[p.substr(0, eq)] = p.substr(eq + 1);
    }
    ProblemSpec spec = make_spec(read_source(input), options);
    spec.param_text = param_text;
    if (!verify_to.empty()) spec.verify_to = ExtRat::parse(verify_to);

    SolutionReport report = run(spec);
    std::cout << (format == "json" ? to_json(report) : to_text(report));

    if (!polygon.empty()) {
      std::string drawing = render_polygon(build_polygon(spec.f, spec.options.strict),
                                           polygon == "svg" ? PolygonFormat::svg : PolygonFormat::ascii);
      if (out.empty()) {
        std::cout << (format == "json" ? "" : "\n") << drawing;
      } else {
        std::ofstream file(out);
        if (!file) throw MathError("cannot write " + out);
        file << drawing;
      }
    }
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}
