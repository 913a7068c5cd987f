#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tristate/commands.hpp"
#include "tristate/error.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw tristate::Error(tristate::ErrorCode::InvalidInput, path + ": cannot open");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace tristate;
  CLI::App app{"Topological phases of three-state real Hamiltonian loops near a triple degeneracy"};
  app.require_subcommand(1);

  std::string input_path;
  bool want_text = false;
  bool want_json = false;
  int steps = 0;
  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("--input", input_path, "input JSON document (default: stdin)");
    auto* j = sub->add_flag("--json", want_json, "machine-readable output (default)");
    sub->add_flag("--text", want_text, "aligned human-readable output")->excludes(j);
  };

  bool with_oracle = false, with_nearest = false;
  auto* phase = app.add_subcommand("phase", "classify a perturbation pair");
  add_common(phase, true);
  phase->add_flag("--oracle", with_oracle, "also run eigenvector continuation");
  phase->add_flag("--nearest", with_nearest, "also search the nearest degenerate point");
  phase->add_option("--steps", steps, "continuation grid size")->check(CLI::Range(64, 1 << 24));

  auto* oracle = app.add_subcommand("oracle", "eigenvector continuation phases");
  add_common(oracle, true);
  oracle->add_option("--steps", steps, "continuation grid size")->check(CLI::Range(64, 1 << 24));

  std::string out_path;
  auto* diagram = app.add_subcommand("diagram", "write the triangle/ellipse construction as SVG");
  diagram->add_option("--input", input_path, "input JSON document (default: stdin)");
  diagram->add_option("--out", out_path, "SVG output path (default: stdout)");

  auto* nearest = app.add_subcommand("nearest", "closest degenerate point to G");
  add_common(nearest, true);

  ScanOptions scan_opts;
  auto* scan = app.add_subcommand("scan", "classifier versus continuation on random frames");
  add_common(scan, false);
  scan->add_option("--samples", scan_opts.samples, "number of random frames");
  scan->add_option("--seed", scan_opts.seed, "random seed");
  scan->add_option("--gap-floor", scan_opts.gap_floor, "skip samples whose minimum gap is below this");
  scan->add_option("--steps", steps, "continuation grid size")->check(CLI::Range(64, 1 << 24));

  auto* lauber = app.add_subcommand("lauber", "built-in microwave-cavity example");
  add_common(lauber, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help is reported through the same path and exits 0.
    return app.exit(e) == 0 ? exit_code::kOk : exit_code::kInputError;
  }
  const Format format = want_text ? Format::Text : Format::Json;

  try {
    if (*scan) {
      if (steps) scan_opts.oracle.steps = steps;
      return cmd_scan(scan_opts, format, std::cout);
    }
    if (*lauber) return cmd_lauber(format, std::cout);

    InputDocument in;
    try {
      in = parse_input_text(slurp(input_path));
    } catch (const Error& e) {
      return report_input_error(e, format, std::cout);
    }
    if (steps) in.oracle.steps = steps;

    if (*phase) return cmd_phase(in, PhaseFlags{with_oracle, with_nearest, format}, std::cout);
    if (*oracle) return cmd_oracle(in, format, std::cout);
    if (*nearest) return cmd_nearest(in, format, std::cout);
    if (*diagram) {
      if (out_path.empty()) return cmd_diagram(in, std::cout, std::cerr);
      std::ostringstream svg;
      const int rc = cmd_diagram(in, svg, std::cerr);
      if (rc == exit_code::kOk) {
        std::ofstream f(out_path);
        if (!f) {
          std::cerr << out_path << ": cannot write\n";
          return exit_code::kInputError;
        }
        f << svg.str();
      }
      return rc;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code::kInputError;
  }
  return exit_code::kOk;
}
