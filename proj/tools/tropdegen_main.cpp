#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "tropdegen/io.hpp"

using namespace tropdegen::cli;

namespace {

struct Flags {
  std::string config;
  std::string poly;
  std::string polytope;
  std::string out;
  std::string window;
  std::string rhos;
  std::string as;
  std::string alpha;
  std::string valuation;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::optional<int> degree;
  std::optional<int> phase_samples;
  std::optional<int> grid;
};

void add_flags(CLI::App& sub, Flags& f) {
  sub.add_option("--config", f.config, "JSON experiment config; flags override its fields");
  sub.add_option("--poly", f.poly, "polynomial or family document");
  sub.add_option("--out", f.out, "output directory");
  sub.add_option("--seed", f.seed, "64-bit seed");
  sub.add_option("--window", f.window, "square window lo,hi");
  sub.add_option("--samples", f.samples, "amoeba samples per run");
  sub.add_option("--rhos", f.rhos, "scaling factors r1,r2,... (decreasing)");
  sub.add_option("--as", f.as, "family parameters a1,a2,... (decreasing modulus)");
  sub.add_option("--alpha", f.alpha, "monomial valuation weights a1,a2,...");
  sub.add_option("--degree", f.degree, "degree of the dilated triangle for moment");
  sub.add_option("--polytope", f.polytope, "lattice polytope document for moment");
  sub.add_option("--valuation", f.valuation, "auto, trivial or t");
  sub.add_option("--phase-samples", f.phase_samples, "phase samples for polycircle");
  sub.add_option("--grid", f.grid, "complex discretization for distances");
}

ExperimentConfig build_config(ExperimentKind kind, const Flags& f) {
  ExperimentConfig c = f.config.empty() ? ExperimentConfig{} : load_config(f.config);
  c.kind = kind;
  if (!f.poly.empty()) c.poly_path = f.poly;
  if (!f.polytope.empty()) c.polytope_path = f.polytope;
  if (!f.out.empty()) c.out_dir = f.out;
  if (!f.window.empty()) c.window = parse_window(f.window);
  if (!f.rhos.empty()) c.rhos = parse_real_list(f.rhos);
  if (!f.as.empty()) c.as = parse_complex_list(f.as);
  if (!f.alpha.empty()) c.alpha = parse_real_list(f.alpha);
  if (!f.valuation.empty()) c.valuation = parse_valuation(f.valuation);
  if (f.seed) c.seed = *f.seed;
  if (f.samples) c.samples = *f.samples;
  if (f.degree) c.degree = *f.degree;
  if (f.phase_samples) c.phase_samples = *f.phase_samples;
  if (f.grid) c.grid = *f.grid;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Amoebae, tropical curves and their degenerations"};
  app.require_subcommand(1);
  Flags flags;
  const ExperimentKind kinds[] = {ExperimentKind::Trop,    ExperimentKind::Amoeba,     ExperimentKind::ConvergeA,
                                  ExperimentKind::FamilyB, ExperimentKind::Polycircle, ExperimentKind::Moment};
  const char* descriptions[] = {
      "corner locus of the tropicalization",
      "sample the amoeba",
      "scaled amoebae against the trivial-valuation tropical curve",
      "family fibers scaled by 1/log|a|^-1 against the t-adic tropical curve",
      "polycircle supremum against the monomial valuation",
      "moment-map compactification in the polytope",
  };
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(kinds); ++i) {
    subs.push_back(app.add_subcommand(std::string(kind_name(kinds[i])), descriptions[i]));
    add_flags(*subs.back(), flags);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  ExperimentKind kind = ExperimentKind::Trop;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) kind = kinds[i];
  }

  try {
    const CommandResult result = run_experiment(build_config(kind, flags));
    std::cout << result.summary;
    for (const auto& p : result.written) std::cout << "wrote " << p.string() << '\n';
    if (result.exit_code != kExitOk) std::cerr << "tropdegen " << kind_name(kind) << ": criterion not met\n";
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "tropdegen " << kind_name(kind) << ": " << e.what() << '\n';
    return kExitInput;
  }
}
