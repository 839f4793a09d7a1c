#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli/commands.hpp"
#include "support.hpp"

using namespace tropdegen;
using namespace tropdegen::cli;
namespace fs = std::filesystem;

namespace {

const fs::path kData = TROPDEGEN_DATA_DIR;
const fs::path kGolden = TROPDEGEN_GOLDEN_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("tropdegen_test_" + name);
  fs::remove_all(dir);
  return dir;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + TROPDEGEN_BIN + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Rounds every decimal number to 1e-6 so the comparison ignores last-digit noise.
std::string normalize_numbers(const std::string& text) {
  static const std::regex number(R"(-?\d+(\.\d+)?(e-?\d+)?)");
  std::string out;
  auto it = std::sregex_iterator(text.begin(), text.end(), number);
  std::size_t last = 0;
  for (; it != std::sregex_iterator(); ++it) {
    out += text.substr(last, it->position() - last);
    const double v = std::round(std::stod(it->str()) * 1e6) / 1e6;
    out += format_double(v == 0.0 ? 0.0 : v);
    last = it->position() + it->length();
  }
  return out + text.substr(last);
}

ExperimentConfig config(ExperimentKind kind, const std::string& poly, const std::string& out) {
  ExperimentConfig c;
  c.kind = kind;
  c.poly_path = kData / poly;
  c.out_dir = fresh_dir(out);
  c.samples = 4000;
  c.seed = 3;
  return c;
}

}  // namespace

TEST(CliParsing, Lists) {
  EXPECT_EQ(parse_real_list("0.2, 0.1,0.05"), (std::vector<double>{0.2, 0.1, 0.05}));
  EXPECT_EQ(parse_complex_list("0.5,0.2i,1-2i,-1+0.5i,i,-i,1e-3+1e-2i"),
            (std::vector<Complex>{{0.5, 0}, {0, 0.2}, {1, -2}, {-1, 0.5}, {0, 1}, {0, -1}, {1e-3, 1e-2}}));
  EXPECT_EQ(parse_window("-2,2"), (std::pair<double, double>{-2, 2}));
  EXPECT_THROW(parse_real_list("0.1,abc"), std::invalid_argument);
  EXPECT_THROW(parse_window("1"), std::invalid_argument);
  EXPECT_EQ(parse_kind("family-b"), ExperimentKind::FamilyB);
  EXPECT_THROW(parse_kind("plot"), std::invalid_argument);
  EXPECT_EQ(parse_valuation("t"), ValuationMode::TAdic);
}

TEST(CliParsing, Validation) {
  ExperimentConfig c;
  c.rhos = {0.1, 0.2};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.rhos = {0.2, 0.1};
  EXPECT_NO_THROW(c.validate());
  c.as = {0.5, Complex(0, 0.5)};
  EXPECT_THROW(c.validate(), std::invalid_argument);  // equal moduli
  c.as = {0.5, 0.0};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.as = {0.5, Complex(0, -0.2)};
  EXPECT_NO_THROW(c.validate());
  c.window = std::pair{1.0, -1.0};
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(CliParsing, ConfigFileResolvesRelativePaths) {
  const auto c = load_config(kData / "configs" / "converge_a_line.json");
  EXPECT_EQ(c.kind, ExperimentKind::ConvergeA);
  EXPECT_EQ(fs::weakly_canonical(c.poly_path), fs::weakly_canonical(kData / "line.json"));
  EXPECT_EQ(c.rhos, (std::vector<double>{0.2, 0.1, 0.05}));
  EXPECT_EQ(c.seed, 1u);
}

TEST(CliCommands, TropLine) {
  auto c = config(ExperimentKind::Trop, "line.json", "trop_line");
  const auto r = run_experiment(c);
  EXPECT_EQ(r.exit_code, kExitOk);
  const auto complex = parse_complex(slurp(c.out_dir / "corner_locus.json"));
  EXPECT_EQ(complex.vertices.size(), 1u);
  EXPECT_EQ(complex.rays.size(), 3u);
  EXPECT_TRUE(fs::exists(c.out_dir / "corner_locus.svg"));
  EXPECT_TRUE(fs::exists(c.out_dir / "corner_locus.csv"));
}

TEST(CliCommands, TropFamilyMatchesLibrary) {
  auto c = config(ExperimentKind::Trop, "two_lines_family.json", "trop_family");
  run_experiment(c);
  const auto written = parse_complex(slurp(c.out_dir / "corner_locus.json"));
  const auto expected = corner_locus_2d(t_valuation(tropdegen::testing::two_lines_family()));
  EXPECT_EQ(written.vertices, expected.vertices);
  EXPECT_EQ(written.rays.size(), expected.rays.size());
  EXPECT_EQ(written.segments.size(), expected.segments.size());
}

TEST(CliCommands, TropBinomialIsSingleLine) {
  auto c = config(ExperimentKind::Trop, "binomial.json", "trop_binomial");
  run_experiment(c);
  const auto complex = parse_complex(slurp(c.out_dir / "corner_locus.json"));
  EXPECT_EQ(complex.vertices.size(), 1u);
  EXPECT_EQ(complex.rays.size(), 2u);
  EXPECT_TRUE(complex.segments.empty());
}

TEST(CliCommands, TropMonomialIsEmpty) {
  EXPECT_THROW(run_experiment(config(ExperimentKind::Trop, "monomial.json", "trop_mono")), std::domain_error);
}

TEST(CliCommands, ConvergeALine) {
  auto c = config(ExperimentKind::ConvergeA, "line.json", "converge_a");
  c.rhos = {0.2, 0.1, 0.05};
  const auto r = run_experiment(c);
  EXPECT_EQ(r.exit_code, kExitOk) << r.summary;
  const std::string table = slurp(c.out_dir / "converge_a.csv");
  EXPECT_EQ(table.substr(0, table.find('\n')), "parameter,distance,directed_forward,directed_backward");
  for (const char* f : {"converge_a.svg", "converge_a_trop.csv", "converge_a_rho0.csv", "converge_a_rho2.csv"}) {
    EXPECT_TRUE(fs::exists(c.out_dir / f)) << f;
  }
}

TEST(CliCommands, ConvergeAReducibleSpecialization) {
  auto c = config(ExperimentKind::ConvergeA, "two_lines_family.json", "converge_a_reducible");
  c.rhos = {0.2, 0.1, 0.05};
  c.as = {1.0};
  EXPECT_EQ(run_experiment(c).exit_code, kExitOk);
}

TEST(CliCommands, ConvergeAMonomialFails) {
  auto c = config(ExperimentKind::ConvergeA, "monomial.json", "converge_a_mono");
  EXPECT_THROW(run_experiment(c), std::domain_error);
}

TEST(CliCommands, FamilyBTwoLines) {
  auto c = config(ExperimentKind::FamilyB, "two_lines_family.json", "family_b");
  c.as = {0.5, 0.2, 0.08};
  const auto r = run_experiment(c);
  EXPECT_EQ(r.exit_code, kExitOk) << r.summary;
  EXPECT_NE(r.summary.find("warning"), std::string::npos);  // |a| = 0.5 > e^-1
  for (const char* f : {"family_b.csv", "family_b_a0.svg", "family_b_a0.csv", "family_b_trop.svg", "family_b_trop.csv"}) {
    EXPECT_TRUE(fs::exists(c.out_dir / f)) << f;
  }
}

TEST(CliCommands, FamilyBRejectsUnitModulus) {
  auto c = config(ExperimentKind::FamilyB, "two_lines_family.json", "family_b_bad");
  c.as = {1.0};
  EXPECT_THROW(run_experiment(c), std::invalid_argument);
  c.as = {0.0};
  EXPECT_THROW(run_experiment(c), std::invalid_argument);
}

TEST(CliCommands, FamilyBConstantFamilyMatchesConvergeA) {
  auto b = config(ExperimentKind::FamilyB, "line.json", "family_b_const");
  b.as = {std::exp(-5.0), std::exp(-10.0), std::exp(-20.0)};
  const auto rb = run_experiment(b);
  auto a = config(ExperimentKind::ConvergeA, "line.json", "converge_a_const");
  a.rhos = {0.2, 0.1, 0.05};
  const auto ra = run_experiment(a);
  const auto col = [](const std::string& csv) {
    std::vector<double> out;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) out.push_back(std::stod(line.substr(line.find(',') + 1)));
    return out;
  };
  const auto db = col(slurp(b.out_dir / "family_b.csv"));
  const auto da = col(slurp(a.out_dir / "converge_a.csv"));
  ASSERT_EQ(db.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(db[i], da[i], 1e-9);
}

TEST(CliCommands, FamilyBPhaseOfAOnlyAddsNoise) {
  auto real = config(ExperimentKind::FamilyB, "two_lines_family.json", "family_b_real");
  real.as = {0.2, 0.08};
  real.samples = 20000;
  auto cplx = real;
  cplx.out_dir = fresh_dir("family_b_complex");
  cplx.as = {std::polar(0.2, 1.0), std::polar(0.08, -2.0)};
  run_experiment(real);
  run_experiment(cplx);
  const auto first = [](const std::string& csv) {
    std::vector<double> out;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) out.push_back(std::stod(line.substr(line.find(',') + 1)));
    return out;
  };
  const auto dr = first(slurp(real.out_dir / "family_b.csv"));
  const auto dc = first(slurp(cplx.out_dir / "family_b.csv"));
  for (std::size_t i = 0; i < dr.size(); ++i) EXPECT_NEAR(dr[i], dc[i], 0.25 * dr[i]);
}

TEST(CliCommands, Polycircle) {
  auto c = config(ExperimentKind::Polycircle, "line.json", "polycircle");
  const auto r = run_experiment(c);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(fs::exists(c.out_dir / "polycircle.csv"));
}

TEST(CliCommands, MomentFamily) {
  auto c = config(ExperimentKind::Moment, "two_lines_family.json", "moment");
  c.as = {0.5, 0.2, 0.08};
  const auto r = run_experiment(c);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.summary.find("barycentre=(0.6666666666666666, 0.6666666666666666)"), std::string::npos);
  for (int i = 0; i < 3; ++i) {
    EXPECT_TRUE(fs::exists(c.out_dir / ("moment_" + std::to_string(i) + ".svg")));
    EXPECT_TRUE(fs::exists(c.out_dir / ("moment_" + std::to_string(i) + ".csv")));
  }
  const auto compact = parse_cloud_csv(slurp(c.out_dir / "moment_0.csv"));
  const auto triangle = LatticePolytope::dilated_triangle(2);
  for (std::size_t i = 0; i < compact.size(); ++i) EXPECT_TRUE(triangle.contains(compact.point(i), 1e-12));
}

TEST(CliCommands, MomentRejectsSegment) {
  const fs::path dir = fresh_dir("moment_segment");
  fs::create_directories(dir);
  std::ofstream(dir / "segment.json") << R"({"lattice_points": [[0,0],[1,0],[2,0]]})";
  auto c = config(ExperimentKind::Moment, "line.json", "moment_segment_out");
  c.polytope_path = dir / "segment.json";
  EXPECT_THROW(run_experiment(c), ParseError);
  c.polytope_path.clear();
  c.degree = 1;
  c.rhos = {0.2};
  EXPECT_EQ(run_experiment(c).exit_code, kExitOk);
}

TEST(CliBinary, ExitCodes) {
  const fs::path out = fresh_dir("bin_exit");
  EXPECT_EQ(run_cli("trop --poly \"" + (kData / "line.json").string() + "\" --out \"" + out.string() + "\""), kExitOk);
  EXPECT_EQ(run_cli("trop --poly \"" + (kData / "monomial.json").string() + "\" --out \"" + out.string() + "\""),
            kExitInput);
  EXPECT_EQ(run_cli("trop --poly /nonexistent.json"), kExitInput);
  EXPECT_EQ(run_cli("bogus"), kExitUsage);
  EXPECT_EQ(run_cli("trop --no-such-flag"), kExitUsage);
  EXPECT_EQ(run_cli("converge-a --poly \"" + (kData / "line.json").string() + "\" --rhos 0.1,0.2"), kExitInput);
}

TEST(CliBinary, MalformedPolynomialReportsPosition) {
  const fs::path dir = fresh_dir("bin_malformed");
  fs::create_directories(dir);
  std::ofstream(dir / "bad.json") << "{\n  \"dim\": 2,\n  \"terms\": [,]\n}\n";
  const std::string cmd = std::string("\"") + TROPDEGEN_BIN + "\" trop --poly \"" + (dir / "bad.json").string() +
                          "\" --out \"" + dir.string() + "\" 2> \"" + (dir / "err.txt").string() + "\"";
  EXPECT_NE(std::system(cmd.c_str()), 0);
  EXPECT_NE(slurp(dir / "err.txt").find("line 3, column 13"), std::string::npos) << slurp(dir / "err.txt");
}

TEST(CliBinary, FlagsOverrideConfig) {
  const fs::path out = fresh_dir("bin_override");
  ASSERT_EQ(run_cli("converge-a --config \"" + (kData / "configs" / "converge_a_line.json").string() +
                    "\" --samples 2000 --rhos 0.2,0.1 --out \"" + out.string() + "\""),
            kExitOk);
  EXPECT_TRUE(fs::exists(out / "converge_a_rho1.csv"));
  EXPECT_FALSE(fs::exists(out / "converge_a_rho2.csv"));
  EXPECT_EQ(parse_cloud_csv(slurp(out / "converge_a_rho0.csv")).meta().seed, substream(1, 0)());
}

TEST(CliBinary, ConvergeAIsReproducible) {
  const fs::path a = fresh_dir("bin_repro_a");
  const fs::path b = fresh_dir("bin_repro_b");
  const std::string args = "converge-a --poly \"" + (kData / "line.json").string() +
                           "\" --rhos 0.2,0.1,0.05 --samples 3000 --seed 42 --out ";
  ASSERT_EQ(run_cli(args + "\"" + a.string() + "\""), kExitOk);
  ASSERT_EQ(run_cli(args + "\"" + b.string() + "\""), kExitOk);
  for (const auto& entry : fs::directory_iterator(a)) {
    if (entry.path().extension() != ".csv") continue;
    EXPECT_EQ(slurp(entry.path()), slurp(b / entry.path().filename())) << entry.path();
  }
}

TEST(CliGolden, TropLineSvg) {
  auto c = config(ExperimentKind::Trop, "line.json", "golden_trop");
  run_experiment(c);
  EXPECT_EQ(normalize_numbers(slurp(c.out_dir / "corner_locus.svg")), normalize_numbers(slurp(kGolden / "trop_line.svg")));
}
