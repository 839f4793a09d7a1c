#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cli/svg.hpp"
#include "tropdegen/tropdegen.hpp"

namespace tropdegen::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::pair<double, double> kDefaultWindow{-2.0, 2.0};
// Scaled half-width sampled for compactified pictures; nu(w) is within
// e^{-8} of the boundary of the polytope beyond it.
constexpr double kMomentExtent = 8.0;
const std::vector<double> kDefaultRhos{0.2, 0.1, 0.05};
const std::vector<double> kDefaultPolycircleRhos{0.2, 0.1, 0.05, 0.02};
const std::vector<Complex> kDefaultAs{0.5, 0.2, 0.08};
const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b", "#e377c2"};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

class OutputDir {
 public:
  explicit OutputDir(const fs::path& dir) : dir_(dir) { fs::create_directories(dir_); }

  void write(const std::string& name, const std::string& content, CommandResult& result) const {
    const fs::path p = dir_ / name;
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << content;
    result.written.push_back(p);
  }

 private:
  fs::path dir_;
};

PolynomialDocument load_polynomial(const ExperimentConfig& config) {
  if (config.poly_path.empty()) throw std::invalid_argument("a polynomial file is required (--poly)");
  try {
    return parse_polynomial(read_file(config.poly_path));
  } catch (const ParseError& e) {
    throw std::runtime_error(config.poly_path.string() + ": " + e.what());
  }
}

bool is_family(const PolynomialDocument& doc) { return std::holds_alternative<TParamLaurentPoly>(doc); }

// A single complex polynomial: families are specialized at the first --as
// value, or at t = 1 when none is given.
ComplexLaurentPoly single_polynomial(const PolynomialDocument& doc, const ExperimentConfig& config) {
  if (const auto* f = std::get_if<ComplexLaurentPoly>(&doc)) return *f;
  const Complex a = config.as.empty() ? Complex(1.0, 0.0) : config.as.front();
  return specialize(std::get<TParamLaurentPoly>(doc), a);
}

TropicalPolynomial tropicalize(const PolynomialDocument& doc, ValuationMode mode) {
  const bool t_adic = mode == ValuationMode::TAdic || (mode == ValuationMode::Auto && is_family(doc));
  if (t_adic) {
    if (const auto* fam = std::get_if<TParamLaurentPoly>(&doc)) return t_valuation(*fam);
    return t_valuation(TParamLaurentPoly::constant_family(std::get<ComplexLaurentPoly>(doc)));
  }
  if (const auto* f = std::get_if<ComplexLaurentPoly>(&doc)) return trivial_tropicalize(*f);
  // Trivial valuation of a family: every nonzero coefficient has norm 1.
  const auto& fam = std::get<TParamLaurentPoly>(doc);
  std::vector<TropicalPolynomial::Term> terms;
  for (const auto& kv : fam.terms()) terms.push_back({kv.first, 0.0});
  return TropicalPolynomial(fam.dim(), std::move(terms));
}

Window square_window(const ExperimentConfig& config) {
  const auto [lo, hi] = config.window.value_or(kDefaultWindow);
  return Window::cube(2, lo, hi);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) { return substream(seed, index)(); }

void draw_complex(SvgCanvas& canvas, const CornerLocusComplex& complex, const Box2& box,
                  const std::string& color, double width = 2.0) {
  for (const auto& piece : clip_to_window(complex, box)) canvas.line(piece.a, piece.b, color, width);
}

void draw_cloud(SvgCanvas& canvas, const PointCloud& cloud, const std::string& color, double radius = 0.8) {
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto p = cloud.point(i);
    canvas.dot({p[0], p[1]}, radius, color, 0.5);
  }
}

std::string pieces_csv(const CornerLocusComplex& complex, const Box2& box) {
  std::string out = "x0,y0,x1,y1\n";
  for (const auto& piece : clip_to_window(complex, box)) {
    out += format_double(piece.a[0]) + ',' + format_double(piece.a[1]) + ',' + format_double(piece.b[0]) + ',' +
           format_double(piece.b[1]) + '\n';
  }
  return out;
}

std::string complex_to_text(const Complex& a) {
  if (a.imag() == 0.0) return format_double(a.real());
  return format_double(a.real()) + (a.imag() < 0 ? "" : "+") + format_double(a.imag()) + "i";
}

bool strictly_decreasing(const std::vector<DistanceRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].distance.distance < rows[i - 1].distance.distance)) return false;
  }
  return true;
}

std::string describe_rows(const std::vector<DistanceRow>& rows, const char* label) {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << label << '=' << format_double(r.parameter) << "  distance=" << format_double(r.distance.distance)
       << "  forward=" << format_double(r.distance.forward) << "  backward=" << format_double(r.distance.backward)
       << '\n';
  }
  return os.str();
}

void finish_monotone(CommandResult& result, const std::vector<DistanceRow>& rows) {
  if (strictly_decreasing(rows)) return;
  result.exit_code = kExitCriterion;
  result.summary += "FAILED: distances are not strictly decreasing\n";
}

int derived_degree(const PolynomialDocument& doc) {
  int degree = 0;
  auto visit = [&](const ExponentVector& m) {
    for (int e : m) {
      if (e < 0) throw std::invalid_argument("negative exponents: pass --degree or --polytope");
    }
    degree = std::max(degree, total_degree(m));
  };
  std::visit([&](const auto& p) { for (const auto& kv : p.terms()) visit(kv.first); }, doc);
  if (degree < 1) throw std::invalid_argument("constant polynomial: pass --degree or --polytope");
  return degree;
}

void draw_polytope(SvgCanvas& canvas, const LatticePolytope& polytope) {
  std::vector<Point2> outline;
  for (const auto& v : polytope.vertices()) outline.push_back({static_cast<double>(v[0]), static_cast<double>(v[1])});
  canvas.polyline(outline, "black", 1.5, true);
}

}  // namespace

// Config ---------------------------------------------------------------------

void ExperimentConfig::validate() const {
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    if (!(rhos[i] > 0.0)) throw std::invalid_argument("rho values must be positive");
    if (i > 0 && !(rhos[i] < rhos[i - 1])) throw std::invalid_argument("rho values must be strictly decreasing");
  }
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (as[i] == Complex(0.0, 0.0)) throw std::invalid_argument("a = 0 is not a fiber of the family");
    if (i > 0 && !(std::abs(as[i]) < std::abs(as[i - 1]))) {
      throw std::invalid_argument("a values must be strictly decreasing in modulus");
    }
  }
  for (double a : alpha) {
    if (!(a > 0.0)) throw std::invalid_argument("alpha weights must be positive");
  }
  if (window && !(window->first < window->second)) throw std::invalid_argument("window needs lo < hi");
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  if (phase_samples < 1) throw std::invalid_argument("phase samples must be at least 1");
  if (grid < 1) throw std::invalid_argument("grid must be at least 1");
  if (degree && *degree < 1) throw std::invalid_argument("degree must be positive");
}

ExperimentKind parse_kind(std::string_view name) {
  if (name == "trop") return ExperimentKind::Trop;
  if (name == "amoeba") return ExperimentKind::Amoeba;
  if (name == "converge-a") return ExperimentKind::ConvergeA;
  if (name == "family-b") return ExperimentKind::FamilyB;
  if (name == "polycircle") return ExperimentKind::Polycircle;
  if (name == "moment") return ExperimentKind::Moment;
  throw std::invalid_argument("unknown experiment kind '" + std::string(name) + "'");
}

std::string_view kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Trop: return "trop";
    case ExperimentKind::Amoeba: return "amoeba";
    case ExperimentKind::ConvergeA: return "converge-a";
    case ExperimentKind::FamilyB: return "family-b";
    case ExperimentKind::Polycircle: return "polycircle";
    case ExperimentKind::Moment: return "moment";
  }
  return "?";
}

ValuationMode parse_valuation(std::string_view name) {
  if (name == "auto") return ValuationMode::Auto;
  if (name == "trivial") return ValuationMode::Trivial;
  if (name == "t" || name == "t-adic") return ValuationMode::TAdic;
  throw std::invalid_argument("unknown valuation '" + std::string(name) + "' (auto, trivial, t)");
}

namespace {

double parse_double_token(std::string_view tok) {
  std::string s(tok);
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return x;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = text.find(',');
    std::string_view tok = text.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) out.push_back(tok);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

Complex parse_complex_token(std::string_view tok) {
  if (tok.back() != 'i') return {parse_double_token(tok), 0.0};
  tok.remove_suffix(1);
  // Split at the last sign that is not the leading one or part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = tok.size(); i-- > 1;) {
    if ((tok[i] == '+' || tok[i] == '-') && tok[i - 1] != 'e' && tok[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    if (tok.empty() || tok == "+") return {0.0, 1.0};
    if (tok == "-") return {0.0, -1.0};
    return {0.0, parse_double_token(tok)};
  }
  const std::string_view im = tok.substr(split);
  const double imag = im == "+" ? 1.0 : im == "-" ? -1.0 : parse_double_token(im);
  return {parse_double_token(tok.substr(0, split)), imag};
}

}  // namespace

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (auto tok : split_commas(text)) out.push_back(parse_double_token(tok));
  return out;
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  for (auto tok : split_commas(text)) out.push_back(parse_complex_token(tok));
  return out;
}

std::pair<double, double> parse_window(std::string_view text) {
  const auto v = parse_real_list(text);
  if (v.size() != 2) throw std::invalid_argument("window must be 'lo,hi'");
  return {v[0], v[1]};
}

ExperimentConfig load_config(const fs::path& path) {
  const std::string text = read_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error&) {
    throw ParseError(path.string() + ": malformed config");
  }
  const fs::path base = path.parent_path();
  auto resolve = [&](const std::string& p) { return fs::path(p).is_absolute() ? fs::path(p) : base / p; };

  ExperimentConfig c;
  try {
    if (doc.contains("kind")) c.kind = parse_kind(doc["kind"].get<std::string>());
    if (doc.contains("poly")) c.poly_path = resolve(doc["poly"].get<std::string>());
    if (doc.contains("polytope")) c.polytope_path = resolve(doc["polytope"].get<std::string>());
    if (doc.contains("out")) c.out_dir = resolve(doc["out"].get<std::string>());
    if (doc.contains("window")) {
      const auto w = doc["window"].get<std::vector<double>>();
      if (w.size() != 2) throw std::invalid_argument("config window must be [lo, hi]");
      c.window = std::pair{w[0], w[1]};
    }
    if (doc.contains("rhos")) c.rhos = doc["rhos"].get<std::vector<double>>();
    if (doc.contains("as")) {
      for (const json& a : doc["as"]) {
        if (a.is_number()) c.as.emplace_back(a.get<double>(), 0.0);
        else if (a.is_object()) c.as.emplace_back(a.at("re").get<double>(), a.value("im", 0.0));
        else c.as.push_back(parse_complex_token(a.get<std::string>()));
      }
    }
    if (doc.contains("alpha")) c.alpha = doc["alpha"].get<std::vector<double>>();
    if (doc.contains("degree")) c.degree = doc["degree"].get<int>();
    if (doc.contains("samples")) c.samples = doc["samples"].get<std::uint64_t>();
    if (doc.contains("seed")) c.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("phase_samples")) c.phase_samples = doc["phase_samples"].get<int>();
    if (doc.contains("grid")) c.grid = doc["grid"].get<int>();
    if (doc.contains("valuation")) c.valuation = parse_valuation(doc["valuation"].get<std::string>());
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return c;
}

// Commands -------------------------------------------------------------------

CommandResult cmd_trop(const ExperimentConfig& config) {
  const PolynomialDocument doc = load_polynomial(config);
  const TropicalPolynomial trop = tropicalize(doc, config.valuation);
  const CornerLocusComplex complex = corner_locus_2d(trop);
  const Box2 box = square_window(config).box2();

  CommandResult result;
  const OutputDir out(config.out_dir);
  out.write("corner_locus.json", write_complex(complex), result);
  out.write("corner_locus.csv", pieces_csv(complex, box), result);

  SvgCanvas canvas(box);
  canvas.axes();
  draw_complex(canvas, complex, box, "#d62728");
  for (const auto& v : complex.vertices) {
    if (box.contains(v)) canvas.dot(v, 3.0, "#d62728");
  }
  canvas.title("tropical curve");
  out.write("corner_locus.svg", canvas.str(), result);

  std::ostringstream os;
  os << "vertices=" << complex.vertices.size() << " segments=" << complex.segments.size()
     << " rays=" << complex.rays.size() << '\n';
  for (const auto& v : complex.vertices) os << "  vertex (" << format_double(v[0]) << ", " << format_double(v[1]) << ")\n";
  result.summary = os.str();
  return result;
}

CommandResult cmd_amoeba(const ExperimentConfig& config) {
  const PolynomialDocument doc = load_polynomial(config);
  const ComplexLaurentPoly f = single_polynomial(doc, config);
  const auto [lo, hi] = config.window.value_or(kDefaultWindow);
  const Window window = Window::cube(static_cast<std::size_t>(f.dim()), lo, hi);
  AmoebaSample sample = sample_amoeba_all_axes(f, config.samples, window, config.seed);
  sample.cloud.meta().source = config.poly_path.filename().string();

  CommandResult result;
  const OutputDir out(config.out_dir);
  out.write("amoeba.csv", write_cloud_csv(sample.cloud), result);
  if (f.dim() == 2) {
    const Box2 box = window.box2();
    SvgCanvas canvas(box);
    canvas.axes();
    draw_cloud(canvas, sample.cloud.restricted_to(window), "#1f77b4");
    canvas.title("amoeba");
    out.write("amoeba.svg", canvas.str(), result);
  }
  std::ostringstream os;
  os << "points=" << sample.cloud.size() << " skipped_samples=" << sample.diagnostics.skipped_samples
     << " untrusted_roots=" << sample.diagnostics.untrusted_roots
     << " residual_rejects=" << sample.diagnostics.residual_rejects << '\n';
  result.summary = os.str();
  return result;
}

CommandResult cmd_converge_a(const ExperimentConfig& config) {
  const PolynomialDocument doc = load_polynomial(config);
  const ComplexLaurentPoly f = single_polynomial(doc, config);
  if (f.dim() != 2) throw std::invalid_argument("converge-a compares planar curves");
  const CornerLocusComplex complex = corner_locus_2d(trivial_tropicalize(f));
  const Window window = square_window(config);
  const Box2 box = window.box2();
  const std::vector<double>& rhos = config.rhos.empty() ? kDefaultRhos : config.rhos;

  CommandResult result;
  const OutputDir out(config.out_dir);
  SvgCanvas canvas(box);
  canvas.axes();
  std::vector<DistanceRow> rows;
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    const double rho = rhos[i];
    AmoebaSample sample = sample_amoeba_all_axes(f, config.samples, window.scaled(1.0 / rho),
                                                 derive_seed(config.seed, i));
    sample.cloud.meta().source = config.poly_path.filename().string();
    const PointCloud scaled = scale_cloud(sample.cloud, rho);
    rows.push_back({rho, hausdorff_to_complex(scaled, complex, window, config.grid)});
    const PointCloud shown = scaled.restricted_to(window);
    out.write("converge_a_rho" + std::to_string(i) + ".csv", write_cloud_csv(shown), result);
    draw_cloud(canvas, shown, kPalette[i % std::size(kPalette)]);
  }
  draw_complex(canvas, complex, box, "#d62728");
  canvas.title("scaled amoebae vs tropical curve");
  out.write("converge_a_trop.csv", pieces_csv(complex, box), result);
  out.write("converge_a.csv", write_distance_table(rows), result);
  out.write("converge_a.svg", canvas.str(), result);

  result.summary = describe_rows(rows, "rho");
  if (rows.size() >= 3) {
    std::vector<double> r, d;
    for (const auto& row : rows) {
      r.push_back(row.parameter);
      d.push_back(row.distance.distance);
    }
    const RateFit fit = rate_fit(r, d);
    result.summary += "rate_fit slope=" + format_double(fit.slope) + " intercept=" + format_double(fit.intercept) + "\n";
  }
  finish_monotone(result, rows);
  return result;
}

CommandResult cmd_family_b(const ExperimentConfig& config) {
  const PolynomialDocument doc = load_polynomial(config);
  const TParamLaurentPoly family = is_family(doc)
                                       ? std::get<TParamLaurentPoly>(doc)
                                       : TParamLaurentPoly::constant_family(std::get<ComplexLaurentPoly>(doc));
  if (family.dim() != 2) throw std::invalid_argument("family-b compares planar curves");
  const CornerLocusComplex complex = corner_locus_2d(t_valuation(family));
  const Window window = square_window(config);
  const Box2 box = window.box2();
  const std::vector<Complex>& as = config.as.empty() ? kDefaultAs : config.as;

  CommandResult result;
  const OutputDir out(config.out_dir);
  std::vector<DistanceRow> rows;
  std::string warnings;
  for (std::size_t i = 0; i < as.size(); ++i) {
    const double modulus = std::abs(as[i]);
    if (!(modulus < 1.0)) throw std::invalid_argument("family-b needs 0 < |a| < 1");
    if (modulus > std::exp(-1.0)) {
      warnings += "warning: |a| = " + format_double(modulus) + " exceeds e^-1\n";
    }
    const double lambda = 1.0 / std::log(1.0 / modulus);
    AmoebaSample sample = sample_amoeba_all_axes(specialize(family, as[i]), config.samples,
                                                 window.scaled(1.0 / lambda), derive_seed(config.seed, i));
    sample.cloud.meta().source = config.poly_path.filename().string() + "@a=" + complex_to_text(as[i]);
    const PointCloud scaled = scale_cloud(sample.cloud, lambda);
    rows.push_back({modulus, hausdorff_to_complex(scaled, complex, window, config.grid)});

    const PointCloud shown = scaled.restricted_to(window);
    const std::string stem = "family_b_a" + std::to_string(i);
    out.write(stem + ".csv", write_cloud_csv(shown), result);
    SvgCanvas canvas(box);
    canvas.axes();
    draw_cloud(canvas, shown, "#1f77b4");
    canvas.title("a = " + complex_to_text(as[i]) + ", scaled by 1/log|a|^-1");
    out.write(stem + ".svg", canvas.str(), result);
  }
  SvgCanvas trop_canvas(box);
  trop_canvas.axes();
  draw_complex(trop_canvas, complex, box, "#d62728");
  trop_canvas.title("tropical curve over C((t))");
  out.write("family_b_trop.csv", pieces_csv(complex, box), result);
  out.write("family_b_trop.svg", trop_canvas.str(), result);
  out.write("family_b.csv", write_distance_table(rows), result);

  result.summary = warnings + describe_rows(rows, "|a|");
  finish_monotone(result, rows);
  return result;
}

CommandResult cmd_polycircle(const ExperimentConfig& config) {
  const PolynomialDocument doc = load_polynomial(config);
  const ComplexLaurentPoly f = single_polynomial(doc, config);
  std::vector<double> alpha = config.alpha;
  if (alpha.empty()) {
    alpha.push_back(1.0);
    for (int i = 1; i < f.dim(); ++i) alpha.push_back(std::sqrt(static_cast<double>(i + 1)));
  }
  const std::vector<double>& rhos = config.rhos.empty() ? kDefaultPolycircleRhos : config.rhos;
  const PolycircleReport report =
      polycircle_limit_report(f, MonomialValuation(alpha), rhos, config.phase_samples, config.seed);

  CommandResult result;
  const OutputDir out(config.out_dir);
  out.write("polycircle.csv", write_polycircle_csv(report), result);
  std::ostringstream os;
  for (const auto& r : report.rows) {
    os << "rho=" << format_double(r.rho) << "  sup=" << format_double(r.sup) << "  target=" << format_double(r.target)
       << "  abs_error=" << format_double(r.abs_error) << '\n';
  }
  result.summary = os.str();
  if (!report.errors_non_increasing()) {
    result.exit_code = kExitCriterion;
    result.summary += "FAILED: errors grow in the dominant-term regime\n";
  }
  return result;
}

CommandResult cmd_moment(const ExperimentConfig& config) {
  const PolynomialDocument doc = load_polynomial(config);
  const LatticePolytope polytope = [&] {
    if (!config.polytope_path.empty()) return parse_polytope(read_file(config.polytope_path));
    return LatticePolytope::dilated_triangle(config.degree.value_or(derived_degree(doc)));
  }();
  if (polytope.dim() != 2) throw std::invalid_argument("moment rendering requires a planar polytope");

  // Panels: one per a for families (scaled by 1/log|a|^-1), one per rho otherwise.
  struct Panel {
    std::string label;
    double scale;
    ComplexLaurentPoly poly;
  };
  std::vector<Panel> panels;
  if (is_family(doc)) {
    const auto& fam = std::get<TParamLaurentPoly>(doc);
    for (const Complex& a : config.as.empty() ? kDefaultAs : config.as) {
      if (!(std::abs(a) < 1.0)) throw std::invalid_argument("moment needs 0 < |a| < 1");
      panels.push_back({"a = " + complex_to_text(a), 1.0 / std::log(1.0 / std::abs(a)), specialize(fam, a)});
    }
  } else {
    const auto& f = std::get<ComplexLaurentPoly>(doc);
    for (double rho : config.rhos.empty() ? kDefaultRhos : config.rhos) {
      panels.push_back({"rho = " + format_double(rho), rho, f});
    }
  }
  const CornerLocusComplex complex = corner_locus_2d(tropicalize(doc, config.valuation));

  const auto& verts = polytope.vertices();
  Box2 frame{1e300, -1e300, 1e300, -1e300};
  for (const auto& v : verts) {
    frame.lo_x = std::min(frame.lo_x, v[0] - 0.1);
    frame.hi_x = std::max(frame.hi_x, v[0] + 0.1);
    frame.lo_y = std::min(frame.lo_y, v[1] - 0.1);
    frame.hi_y = std::max(frame.hi_y, v[1] + 0.1);
  }
  const Window extent = Window::cube(2, -kMomentExtent, kMomentExtent);
  const std::vector<double> origin{0.0, 0.0};
  const auto centre = trop_moment(polytope, origin);

  CommandResult result;
  const OutputDir out(config.out_dir);
  for (std::size_t i = 0; i < panels.size(); ++i) {
    AmoebaSample sample = sample_amoeba_all_axes(panels[i].poly, config.samples, extent.scaled(1.0 / panels[i].scale),
                                                 derive_seed(config.seed, i));
    const PointCloud compact = compactify_cloud(scale_cloud(sample.cloud, panels[i].scale), polytope);
    const std::string stem = "moment_" + std::to_string(i);
    out.write(stem + ".csv", write_cloud_csv(compact), result);
    SvgCanvas canvas(frame);
    draw_polytope(canvas, polytope);
    draw_cloud(canvas, compact, "#1f77b4");
    canvas.dot({centre[0], centre[1]}, 3.0, "black");
    canvas.title(panels[i].label);
    out.write(stem + ".svg", canvas.str(), result);
  }

  const Box2 box = extent.box2();
  const PointCloud trop_points = compactify_cloud(complex_cloud(complex, box, box.diagonal() / 2048.0), polytope);
  out.write("moment_trop.csv", write_cloud_csv(trop_points), result);
  SvgCanvas canvas(frame);
  draw_polytope(canvas, polytope);
  draw_cloud(canvas, trop_points, "#d62728", 1.0);
  canvas.dot({centre[0], centre[1]}, 3.0, "black");
  canvas.title("compactified tropical curve");
  out.write("moment_trop.svg", canvas.str(), result);

  result.summary = "panels=" + std::to_string(panels.size()) + " barycentre=(" + format_double(centre[0]) + ", " +
                   format_double(centre[1]) + ")\n";
  return result;
}

CommandResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  switch (config.kind) {
    case ExperimentKind::Trop: return cmd_trop(config);
    case ExperimentKind::Amoeba: return cmd_amoeba(config);
    case ExperimentKind::ConvergeA: return cmd_converge_a(config);
    case ExperimentKind::FamilyB: return cmd_family_b(config);
    case ExperimentKind::Polycircle: return cmd_polycircle(config);
    case ExperimentKind::Moment: return cmd_moment(config);
  }
  throw std::logic_error("unhandled experiment kind");
}

}  // namespace tropdegen::cli
