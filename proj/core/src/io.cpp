#include "tropdegen/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace tropdegen {

using nlohmann::json;

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? what
                                   : what + " (line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte offset of the failure; turn it into line:column.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON document", line, column);
  }
}

template <class T>
T field(const json& node, const char* key, const std::string& where) {
  if (!node.is_object() || !node.contains(key)) {
    throw ParseError(where + ": missing field '" + key + "'");
  }
  try {
    return node.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(where + ": field '" + key + "' has the wrong type");
  }
}

ExponentVector exponent_from(const json& node, std::size_t dim, const std::string& where) {
  ExponentVector m;
  const auto integral = [](const json& e) { return e.is_number_integer(); };
  if (!node.is_array() || !std::all_of(node.begin(), node.end(), integral)) {
    throw ParseError(where + ": exponent must be an array of integers");
  }
  try {
    m = node.get<ExponentVector>();
  } catch (const json::exception&) {
    throw ParseError(where + ": exponent must be an array of integers");
  }
  if (m.size() != dim) throw ParseError(where + ": exponent length differs from dim");
  return m;
}

json complex_json(Complex c) { return json{{"re", c.real()}, {"im", c.imag()}}; }

}  // namespace

PolynomialDocument parse_polynomial(std::string_view text) {
  const json doc = parse_json(text);
  const int dim = field<int>(doc, "dim", "polynomial");
  if (dim < 1) throw ParseError("polynomial: dim must be at least 1");
  const json terms = field<json>(doc, "terms", "polynomial");
  if (!terms.is_array()) throw ParseError("polynomial: 'terms' must be an array");

  bool family = false;
  for (const json& t : terms) {
    if (t.is_object() && t.contains("coeff") && t["coeff"].is_object() && t["coeff"].contains("t_terms")) {
      family = true;
    }
  }

  std::vector<std::pair<ExponentVector, Complex>> plain;
  std::vector<std::pair<ExponentVector, std::vector<TParamLaurentPoly::TTerm>>> tparam;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "term " + std::to_string(i);
    const json& t = terms[i];
    const ExponentVector m = exponent_from(field<json>(t, "exponent", where), static_cast<std::size_t>(dim), where);
    const json coeff = field<json>(t, "coeff", where);
    if (coeff.is_object() && coeff.contains("t_terms")) {
      const json tt = coeff["t_terms"];
      if (!tt.is_array()) throw ParseError(where + ": 't_terms' must be an array");
      std::vector<TParamLaurentPoly::TTerm> inner;
      for (const json& e : tt) {
        inner.push_back({field<int>(e, "k", where), {field<double>(e, "re", where), field<double>(e, "im", where)}});
      }
      tparam.emplace_back(m, std::move(inner));
    } else {
      const Complex c(field<double>(coeff, "re", where), field<double>(coeff, "im", where));
      if (family) {
        tparam.push_back({m, {{0, c}}});
      } else {
        plain.emplace_back(m, c);
      }
    }
  }
  if (family) return TParamLaurentPoly(dim, tparam);
  return ComplexLaurentPoly(dim, plain);
}

std::string write_polynomial(const ComplexLaurentPoly& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back({{"exponent", m}, {"coeff", complex_json(c)}});
  return json{{"dim", f.dim()}, {"terms", terms}}.dump(2) + "\n";
}

std::string write_polynomial(const TParamLaurentPoly& family) {
  json terms = json::array();
  for (const auto& [m, inner] : family.terms()) {
    json tt = json::array();
    for (const auto& [k, c] : inner) tt.push_back({{"k", k}, {"re", c.real()}, {"im", c.imag()}});
    terms.push_back({{"exponent", m}, {"coeff", {{"t_terms", tt}}}});
  }
  return json{{"dim", family.dim()}, {"terms", terms}}.dump(2) + "\n";
}

std::string write_complex(const CornerLocusComplex& complex) {
  json vertices = json::array();
  for (const auto& v : complex.vertices) vertices.push_back({v[0], v[1]});
  json segments = json::array();
  for (const auto& s : complex.segments) {
    segments.push_back({{"from", s.from}, {"to", s.to}, {"tie", {s.tie.first, s.tie.second}}});
  }
  json rays = json::array();
  for (const auto& r : complex.rays) {
    rays.push_back({{"vertex", r.vertex},
                    {"direction", {r.direction[0], r.direction[1]}},
                    {"tie", {r.tie.first, r.tie.second}}});
  }
  return json{{"vertices", vertices}, {"segments", segments}, {"rays", rays}}.dump(2) + "\n";
}

CornerLocusComplex parse_complex(std::string_view text) {
  const json doc = parse_json(text);
  CornerLocusComplex out;
  try {
    for (const json& v : doc.at("vertices")) out.vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
    for (const json& s : doc.at("segments")) {
      out.segments.push_back({s.at("from").get<std::size_t>(), s.at("to").get<std::size_t>(),
                              {s.at("tie").at(0).get<ExponentVector>(), s.at("tie").at(1).get<ExponentVector>()}});
    }
    for (const json& r : doc.at("rays")) {
      out.rays.push_back({r.at("vertex").get<std::size_t>(),
                          {r.at("direction").at(0).get<int>(), r.at("direction").at(1).get<int>()},
                          {r.at("tie").at(0).get<ExponentVector>(), r.at("tie").at(1).get<ExponentVector>()}});
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("complex document: ") + e.what());
  }
  for (const auto& s : out.segments) {
    if (s.from >= out.vertices.size() || s.to >= out.vertices.size()) {
      throw ParseError("complex document: segment refers to a missing vertex");
    }
  }
  for (const auto& r : out.rays) {
    if (r.vertex >= out.vertices.size()) throw ParseError("complex document: ray refers to a missing vertex");
  }
  return out;
}

LatticePolytope parse_polytope(std::string_view text) {
  const json doc = parse_json(text);
  const json pts = field<json>(doc, "lattice_points", "polytope");
  std::vector<ExponentVector> points;
  try {
    for (const json& p : pts) points.push_back(p.get<ExponentVector>());
  } catch (const json::exception&) {
    throw ParseError("polytope: lattice points must be integer arrays");
  }
  try {
    return LatticePolytope(std::move(points));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("polytope: ") + e.what());
  }
}

std::string write_cloud_csv(const PointCloud& cloud) {
  std::string out = "# dim=" + std::to_string(cloud.dim()) + " scaling=" + format_double(cloud.meta().scaling) +
                    " seed=" + std::to_string(cloud.meta().seed) + " source=" + cloud.meta().source + "\n";
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto p = cloud.point(i);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out += ',';
      out += format_double(p[k]);
    }
    out += '\n';
  }
  return out;
}

PointCloud parse_cloud_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0) {
    throw ParseError("cloud CSV: missing '# dim=...' header", 1, 1);
  }
  std::size_t dim = 0;
  CloudMeta meta;
  std::istringstream header(line.substr(2));
  std::string token;
  while (header >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw ParseError("cloud CSV: bad header token '" + token + "'", 1, 1);
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    try {
      if (key == "dim") dim = std::stoul(value);
      else if (key == "scaling") meta.scaling = std::stod(value);
      else if (key == "seed") meta.seed = std::stoull(value);
      else if (key == "source") meta.source = value;
    } catch (const std::exception&) {
      throw ParseError("cloud CSV: bad value for '" + key + "'", 1, 1);
    }
  }
  if (dim == 0) throw ParseError("cloud CSV: header lacks dim", 1, 1);
  PointCloud cloud(dim, meta);
  std::vector<double> p;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    p.clear();
    const char* cur = line.data();
    const char* end = line.data() + line.size();
    while (cur < end) {
      double x = 0.0;
      const auto [ptr, ec] = std::from_chars(cur, end, x);
      if (ec != std::errc()) {
        throw ParseError("cloud CSV: bad number", lineno, static_cast<std::size_t>(cur - line.data()) + 1);
      }
      p.push_back(x);
      cur = ptr;
      if (cur < end) {
        if (*cur != ',') throw ParseError("cloud CSV: expected ','", lineno, static_cast<std::size_t>(cur - line.data()) + 1);
        ++cur;
      }
    }
    if (p.size() != dim) throw ParseError("cloud CSV: wrong number of coordinates", lineno, 1);
    cloud.push_back(p);
  }
  return cloud;
}

std::string write_distance_table(const std::vector<DistanceRow>& rows) {
  std::string out = "parameter,distance,directed_forward,directed_backward\n";
  for (const auto& r : rows) {
    out += format_double(r.parameter) + ',' + format_double(r.distance.distance) + ',' +
           format_double(r.distance.forward) + ',' + format_double(r.distance.backward) + '\n';
  }
  return out;
}

std::string write_polycircle_csv(const PolycircleReport& report) {
  std::string out = "rho,sup,target,abs_error\n";
  for (const auto& r : report.rows) {
    out += format_double(r.rho) + ',' + format_double(r.sup) + ',' + format_double(r.target) + ',' +
           format_double(r.abs_error) + '\n';
  }
  return out;
}

}  // namespace tropdegen
