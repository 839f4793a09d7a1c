#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tropdegen/converge.hpp"
#include "tropdegen/hybrid.hpp"
#include "tropdegen/point_cloud.hpp"
#include "tropdegen/poly.hpp"
#include "tropdegen/toric.hpp"
#include "tropdegen/tropical.hpp"

namespace tropdegen {

/// Malformed input document. `line` and `column` are 1-based and zero when
/// the problem is structural rather than lexical.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Shortest decimal that parses back to exactly `x`.
std::string format_double(double x);

// Polynomial exchange format:
//   {"dim": n,
//    "terms": [{"exponent": [m_1, ..., m_n],
//               "coeff": {"re": x, "im": y}
//                     or {"t_terms": [{"k": k, "re": x, "im": y}, ...]}}, ...]}
// A document with at least one t_terms coefficient is a family in t; plain
// coefficients inside a family are constant in t.

using PolynomialDocument = std::variant<ComplexLaurentPoly, TParamLaurentPoly>;

PolynomialDocument parse_polynomial(std::string_view text);
std::string write_polynomial(const ComplexLaurentPoly& f);
std::string write_polynomial(const TParamLaurentPoly& family);

/// {"vertices": [[x, y], ...],
///  "segments": [{"from": i, "to": j, "tie": [m, m']}, ...],
///  "rays": [{"vertex": i, "direction": [dx, dy], "tie": [m, m']}, ...]}
std::string write_complex(const CornerLocusComplex& complex);
CornerLocusComplex parse_complex(std::string_view text);

/// {"lattice_points": [[m_1, ..., m_n], ...]}
LatticePolytope parse_polytope(std::string_view text);

/// Header `# dim=n scaling=rho seed=s source=<id>`, then one point per line.
std::string write_cloud_csv(const PointCloud& cloud);
PointCloud parse_cloud_csv(std::string_view text);

struct DistanceRow {
  double parameter = 0.0;
  ComplexDistance distance;
};

/// parameter,distance,directed_forward,directed_backward
std::string write_distance_table(const std::vector<DistanceRow>& rows);

/// rho,sup,target,abs_error
std::string write_polycircle_csv(const PolycircleReport& report);

}  // namespace tropdegen
