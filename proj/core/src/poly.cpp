#include "tropdegen/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tropdegen {

int total_degree(const ExponentVector& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

double pairing(const ExponentVector& m, std::span<const double> w) {
  require_dim(w.size(), m.size(), "pairing");
  double s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * w[i];
  return s;
}

namespace {

Complex int_power(Complex z, int k) {
  const bool invert = k < 0;
  unsigned e = invert ? static_cast<unsigned>(-(k + 1)) + 1u : static_cast<unsigned>(k);
  Complex result = 1.0;
  Complex base = z;
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return invert ? 1.0 / result : result;
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

void require_nonzero(std::span<const Complex> z) {
  for (const Complex& zi : z) {
    if (zi == Complex(0.0, 0.0)) {
      throw std::domain_error("evaluation point has a zero coordinate");
    }
  }
}

ExponentVector add_exponents(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

}  // namespace

Complex eval_monomial(const ExponentVector& m, std::span<const Complex> z) {
  require_dim(z.size(), m.size(), "eval_monomial");
  Complex v = 1.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) v *= int_power(z[i], m[i]);
  }
  return v;
}

void require_dim(std::size_t got, std::size_t expected, const char* what) {
  if (got != expected) {
    std::ostringstream os;
    os << what << ": dimension mismatch (got " << got << ", expected " << expected << ")";
    throw std::invalid_argument(os.str());
  }
}

std::string to_string(const ExponentVector& m) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << ',';
    os << m[i];
  }
  os << ')';
  return os.str();
}

// ComplexLaurentPoly ---------------------------------------------------------

ComplexLaurentPoly::ComplexLaurentPoly(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("polynomial dimension must be at least 1");
}

ComplexLaurentPoly::ComplexLaurentPoly(
    int dim, const std::vector<std::pair<ExponentVector, Complex>>& terms)
    : ComplexLaurentPoly(dim) {
  for (const auto& [m, c] : terms) {
    require_dim(m.size(), static_cast<std::size_t>(dim_), "ComplexLaurentPoly");
    terms_[m] += c;
  }
  std::erase_if(terms_, [](const auto& kv) { return kv.second == Complex(0.0, 0.0); });
}

ComplexLaurentPoly ComplexLaurentPoly::constant(int dim, Complex value) {
  return ComplexLaurentPoly(dim, {{ExponentVector(static_cast<std::size_t>(dim), 0), value}});
}

ComplexLaurentPoly ComplexLaurentPoly::monomial(ExponentVector m, Complex coefficient) {
  const int dim = static_cast<int>(m.size());
  return ComplexLaurentPoly(dim, {{std::move(m), coefficient}});
}

Complex ComplexLaurentPoly::coefficient(const ExponentVector& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

ComplexLaurentPoly ComplexLaurentPoly::scaled(Complex factor) const {
  std::vector<std::pair<ExponentVector, Complex>> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.emplace_back(m, c * factor);
  return ComplexLaurentPoly(dim_, out);
}

ComplexLaurentPoly operator+(const ComplexLaurentPoly& f, const ComplexLaurentPoly& g) {
  require_dim(static_cast<std::size_t>(g.dim()), static_cast<std::size_t>(f.dim()), "add");
  std::vector<std::pair<ExponentVector, Complex>> all(f.terms().begin(), f.terms().end());
  all.insert(all.end(), g.terms().begin(), g.terms().end());
  return ComplexLaurentPoly(f.dim(), all);
}

Complex evaluate(const ComplexLaurentPoly& f, std::span<const Complex> z) {
  require_dim(z.size(), static_cast<std::size_t>(f.dim()), "evaluate");
  require_nonzero(z);
  CompensatedSum re;
  CompensatedSum im;
  for (const auto& [m, c] : f.terms()) {
    const Complex t = c * eval_monomial(m, z);
    re.add(t.real());
    im.add(t.imag());
  }
  return {re.value(), im.value()};
}

double term_magnitude_sum(const ComplexLaurentPoly& f, std::span<const Complex> z) {
  require_dim(z.size(), static_cast<std::size_t>(f.dim()), "term_magnitude_sum");
  double s = 0.0;
  for (const auto& [m, c] : f.terms()) s += std::abs(c) * std::abs(eval_monomial(m, z));
  return s;
}

ComplexLaurentPoly multiply(const ComplexLaurentPoly& f, const ComplexLaurentPoly& g) {
  require_dim(static_cast<std::size_t>(g.dim()), static_cast<std::size_t>(f.dim()), "multiply");
  std::vector<std::pair<ExponentVector, Complex>> products;
  products.reserve(f.size() * g.size());
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      products.emplace_back(add_exponents(mf, mg), cf * cg);
    }
  }
  return ComplexLaurentPoly(f.dim(), products);
}

// TParamLaurentPoly ----------------------------------------------------------

TParamLaurentPoly::TParamLaurentPoly(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("polynomial dimension must be at least 1");
}

TParamLaurentPoly::TParamLaurentPoly(
    int dim, const std::vector<std::pair<ExponentVector, std::vector<TTerm>>>& terms)
    : TParamLaurentPoly(dim) {
  for (const auto& [m, tterms] : terms) {
    require_dim(m.size(), static_cast<std::size_t>(dim_), "TParamLaurentPoly");
    for (const TTerm& tt : tterms) insert(m, tt.t_exponent, tt.coefficient);
  }
}

void TParamLaurentPoly::insert(const ExponentVector& m, int k, Complex c) {
  auto& inner = terms_[m];
  inner[k] += c;
  if (inner[k] == Complex(0.0, 0.0)) inner.erase(k);
  if (inner.empty()) terms_.erase(m);
}

TParamLaurentPoly TParamLaurentPoly::constant_family(const ComplexLaurentPoly& f) {
  TParamLaurentPoly out(f.dim());
  for (const auto& [m, c] : f.terms()) out.insert(m, 0, c);
  return out;
}

TParamLaurentPoly operator+(const TParamLaurentPoly& f, const TParamLaurentPoly& g) {
  require_dim(static_cast<std::size_t>(g.dim()), static_cast<std::size_t>(f.dim()), "add");
  TParamLaurentPoly out = f;
  for (const auto& [m, inner] : g.terms()) {
    for (const auto& [k, c] : inner) out.insert(m, k, c);
  }
  return out;
}

TParamLaurentPoly multiply(const TParamLaurentPoly& f, const TParamLaurentPoly& g) {
  require_dim(static_cast<std::size_t>(g.dim()), static_cast<std::size_t>(f.dim()), "multiply");
  std::vector<std::pair<ExponentVector, std::vector<TParamLaurentPoly::TTerm>>> products;
  for (const auto& [mf, inner_f] : f.terms()) {
    for (const auto& [mg, inner_g] : g.terms()) {
      std::vector<TParamLaurentPoly::TTerm> tterms;
      tterms.reserve(inner_f.size() * inner_g.size());
      for (const auto& [kf, cf] : inner_f) {
        for (const auto& [kg, cg] : inner_g) tterms.push_back({kf + kg, cf * cg});
      }
      products.emplace_back(add_exponents(mf, mg), std::move(tterms));
    }
  }
  return TParamLaurentPoly(f.dim(), products);
}

ComplexLaurentPoly specialize(const TParamLaurentPoly& family, Complex a) {
  if (a == Complex(0.0, 0.0)) {
    throw std::domain_error("cannot specialize a Laurent family at t = 0");
  }
  std::vector<std::pair<ExponentVector, Complex>> terms;
  terms.reserve(family.size());
  for (const auto& [m, inner] : family.terms()) {
    Complex value = 0.0;
    for (const auto& [k, c] : inner) value += c * int_power(a, k);
    terms.emplace_back(m, value);
  }
  return ComplexLaurentPoly(family.dim(), terms);
}

TropicalPolynomial t_valuation(const TParamLaurentPoly& family) {
  if (family.is_zero()) throw std::domain_error("t_valuation of the zero polynomial");
  std::vector<TropicalPolynomial::Term> terms;
  terms.reserve(family.size());
  for (const auto& [m, inner] : family.terms()) {
    // inner is a non-empty ordered map, so its first key is the t-order.
    terms.push_back({m, static_cast<double>(inner.begin()->first)});
  }
  return TropicalPolynomial(family.dim(), std::move(terms));
}

TropicalPolynomial trivial_tropicalize(const ComplexLaurentPoly& f) {
  if (f.is_zero()) throw std::domain_error("trivial_tropicalize of the zero polynomial");
  std::vector<TropicalPolynomial::Term> terms;
  terms.reserve(f.size());
  for (const auto& kv : f.terms()) terms.push_back({kv.first, 0.0});
  return TropicalPolynomial(f.dim(), std::move(terms));
}

}  // namespace tropdegen
