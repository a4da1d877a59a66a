#include "hagedorn/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hagedorn/error.hpp"

namespace hagedorn {

MultiIndex MultiIndex::unit(int dim, int axis) {
  MultiIndex e(dim);
  e[axis] = 1;
  return e;
}

int MultiIndex::order() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool MultiIndex::is_valid() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v >= 0; });
}

bool MultiIndex::leq(const MultiIndex& other) const noexcept {
  if (other.dim() != dim()) return false;
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (entries_[j] > other.entries_[j]) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  if (o.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "multi-index dimensions differ");
  MultiIndex r(*this);
  for (int j = 0; j < dim(); ++j) r[j] += o[j];
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  if (o.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "multi-index dimensions differ");
  MultiIndex r(*this);
  for (int j = 0; j < dim(); ++j) r[j] -= o[j];
  return r;
}

MultiIndex MultiIndex::concat(const MultiIndex& a, const MultiIndex& b) {
  std::vector<int> e = a.entries_;
  e.insert(e.end(), b.entries_.begin(), b.entries_.end());
  return MultiIndex(std::move(e));
}

std::vector<MultiIndex> MultiIndex::box(const MultiIndex& bound) {
  std::vector<MultiIndex> out;
  MultiIndex k(bound.dim());
  while (true) {
    out.push_back(k);
    int j = bound.dim() - 1;
    while (j >= 0 && k[j] == bound[j]) {
      k[j] = 0;
      --j;
    }
    if (j < 0) break;
    ++k[j];
  }
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

std::vector<MultiIndex> MultiIndex::simplex(int dim, int order) {
  MultiIndex bound(dim);
  for (int j = 0; j < dim; ++j) bound[j] = order;
  std::vector<MultiIndex> all = box(bound);
  std::erase_if(all, [order](const MultiIndex& k) { return k.order() > order; });
  return all;
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const noexcept {
  const int oa = a.order();
  const int ob = b.order();
  if (oa != ob) return oa < ob;
  return a.entries() < b.entries();
}

double factorial(int n) { return std::tgamma(static_cast<double>(n) + 1.0); }

double log_factorial(const MultiIndex& k) {
  double s = 0.0;
  for (int v : k.entries()) s += std::lgamma(static_cast<double>(v) + 1.0);
  return s;
}

Polynomial Polynomial::constant(int dim, Complex c) {
  Polynomial p(dim);
  p.add_term(MultiIndex(dim), c);
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& k, Complex c) {
  Polynomial p(k.dim());
  p.add_term(k, c);
  return p;
}

Polynomial Polynomial::variable(int dim, int axis, Complex c) {
  return monomial(MultiIndex::unit(dim, axis), c);
}

int Polynomial::degree() const noexcept {
  // Graded order puts the highest total degree last.
  return terms_.empty() ? -1 : terms_.rbegin()->first.order();
}

Complex Polynomial::coefficient(const MultiIndex& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Complex{} : it->second;
}

double Polynomial::max_abs_coefficient() const noexcept {
  double m = 0.0;
  for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

void Polynomial::add_term(const MultiIndex& k, Complex c) {
  if (k.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "monomial dimension differs from polynomial");
  if (c == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "polynomial dimensions differ");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "polynomial dimensions differ");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(Complex c) {
  if (c == Complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  std::erase_if(terms_, [](const auto& kv) { return kv.second == Complex{}; });
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::DimensionMismatch, "polynomial dimensions differ");
  Polynomial r(a.dim_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
  }
  return r;
}

Polynomial Polynomial::times_variable(int axis) const {
  if (axis < 0 || axis >= dim_) throw Error(ErrorCode::AxisOutOfRange, "axis " + std::to_string(axis));
  Polynomial r(dim_);
  for (const auto& [k, c] : terms_) {
    MultiIndex kk = k;
    ++kk[axis];
    r.terms_.emplace(std::move(kk), c);
  }
  return r;
}

Polynomial Polynomial::derivative(int axis) const {
  if (axis < 0 || axis >= dim_) throw Error(ErrorCode::AxisOutOfRange, "axis " + std::to_string(axis));
  Polynomial r(dim_);
  for (const auto& [k, c] : terms_) {
    if (k[axis] == 0) continue;
    MultiIndex kk = k;
    --kk[axis];
    r.add_term(kk, c * static_cast<double>(k[axis]));
  }
  return r;
}

Polynomial Polynomial::compose_linear(const Eigen::MatrixXcd& c) const {
  if (c.rows() != dim_) throw Error(ErrorCode::DimensionMismatch, "substitution matrix rows must equal dim");
  const int n = static_cast<int>(c.cols());
  // powers[j][p] = (sum_i C_ji x_i)^p
  std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(dim_));
  for (int j = 0; j < dim_; ++j) {
    Polynomial lin(n);
    for (int i = 0; i < n; ++i) lin.add_term(MultiIndex::unit(n, i), c(j, i));
    auto& pj = powers[static_cast<std::size_t>(j)];
    pj.push_back(constant(n, 1.0));
    for (int p = 1; p <= std::max(0, degree()); ++p) pj.push_back(pj.back() * lin);
  }
  Polynomial r(n);
  for (const auto& [k, coef] : terms_) {
    Polynomial term = constant(n, coef);
    for (int j = 0; j < dim_; ++j) {
      if (k[j] > 0) term = term * powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(k[j])];
    }
    r += term;
  }
  return r;
}

Complex Polynomial::evaluate(std::span<const Complex> x) const {
  if (static_cast<int>(x.size()) != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong length");
  }
  return PolynomialEvaluator(*this)(x);
}

Complex Polynomial::evaluate(const Eigen::VectorXcd& x) const {
  return evaluate(std::span<const Complex>(x.data(), static_cast<std::size_t>(x.size())));
}

double max_coefficient_difference(const Polynomial& a, const Polynomial& b) {
  double m = 0.0;
  for (const auto& [k, c] : a.terms()) m = std::max(m, std::abs(c - b.coefficient(k)));
  for (const auto& [k, c] : b.terms()) {
    if (!a.terms().contains(k)) m = std::max(m, std::abs(c));
  }
  return m;
}

PolynomialEvaluator::PolynomialEvaluator(const Polynomial& p) : dim_(p.dim()) {
  exponents_.reserve(p.size() * static_cast<std::size_t>(dim_));
  coefficients_.reserve(p.size());
  for (const auto& [k, c] : p.terms()) {
    for (int j = 0; j < dim_; ++j) {
      exponents_.push_back(k[j]);
      max_power_ = std::max(max_power_, k[j]);
    }
    coefficients_.push_back(c);
  }
}

Complex PolynomialEvaluator::operator()(std::span<const Complex> x) const {
  if (static_cast<int>(x.size()) != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong length");
  }
  const std::size_t stride = static_cast<std::size_t>(max_power_) + 1;
  std::vector<Complex> pw(static_cast<std::size_t>(dim_) * stride);
  for (int j = 0; j < dim_; ++j) {
    Complex* row = pw.data() + static_cast<std::size_t>(j) * stride;
    row[0] = 1.0;
    for (std::size_t p = 1; p < stride; ++p) row[p] = row[p - 1] * x[static_cast<std::size_t>(j)];
  }
  Complex sum = 0.0;
  const int* e = exponents_.data();
  for (const Complex& c : coefficients_) {
    Complex term = c;
    for (int j = 0; j < dim_; ++j, ++e) {
      if (*e) term *= pw[static_cast<std::size_t>(j) * stride + static_cast<std::size_t>(*e)];
    }
    sum += term;
  }
  return sum;
}

}  // namespace hagedorn
