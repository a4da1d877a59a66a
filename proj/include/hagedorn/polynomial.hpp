#pragma once

#include <complex>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace hagedorn {

using Complex = std::complex<double>;

/// Multi-index k in N^d.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(int dim) : entries_(static_cast<std::size_t>(dim), 0) {}
  MultiIndex(std::initializer_list<int> entries) : entries_(entries) {}
  explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {}

  static MultiIndex unit(int dim, int axis);

  int dim() const noexcept { return static_cast<int>(entries_.size()); }
  int operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }
  int& operator[](int j) { return entries_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& entries() const noexcept { return entries_; }

  int order() const noexcept;  // |k|
  bool is_valid() const noexcept;  // all entries >= 0
  /// Componentwise k <= other.
  bool leq(const MultiIndex& other) const noexcept;

  MultiIndex operator+(const MultiIndex& o) const;
  MultiIndex operator-(const MultiIndex& o) const;
  bool operator==(const MultiIndex& o) const noexcept { return entries_ == o.entries_; }

  /// (k, l) in N^{d1 + d2}.
  static MultiIndex concat(const MultiIndex& a, const MultiIndex& b);

  /// All multi-indices j with 0 <= j <= bound, in graded-lexicographic order.
  static std::vector<MultiIndex> box(const MultiIndex& bound);
  /// All multi-indices of dimension d with |j| <= order, graded-lexicographic.
  static std::vector<MultiIndex> simplex(int dim, int order);

 private:
  std::vector<int> entries_;
};

/// Total degree first, then lexicographic on the entries.
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const noexcept;
};

double factorial(int n);
/// log(k!) = sum_j log(k_j!).
double log_factorial(const MultiIndex& k);

/// Sparse polynomial sum_k c_k x^k in d variables with complex coefficients.
/// Exact-zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<MultiIndex, Complex, GradedLexLess>;

  Polynomial() = default;
  explicit Polynomial(int dim) : dim_(dim) {}

  static Polynomial constant(int dim, Complex c);
  static Polynomial monomial(const MultiIndex& k, Complex c = 1.0);
  /// c * x_j
  static Polynomial variable(int dim, int axis, Complex c = 1.0);

  int dim() const noexcept { return dim_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Max |k| over stored terms; -1 for the zero polynomial.
  int degree() const noexcept;
  Complex coefficient(const MultiIndex& k) const;
  double max_abs_coefficient() const noexcept;

  /// Adds c to the coefficient of x^k, dropping it if the sum is exactly zero.
  void add_term(const MultiIndex& k, Complex c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(Complex c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Complex c) { return a *= c; }
  friend Polynomial operator*(Complex c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// x_j * p
  Polynomial times_variable(int axis) const;
  /// d p / d x_j
  Polynomial derivative(int axis) const;
  /// p(C x) for a dim x n matrix C; the result has n variables.
  Polynomial compose_linear(const Eigen::MatrixXcd& c) const;

  Complex evaluate(std::span<const Complex> x) const;
  Complex evaluate(const Eigen::VectorXcd& x) const;

 private:
  int dim_ = 0;
  Terms terms_;
};

/// max_k |a_k - b_k| over the union of supports.
double max_coefficient_difference(const Polynomial& a, const Polynomial& b);

/// Evaluates a fixed polynomial at many points. Coefficients and exponents are
/// flattened once and monomials are built from a per-point power table.
class PolynomialEvaluator {
 public:
  PolynomialEvaluator() = default;
  explicit PolynomialEvaluator(const Polynomial& p);

  int dim() const noexcept { return dim_; }
  Complex operator()(std::span<const Complex> x) const;

 private:
  int dim_ = 0;
  int max_power_ = 0;
  std::vector<int> exponents_;  // size() * dim_ entries
  std::vector<Complex> coefficients_;
};

}  // namespace hagedorn
