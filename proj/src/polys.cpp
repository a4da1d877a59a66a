#include "hagedorn/polys.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "hagedorn/error.hpp"

namespace hagedorn {

namespace {

void check_axis(int axis, int dim) {
  if (axis < 0 || axis >= dim) {
    throw Error(ErrorCode::AxisOutOfRange, "axis " + std::to_string(axis) + " outside [0, " + std::to_string(dim) + ")");
  }
}

void check_order(const MultiIndex& k) {
  if (!k.is_valid()) throw Error(ErrorCode::InvalidArgument, "multi-index has negative entries");
  for (int v : k.entries()) {
    if (v > kMaxAxisOrder) throw Error(ErrorCode::InvalidArgument, "multi-index entry exceeds 32");
  }
  if (k.order() > kMaxTotalOrder) throw Error(ErrorCode::InvalidArgument, "total order exceeds 40");
}

double binomial(int n, int r) {
  if (r < 0 || r > n) return 0.0;
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0)));
}

// Embeds a univariate polynomial into d variables on the given axis.
Polynomial embed(const Polynomial& univariate, int dim, int axis) {
  Polynomial r(dim);
  for (const auto& [k, c] : univariate.terms()) {
    MultiIndex kk(dim);
    kk[axis] = k[0];
    r.add_term(kk, c);
  }
  return r;
}

}  // namespace

void require_symmetric(const CMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::AsymmetricM, "M must be a non-empty square matrix");
  }
  const double asym = (m - m.transpose()).norm();
  if (asym > tol) throw Error(ErrorCode::AsymmetricM, "M is not symmetric", asym);
}

const Polynomial& PolynomialTable::at(const MultiIndex& k) const {
  auto it = table_.find(k);
  if (it == table_.end()) throw Error(ErrorCode::InvalidArgument, "multi-index outside polynomial table");
  return it->second;
}

PolynomialTable ttrr_generate(const CMatrix& m, const MultiIndex& kmax) {
  require_symmetric(m);
  if (kmax.dim() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "kmax dimension differs from M");
  check_order(kmax);
  const int d = kmax.dim();

  // Recursion runs in extended precision; coefficients are rounded to double once.
  using Wide = std::complex<long double>;
  using WideTerms = std::map<MultiIndex, Wide, GradedLexLess>;
  std::map<MultiIndex, WideTerms, GradedLexLess> wide;
  for (const MultiIndex& k : MultiIndex::box(kmax)) {
    WideTerms q;
    if (k.order() == 0) {
      q.emplace(k, 1.0L);
      wide.emplace(k, std::move(q));
      continue;
    }
    // Lexicographically smallest predecessor k - e_j: first axis with k_j > 0.
    int j = 0;
    while (k[j] == 0) ++j;
    const MultiIndex prev = k - MultiIndex::unit(d, j);
    for (const auto& [a, c] : wide.at(prev)) q[a + MultiIndex::unit(d, j)] += 2.0L * c;
    for (int i = 0; i < d; ++i) {
      if (prev[i] == 0 || m(j, i) == Complex{}) continue;
      const Wide f = Wide(m(j, i).real(), m(j, i).imag()) * (2.0L * prev[i]);
      for (const auto& [a, c] : wide.at(prev - MultiIndex::unit(d, i))) q[a] -= f * c;
    }
    wide.emplace(k, std::move(q));
  }

  PolynomialTable t;
  t.m_ = m;
  t.kmax_ = kmax;
  for (const auto& [k, terms] : wide) {
    Polynomial q(d);
    for (const auto& [a, c] : terms) {
      q.add_term(a, Complex(static_cast<double>(c.real()), static_cast<double>(c.imag())));
    }
    t.table_.emplace(k, std::move(q));
  }
  return t;
}

Polynomial univariate_hermite(Complex lambda, int n) {
  if (n < 0 || n > 64) throw Error(ErrorCode::InvalidArgument, "Hermite degree must lie in [0, 64]");
  Polynomial prev(1);
  Polynomial cur = Polynomial::constant(1, 1.0);
  for (int j = 0; j < n; ++j) {
    Polynomial next = cur.times_variable(0) * 2.0 - prev * (2.0 * lambda * static_cast<double>(j));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial genfunc_coefficient(const CMatrix& m, const MultiIndex& k) {
  require_symmetric(m);
  if (k.dim() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "k dimension differs from M");
  check_order(k);
  const int d = k.dim();

  // -t^T M t as a polynomial in t.
  Polynomial quad(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) quad.add_term(MultiIndex::unit(d, i) + MultiIndex::unit(d, j), -m(i, j));
  }
  auto truncate = [&k](Polynomial p) {
    Polynomial r(p.dim());
    for (const auto& [b, c] : p.terms()) {
      if (b.leq(k)) r.add_term(b, c);
    }
    return r;
  };

  // exp(-t^T M t) truncated to monomials t^b with b <= k.
  Polynomial gauss = Polynomial::constant(d, 1.0);
  Polynomial power = Polynomial::constant(d, 1.0);
  for (int n = 1; 2 * n <= k.order(); ++n) {
    power = truncate(power * quad) * (1.0 / n);
    gauss += power;
  }

  // Multiply by exp(2 x^T t) = sum_a (2x)^a t^a / a! and read off t^k.
  const double log_kfact = log_factorial(k);
  Polynomial q(d);
  for (const auto& [b, c] : gauss.terms()) {
    const MultiIndex a = k - b;
    const double scale = std::exp(log_kfact - log_factorial(a)) * std::ldexp(1.0, a.order());
    q.add_term(a, c * scale);
  }
  return q;
}

Polynomial raise(const CMatrix& m, const Polynomial& q, int axis) {
  const int d = q.dim();
  if (m.rows() != d || m.cols() != d) throw Error(ErrorCode::DimensionMismatch, "M and polynomial dimensions differ");
  check_axis(axis, d);
  Polynomial r = q.times_variable(axis) * 2.0;
  for (int i = 0; i < d; ++i) {
    if (m(axis, i) != Complex{}) r -= q.derivative(i) * m(axis, i);
  }
  return r;
}

Polynomial gradient_lower(const Polynomial& q, const MultiIndex& k, int axis) {
  check_axis(axis, q.dim());
  if (k[axis] == 0) return Polynomial(q.dim());
  return q.derivative(axis) * (1.0 / (2.0 * k[axis]));
}

Polynomial eigen_apply_T(const CMatrix& m, const Polynomial& q, int axis) {
  const int d = q.dim();
  if (m.rows() != d || m.cols() != d) throw Error(ErrorCode::DimensionMismatch, "M and polynomial dimensions differ");
  check_axis(axis, d);
  const Polynomial dq = q.derivative(axis);
  Polynomial mgrad(d);
  for (int i = 0; i < d; ++i) {
    if (m(axis, i) != Complex{}) mgrad += q.derivative(i) * m(axis, i);
  }
  return q + dq.times_variable(axis) * 2.0 - mgrad.derivative(axis);
}

double eigen_residual(const CMatrix& m, const Polynomial& q, int axis, double lambda) {
  using Wide = std::complex<long double>;
  const int d = q.dim();
  if (m.rows() != d || m.cols() != d) throw Error(ErrorCode::DimensionMismatch, "M and polynomial dimensions differ");
  check_axis(axis, d);
  std::map<MultiIndex, Wide, GradedLexLess> acc;
  for (const auto& [b, c] : q.terms()) {
    const Wide wc(c.real(), c.imag());
    acc[b] += wc * static_cast<long double>(1.0 - lambda + 2.0 * b[axis]);
    for (int i = 0; i < d; ++i) {
      const long double factor = static_cast<long double>(b[i]) * (b[axis] - (i == axis ? 1 : 0));
      if (factor == 0.0L || m(axis, i) == Complex{}) continue;
      const MultiIndex a = b - MultiIndex::unit(d, i) - MultiIndex::unit(d, axis);
      acc[a] -= Wide(m(axis, i).real(), m(axis, i).imag()) * factor * wc;
    }
  }
  long double worst = 0.0L;
  for (const auto& [a, c] : acc) worst = std::max(worst, std::abs(c));
  return static_cast<double>(worst);
}

Polynomial laguerre(int n, int alpha) {
  if (n < 0 || n > 64 || alpha < 0 || alpha > 64) {
    throw Error(ErrorCode::InvalidArgument, "Laguerre degree and order must lie in [0, 64]");
  }
  Polynomial l(1);
  for (int j = 0; j <= n; ++j) {
    const double c = binomial(n + alpha, n - j) / factorial(j) * ((j % 2) ? -1.0 : 1.0);
    l.add_term(MultiIndex{j}, c);
  }
  return l;
}

Polynomial laguerre_reduce(const CMatrix& m, const MultiIndex& k, int n, int mm) {
  require_symmetric(m);
  const int d = k.dim();
  if (m.rows() != d) throw Error(ErrorCode::DimensionMismatch, "k dimension differs from M");
  check_axis(n, d);
  check_axis(mm, d);
  if (n == mm) throw Error(ErrorCode::AxisOutOfRange, "reduction axes must differ");
  check_order(k);
  const Complex lambda = m(n, mm);
  if (lambda == Complex{}) throw Error(ErrorCode::ZeroOffdiagonal, "M_nm is zero; polynomial factorises");

  CMatrix reduced = m;
  reduced(n, mm) = 0.0;
  reduced(mm, n) = 0.0;

  // Orient so that axis a carries the larger index.
  const int a = k[n] >= k[mm] ? n : mm;
  const int b = a == n ? mm : n;
  const int ka = k[a];
  const int kb = k[b];

  Polynomial v = Polynomial::constant(d, 1.0);
  for (int s = 0; s < ka - kb; ++s) v = raise(reduced, v, a);

  // L^{(ka-kb)}_{kb}(c_a c_b / (2 lambda)) applied to v.
  const Polynomial lag = laguerre(kb, ka - kb);
  Polynomial sum(d);
  Polynomial w = v;
  Complex scale = 1.0;
  for (int j = 0; j <= kb; ++j) {
    sum += w * (lag.coefficient(MultiIndex{j}) * scale);
    if (j == kb) break;
    w = raise(reduced, raise(reduced, w, b), a);
    scale /= 2.0 * lambda;
  }
  sum *= std::pow(-2.0 * lambda, kb) * factorial(kb);

  for (int i = 0; i < d; ++i) {
    if (i == n || i == mm) continue;
    for (int s = 0; s < k[i]; ++s) sum = raise(reduced, sum, i);
  }
  return sum;
}

Polynomial tensor_expand(const CMatrix& m, const MultiIndex& k) {
  require_symmetric(m);
  const int d = k.dim();
  if (m.rows() != d) throw Error(ErrorCode::DimensionMismatch, "k dimension differs from M");
  check_order(k);

  struct Pair {
    int alpha;
    int beta;
    Complex lambda;
    int bound;
  };
  std::vector<Pair> pairs;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      if (m(a, b) != Complex{}) pairs.push_back({a, b, m(a, b), std::min(k[a], k[b])});
    }
  }

  // hermite[i][r] = H^{M_ii}_r(x_i) embedded in d variables.
  std::vector<std::vector<Polynomial>> hermite(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    for (int r = 0; r <= k[i]; ++r) hermite[static_cast<std::size_t>(i)].push_back(embed(univariate_hermite(m(i, i), r), d, i));
  }

  const double log_kfact = log_factorial(k);
  Polynomial q(d);
  std::vector<int> l(pairs.size(), 0);
  while (true) {
    MultiIndex rest = k;
    Complex weight = 1.0;
    double log_lfact = 0.0;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      rest[pairs[j].alpha] -= l[j];
      rest[pairs[j].beta] -= l[j];
      weight *= std::pow(-2.0 * pairs[j].lambda, l[j]);
      log_lfact += std::lgamma(l[j] + 1.0);
    }
    if (rest.is_valid()) {
      Polynomial term = Polynomial::constant(d, weight * std::exp(log_kfact - log_lfact - log_factorial(rest)));
      for (int i = 0; i < d; ++i) term = term * hermite[static_cast<std::size_t>(i)][static_cast<std::size_t>(rest[i])];
      q += term;
    }
    // Odometer over l_j in [0, bound_j].
    std::size_t j = 0;
    while (j < pairs.size() && l[j] == pairs[j].bound) l[j++] = 0;
    if (j == pairs.size()) break;
    ++l[j];
  }
  return q;
}

}  // namespace hagedorn
