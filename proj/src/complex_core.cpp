#include "lensmatch/complex_core.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace lensmatch {

Complex principal_power(Complex w, double beta) {
  if (!(beta > 0.0)) {
    throw std::invalid_argument("principal_power: beta must be positive");
  }
  if (w == Complex{0.0, 0.0}) {
    return {0.0, 0.0};
  }
  double r = std::abs(w);
  double theta = std::atan2(w.imag(), w.real());
  // atan2 yields -pi for (negative real, -0 imaginary); the convention here
  // is theta in (-pi, pi].
  if (theta <= -std::numbers::pi) {
    theta = std::numbers::pi;
  }
  return std::polar(std::pow(r, beta), beta * theta);
}

// ---------------------------------------------------------------------------

Matrix2 Matrix2::adjoint() const {
  return {std::conj(m11), std::conj(m21), std::conj(m12), std::conj(m22)};
}

Matrix2 Matrix2::operator*(const Matrix2& rhs) const {
  return {m11 * rhs.m11 + m12 * rhs.m21, m11 * rhs.m12 + m12 * rhs.m22,
          m21 * rhs.m11 + m22 * rhs.m21, m21 * rhs.m12 + m22 * rhs.m22};
}

Matrix2 Matrix2::operator+(const Matrix2& rhs) const {
  return {m11 + rhs.m11, m12 + rhs.m12, m21 + rhs.m21, m22 + rhs.m22};
}

Matrix2 Matrix2::operator-(const Matrix2& rhs) const {
  return {m11 - rhs.m11, m12 - rhs.m12, m21 - rhs.m21, m22 - rhs.m22};
}

Matrix2 Matrix2::scaled(Complex c) const {
  return {c * m11, c * m12, c * m21, c * m22};
}

Matrix2 Matrix2::identity() { return {1.0, 0.0, 0.0, 1.0}; }

double sigma_max_2x2(const Matrix2& m) {
  const double t = std::norm(m.m11) + std::norm(m.m12) + std::norm(m.m21) +
                   std::norm(m.m22);
  const double d = std::norm(m.m11 * m.m22 - m.m12 * m.m21);
  const double disc = std::max(t * t - 4.0 * d, 0.0);
  return std::sqrt(0.5 * (t + std::sqrt(disc)));
}

// ---------------------------------------------------------------------------

RealPolynomial::RealPolynomial(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) {
    coeffs_.pop_back();
  }
}

double RealPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<size_t>(k)];
}

double RealPolynomial::coeff_scale() const {
  double s = 0.0;
  for (double c : coeffs_) s = std::max(s, std::abs(c));
  return s;
}

Complex RealPolynomial::eval(Complex w) const {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * w + *it;
  }
  return acc;
}

double RealPolynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

RealPolynomial RealPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return RealPolynomial{};
  std::vector<double> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = static_cast<double>(k) * coeffs_[k];
  }
  return RealPolynomial(std::move(d));
}

RealPolynomial RealPolynomial::operator+(const RealPolynomial& rhs) const {
  std::vector<double> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
  for (size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) out[k] += rhs.coeffs_[k];
  return RealPolynomial(std::move(out));
}

RealPolynomial RealPolynomial::operator-(const RealPolynomial& rhs) const {
  std::vector<double> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
  for (size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) out[k] -= rhs.coeffs_[k];
  return RealPolynomial(std::move(out));
}

RealPolynomial RealPolynomial::operator*(const RealPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return RealPolynomial{};
  std::vector<double> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) {
      out[i + k] += coeffs_[i] * rhs.coeffs_[k];
    }
  }
  return RealPolynomial(std::move(out));
}

RealPolynomial RealPolynomial::scaled(double c) const {
  std::vector<double> out = coeffs_;
  for (double& v : out) v *= c;
  return RealPolynomial(std::move(out));
}

std::pair<RealPolynomial, RealPolynomial> RealPolynomial::divmod(
    const RealPolynomial& dividend, const RealPolynomial& divisor) {
  if (divisor.is_zero()) {
    throw std::invalid_argument("divmod: division by the zero polynomial");
  }
  std::vector<double> rem = dividend.coeffs_;
  const int dq = dividend.degree() - divisor.degree();
  if (dq < 0) return {RealPolynomial{}, dividend};
  std::vector<double> quot(static_cast<size_t>(dq) + 1, 0.0);
  const double lead = divisor.coeffs_.back();
  for (int k = dq; k >= 0; --k) {
    const size_t top = static_cast<size_t>(k + divisor.degree());
    if (top >= rem.size()) continue;
    const double c = rem[top] / lead;
    quot[static_cast<size_t>(k)] = c;
    for (size_t i = 0; i < divisor.coeffs_.size(); ++i) {
      rem[static_cast<size_t>(k) + i] -= c * divisor.coeffs_[i];
    }
  }
  rem.resize(static_cast<size_t>(std::max(divisor.degree(), 0)));
  return {RealPolynomial(std::move(quot)), RealPolynomial(std::move(rem))};
}

std::vector<Complex> polynomial_roots(const RealPolynomial& p) {
  if (p.degree() < 1) {
    throw std::invalid_argument("polynomial_roots: degree must be >= 1");
  }
  std::vector<double> c = p.coeffs();
  std::vector<Complex> roots;

  // Zeros at the origin come out exactly.
  size_t lead_zeros = 0;
  while (lead_zeros < c.size() && c[lead_zeros] == 0.0) ++lead_zeros;
  roots.assign(lead_zeros, Complex{0.0, 0.0});
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lead_zeros));

  const int deg = static_cast<int>(c.size()) - 1;
  if (deg >= 1) {
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) {
      companion(i, deg - 1) = -c[static_cast<size_t>(i)] / c.back();
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
    const RealPolynomial reduced(c);
    const RealPolynomial dreduced = reduced.derivative();
    for (int i = 0; i < deg; ++i) {
      Complex r{solver.eigenvalues()(i).real(), solver.eigenvalues()(i).imag()};
      // One Newton step; skipped near-critical points where it would blow up.
      const Complex dp = dreduced.eval(r);
      if (std::abs(dp) > 1e-8 * std::max(1.0, reduced.coeff_scale())) {
        r -= reduced.eval(r) / dp;
      }
      roots.push_back(r);
    }
  }
  return roots;
}

// ---------------------------------------------------------------------------

namespace {

// Removes (w - root) or, for a conjugate pair, the real quadratic factor.
RealPolynomial deflate(const RealPolynomial& p, Complex root) {
  const auto& c = p.coeffs();
  if (std::abs(root.imag()) < 1e-10) {
    std::vector<double> q(c.size() - 1, 0.0);
    double carry = c.back();
    for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
      q[static_cast<size_t>(k)] = carry;
      carry = c[static_cast<size_t>(k)] + carry * root.real();
    }
    return RealPolynomial(std::move(q));
  }
  // w^2 - 2 Re(root) w + |root|^2
  const RealPolynomial quad({std::norm(root), -2.0 * root.real(), 1.0});
  return RealPolynomial::divmod(p, quad).first;
}

}  // namespace

RationalFunction::RationalFunction() : num_(), den_(RealPolynomial::one()) {}

RationalFunction::RationalFunction(RealPolynomial num, RealPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw std::invalid_argument("RationalFunction: zero denominator");
  }
  if (num_.is_zero() || num_.degree() < 1 || den_.degree() < 1) return;

  // Cancel common roots within 1e-10; conjugate pairs are deflated together.
  auto nroots = polynomial_roots(num_);
  auto droots = polynomial_roots(den_);
  std::vector<bool> used(droots.size(), false);
  for (const Complex& nr : nroots) {
    if (nr.imag() < -1e-10) continue;  // pair handled from its upper member
    for (size_t k = 0; k < droots.size(); ++k) {
      if (used[k]) continue;
      if (std::abs(nr - droots[k]) < 1e-10) {
        used[k] = true;
        num_ = deflate(num_, nr);
        den_ = deflate(den_, droots[k]);
        break;
      }
    }
  }
}

RationalFunction RationalFunction::polynomial(RealPolynomial p) {
  RationalFunction f;
  f.num_ = std::move(p);
  return f;
}

RationalFunction RationalFunction::constant(double c) {
  return polynomial(RealPolynomial({c}));
}

Complex rational_eval(const RationalFunction& f, Complex w) {
  const Complex d = f.den().eval(w);
  if (std::abs(d) <= 1e-14) {
    throw MathError("rational_eval: pole within 1e-14 of evaluation point");
  }
  return f.num().eval(w) / d;
}

bool stable_in_unit_disc(const RationalFunction& f, double margin) {
  if (f.den().degree() < 1) return true;
  for (const Complex& r : polynomial_roots(f.den())) {
    if (std::abs(r) <= 1.0 + margin) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("TruncatedSeries: needs at least c0");
  }
}

TruncatedSeries TruncatedSeries::zero(int order) {
  return TruncatedSeries(std::vector<Complex>(static_cast<size_t>(order) + 1));
}

TruncatedSeries TruncatedSeries::constant(Complex c0, int order) {
  auto s = zero(order);
  s[0] = c0;
  return s;
}

TruncatedSeries TruncatedSeries::identity(int order) {
  auto s = zero(order);
  if (order >= 1) s[1] = 1.0;
  return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const RealPolynomial& p,
                                                 int order) {
  auto s = zero(order);
  for (int k = 0; k <= order; ++k) s[k] = p.coeff(k);
  return s;
}

bool TruncatedSeries::real_symmetric(double tol) const {
  for (const Complex& c : coeffs_) {
    if (std::abs(c.imag()) >= tol) return false;
  }
  return true;
}

Complex TruncatedSeries::eval(Complex t) const {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
  if (order() != rhs.order()) {
    throw std::invalid_argument("series add: order mismatch");
  }
  auto out = coeffs_;
  for (size_t k = 0; k < out.size(); ++k) out[k] += rhs.coeffs_[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
  if (order() != rhs.order()) {
    throw std::invalid_argument("series subtract: order mismatch");
  }
  auto out = coeffs_;
  for (size_t k = 0; k < out.size(); ++k) out[k] -= rhs.coeffs_[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::scaled(Complex c) const {
  auto out = coeffs_;
  for (Complex& v : out) v *= c;
  return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::shifted_down(int k, double drop_tol) const {
  if (k < 0 || k > order()) {
    throw std::invalid_argument("shifted_down: bad shift");
  }
  for (int i = 0; i < k; ++i) {
    if (std::abs(coeffs_[static_cast<size_t>(i)]) > drop_tol) {
      throw MathError("shifted_down: dropped coefficient above tolerance");
    }
  }
  return TruncatedSeries(std::vector<Complex>(
      coeffs_.begin() + k, coeffs_.end()));
}

TruncatedSeries series_multiply(const TruncatedSeries& f,
                                const TruncatedSeries& g) {
  if (f.order() != g.order()) {
    throw std::invalid_argument("series_multiply: order mismatch");
  }
  const int n = f.order();
  auto out = TruncatedSeries::zero(n);
  for (int i = 0; i <= n; ++i) {
    if (f[i] == Complex{0.0, 0.0}) continue;
    for (int k = 0; i + k <= n; ++k) {
      out[i + k] += f[i] * g[k];
    }
  }
  return out;
}

TruncatedSeries series_compose(const TruncatedSeries& f,
                               const TruncatedSeries& g) {
  if (f.order() != g.order()) {
    throw std::invalid_argument("series_compose: order mismatch");
  }
  if (std::abs(g[0]) > 1e-14) {
    throw std::invalid_argument("series_compose: g(0) must vanish");
  }
  const int n = f.order();
  auto acc = TruncatedSeries::constant(f[n], n);
  for (int k = n - 1; k >= 0; --k) {
    acc = series_multiply(acc, g);
    acc[0] += f[k];
  }
  return acc;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& f) {
  if (std::abs(f[0]) == 0.0) {
    throw std::invalid_argument("series_reciprocal: f(0) must be nonzero");
  }
  const int n = f.order();
  auto out = TruncatedSeries::zero(n);
  out[0] = 1.0 / f[0];
  for (int k = 1; k <= n; ++k) {
    Complex s{0.0, 0.0};
    for (int i = 1; i <= k; ++i) s += f[i] * out[k - i];
    out[k] = -s / f[0];
  }
  return out;
}

TruncatedSeries polynomial_shifted_jet(const RealPolynomial& p, Complex w0,
                                       int order) {
  // Horner in the series ring: substitute w = w0 + t.
  auto acc = TruncatedSeries::zero(order);
  for (int k = p.degree(); k >= 0; --k) {
    // acc = acc * (w0 + t) + c_k
    auto next = TruncatedSeries::zero(order);
    for (int i = 0; i <= order; ++i) {
      next[i] += acc[i] * w0;
      if (i + 1 <= order) next[i + 1] += acc[i];
    }
    next[0] += p.coeff(k);
    acc = next;
  }
  return acc;
}

TruncatedSeries rational_shifted_jet(const RationalFunction& f, Complex w0,
                                     int order) {
  auto den = polynomial_shifted_jet(f.den(), w0, order);
  if (std::abs(den[0]) <= 1e-14) {
    throw MathError("rational_shifted_jet: expansion point at a pole");
  }
  return series_multiply(polynomial_shifted_jet(f.num(), w0, order),
                         series_reciprocal(den));
}

}  // namespace lensmatch
