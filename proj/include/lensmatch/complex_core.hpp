#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "lensmatch/errors.hpp"

namespace lensmatch {

using Complex = std::complex<double>;

/// w^beta on the principal branch: w = r e^{j theta} with theta in (-pi, pi]
/// gives r^beta e^{j beta theta}. By convention 0^beta = 0. Requires beta > 0.
Complex principal_power(Complex w, double beta);

// ---------------------------------------------------------------------------
// 2x2 complex matrices

struct Matrix2 {
  Complex m11, m12, m21, m22;

  Matrix2 adjoint() const;
  Matrix2 operator*(const Matrix2& rhs) const;
  Matrix2 operator+(const Matrix2& rhs) const;
  Matrix2 operator-(const Matrix2& rhs) const;
  Matrix2 scaled(Complex c) const;

  static Matrix2 identity();
};

/// Largest singular value in closed form: with T the squared Frobenius norm
/// and D = |det|^2, sigma_max = sqrt((T + sqrt(T^2 - 4D)) / 2).
double sigma_max_2x2(const Matrix2& m);

// ---------------------------------------------------------------------------
// Real-coefficient polynomials, ascending powers

class RealPolynomial {
 public:
  RealPolynomial() = default;  // the zero polynomial
  explicit RealPolynomial(std::vector<double> coeffs);

  static RealPolynomial one() { return RealPolynomial({1.0}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// coeffs[k] multiplies w^k; zero beyond the stored degree.
  double coeff(int k) const;
  const std::vector<double>& coeffs() const { return coeffs_; }
  double coeff_scale() const;  // max |coeff|, 0 for the zero polynomial

  Complex eval(Complex w) const;
  double eval(double x) const;
  RealPolynomial derivative() const;

  RealPolynomial operator+(const RealPolynomial& rhs) const;
  RealPolynomial operator-(const RealPolynomial& rhs) const;
  RealPolynomial operator*(const RealPolynomial& rhs) const;
  RealPolynomial scaled(double c) const;

  /// Long division: returns {quotient, remainder} with deg rem < deg divisor.
  static std::pair<RealPolynomial, RealPolynomial> divmod(
      const RealPolynomial& dividend, const RealPolynomial& divisor);

 private:
  std::vector<double> coeffs_;  // trailing entry nonzero (canonical form)
};

/// All complex roots with multiplicity, via the companion matrix plus one
/// Newton polish per root. Requires degree >= 1.
std::vector<Complex> polynomial_roots(const RealPolynomial& p);

// ---------------------------------------------------------------------------
// Rational functions num/den, stored reduced

class RationalFunction {
 public:
  RationalFunction();  // 0/1
  RationalFunction(RealPolynomial num, RealPolynomial den);
  static RationalFunction polynomial(RealPolynomial p);
  static RationalFunction constant(double c);

  const RealPolynomial& num() const { return num_; }
  const RealPolynomial& den() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }

 private:
  RealPolynomial num_;
  RealPolynomial den_;
};

/// num(w)/den(w) by Horner evaluation; throws MathError when |den(w)| is
/// within 1e-14 of zero.
Complex rational_eval(const RationalFunction& f, Complex w);

/// True when every pole lies strictly outside the closed unit disc
/// (|pole| > 1 + margin).
bool stable_in_unit_disc(const RationalFunction& f, double margin = 1e-10);

// ---------------------------------------------------------------------------
// Truncated power series (jets at a point)

class TruncatedSeries {
 public:
  /// coeffs c0..cN, one per power; order N = coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<Complex> coeffs);
  static TruncatedSeries zero(int order);
  static TruncatedSeries constant(Complex c0, int order);
  static TruncatedSeries identity(int order);  // the jet of w itself
  static TruncatedSeries from_polynomial(const RealPolynomial& p, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
  Complex& operator[](int k) { return coeffs_[static_cast<size_t>(k)]; }

  /// Max |imag part| over coefficients below tol.
  bool real_symmetric(double tol = 1e-10) const;

  Complex eval(Complex t) const;  // Horner in the local variable

  TruncatedSeries operator+(const TruncatedSeries& rhs) const;
  TruncatedSeries operator-(const TruncatedSeries& rhs) const;
  TruncatedSeries scaled(Complex c) const;
  /// Same coefficients shifted down k slots (division by t^k); the dropped
  /// leading coefficients must be below drop_tol in magnitude.
  TruncatedSeries shifted_down(int k, double drop_tol) const;

 private:
  std::vector<Complex> coeffs_;
};

/// Cauchy product truncated to the common order. Orders must match.
TruncatedSeries series_multiply(const TruncatedSeries& f,
                                const TruncatedSeries& g);

/// Jet of f(g(t)) through the common order; requires g(0) = 0.
TruncatedSeries series_compose(const TruncatedSeries& f,
                               const TruncatedSeries& g);

/// Jet of 1/f; requires f(0) != 0.
TruncatedSeries series_reciprocal(const TruncatedSeries& f);

/// Jet of a polynomial about w0: coefficients of p(w0 + t) in t.
TruncatedSeries polynomial_shifted_jet(const RealPolynomial& p, Complex w0,
                                       int order);

/// Jet of num/den about w0; den(w0) must be nonzero.
TruncatedSeries rational_shifted_jet(const RationalFunction& f, Complex w0,
                                     int order);

}  // namespace lensmatch
