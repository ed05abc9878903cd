#pragma once

#include "lensmatch/complex_core.hpp"

namespace lensmatch {

/// Parameters of the lens region Omega_gamma = {|1-s| < gamma, |1+s| < gamma}
/// and of the disc-to-lens map, tied by gamma = 1/cos(alpha).
struct LensParams {
  double gamma;
  double alpha;

  static LensParams from_gamma(double gamma);
  static LensParams from_alpha(double alpha);

  double tan_alpha() const;
  /// Exponent 2*alpha/pi of the cone-flattening power step.
  double power_exponent() const;
};

/// Sentinel for the single point at infinity the Moebius chain can produce
/// (the pole of V at w = -j).
Complex point_at_infinity();
bool is_point_at_infinity(Complex z);

/// V(w) = (1+jw)/(1-jw): unit disc onto the open right half-plane.
/// V(-j) is the point at infinity.
Complex mobius_V(Complex w);

/// Inverse of V: w = -j(z-1)/(z+1). Throws at z = -1; maps infinity to -j.
Complex mobius_V_inv(Complex z);

/// R_alpha(s) = s^(2 alpha / pi): right half-plane cone onto the cone of
/// half-angle alpha. Fixes 0, 1 and infinity.
Complex power_R(const LensParams& params, Complex s);

/// U_alpha(y) = j tan(alpha) (1-y)/(1+y): cone of half-angle alpha onto the
/// lens. Throws at y = -1; maps infinity to the lower corner -j tan(alpha).
Complex mobius_U(const LensParams& params, Complex y);

/// F_gamma = U_alpha . R_alpha . V on the closed disc. The corners
/// F(+-j) = +-j tan(alpha) are handled explicitly. Throws for |w| > 1 + 1e-12.
Complex lens_map(const LensParams& params, Complex w);

/// Explicit inverse composition V^-1 . R_alpha^-1 . U_alpha^-1. Requires s in
/// the closed lens (tolerance 1e-9).
Complex lens_map_inv(const LensParams& params, Complex s);

/// Membership test: |1-s| < gamma + tol and |1+s| < gamma + tol.
bool lens_contains(const LensParams& params, Complex s, double tol);

/// dF_gamma/dw at 0 = 2 alpha tan(alpha) / pi, by formula.
double lens_derivative_at_zero(const LensParams& params);

/// Taylor jet of F_gamma about an interior point w0, computed symbolically
/// through the Moebius / binomial factor jets.
TruncatedSeries lens_map_jet(const LensParams& params, Complex w0, int order);

/// Taylor jet of F_gamma^-1 about a point s0 in the open lens.
TruncatedSeries lens_map_inv_jet(const LensParams& params, Complex s0,
                                 int order);

}  // namespace lensmatch
