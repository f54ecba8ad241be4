#pragma once

namespace autoconv::specfun {

/// Bessel function of the first kind, order zero.
/// Absolute error below 1e-12 on |x| <= 100 (and well beyond); satisfies
/// |J0(x)| < 1/sqrt(x) for x > 0.
double bessel_j0(double x);

/// Arithmetic-geometric mean of a, g >= 0.
double agm(double a, double g);

/// Complete elliptic integral of the first kind in the parameter
/// convention: K(m) = int_0^{pi/2} dtheta / sqrt(1 - m sin^2 theta),
/// valid for m < 1 (including large negative m).  Computed by the AGM.
double ellip_k_param(double m);

/// Arcsine density: (2/pi)/sqrt(1-4x^2) on (-1/2,1/2), 0 outside.
double arcsine_density(double x);

/// Autocorrelation of the arcsine density, (ss o ss)(x).
/// Zero for |x| >= 1; +infinity at x = 0 (logarithmic singularity);
/// otherwise equal to (2/(pi^2 |x|)) K(1 - 1/x^2), evaluated in the
/// AGM-stable form 1/(pi * AGM(1, |x|)).
double ss_autocorr(double x);

}  // namespace autoconv::specfun
