#pragma once

#include <complex>

namespace conic::specfun {

using cplx = std::complex<double>;

// Joint evaluation of the order-0 cylinder functions at z > 0, with the
// order-1 values carried along for derivatives (J0' = -J1, Y0' = -Y1).
struct HankelEval {
    double z = 0.0;
    double j0 = 0.0, y0 = 0.0;
    double j1 = 0.0, y1 = 0.0;
    cplx h0_plus;   // J0 + i Y0
    cplx dh0_plus;  // d/dz (J0 + i Y0) = -(J1 + i Y1)
};

// Series branch below z_switch, Hankel asymptotic expansion above.
// The asymptotic series is summed to its smallest term; both branches reach
// ~1e-11 relative (of the modulus scale) in the overlap window.
inline constexpr double kBesselSwitch = 12.0;

HankelEval bessel_j0_y0(double z);

// kappa in H0+(z) = 1 + O(z^2) + i(2/pi)log z + i*kappa + i O(z^2 log z),
// obtained by small-z evaluation and extrapolation, never hard-coded.
double kappa_constant();

// Free Jost solution of H0 = -d^2/dxi^2 - 1/(4 xi^2):
//   f0(xi,lambda) = sqrt(pi/2) e^{i pi/4} sqrt(xi lambda) H0+(xi lambda)
struct FreeJost {
    cplx value;
    cplx dvalue;  // d/dxi
};
FreeJost free_jost(double xi, double lambda);

// Green function of H0 at energy lambda^2, 0 < xi <= eta.
// Built from f0 exactly as in the defining Wronskian formula; the result is
// real up to rounding.
cplx green0(double xi, double eta, double lambda);

// Fresnel integrals, C(x) = int_0^x cos(pi t^2/2) dt and the sine analogue.
// Power series for small x, complex-erfc continued fraction beyond.
struct FresnelCS {
    double c = 0.0, s = 0.0;
};
FresnelCS fresnel_cs(double x);

// int_a^b e^{i w u^2} du via Fresnel integrals (any real a < b, w != 0).
cplx fresnel_segment(double w, double a, double b);

}  // namespace conic::specfun
