#pragma once

#include <array>
#include <complex>
#include <span>

namespace conic::oscquad {

using cplx = std::complex<double>;

// All panel rules below take the amplitude sampled at the 4 Gauss-Legendre
// nodes of the panel and integrate (cubic through the nodes) x (phase factor)
// exactly in the phase. For mild phase variation they fall back to plain GL4
// on the sampled product, which is more accurate there.

// GL4 nodes of [a,b].
std::array<double, 4> gl4_nodes(double a, double b);

// Monomial coefficients of the Lagrange basis on the GL4 reference nodes:
// ell_j(tau) = sum_m L[j][m] tau^m.
const std::array<std::array<double, 4>, 4>& gl4_lagrange_monomials();

// I_m = int_u^1 tau^m e^{i alpha tau} d tau for m = 0..3.
std::array<cplx, 4> linear_moments_partial(double alpha, double u);

// int_a^b g(s) e^{i omega s} ds, g cubic through the GL4 node values.
cplx linear_phase_panel(double omega, double a, double b, std::span<const cplx, 4> g);

// Per-node quadrature weights for the panel above: integral = sum_j w_j g_j.
// partial_from selects the lower limit as the reference coordinate of that
// node (used for Volterra suffix/prefix sums); -1 means the full panel.
std::array<cplx, 4> linear_phase_weights(double omega, double a, double b, int partial_from_node,
                                         bool from_node_to_right);

// int_a^b g(mu) e^{i t mu^2} d mu, g cubic through the GL4 node values.
cplx quadratic_phase_panel(double t, double a, double b, std::span<const cplx, 4> g);

}  // namespace conic::oscquad
