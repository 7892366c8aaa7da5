#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace conic {

// Fixed Gauss-Legendre rules on [-1,1].
struct GaussRule {
    std::span<const double> nodes;
    std::span<const double> weights;
};

GaussRule gauss4();
GaussRule gauss7();
GaussRule gauss15();

// Integrate f over [a,b] with one n-point rule.
template <class F>
double gauss_panel(F&& f, double a, double b, const GaussRule& rule) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        s += rule.weights[i] * f(c + h * rule.nodes[i]);
    return h * s;
}

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
    int evaluations = 0;
};

// Adaptive bisection with a GL7 / two-half-GL7 error estimate.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, int max_depth = 48);

// Geometrically graded panel breakpoints from a to b (a < b), first panel of
// width h0 at the 'a' end, widths growing by 'ratio' and capped at h_max.
std::vector<double> graded_breaks(double a, double b, double h0, double ratio, double h_max);

// Uniform breakpoints, n panels.
std::vector<double> uniform_breaks(double a, double b, int n);

}  // namespace conic
