#include "conic/gauss.hpp"

#include <cmath>
#include <stdexcept>

namespace conic {

namespace {

const double g4_x[] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                       0.8611363115940526};
const double g4_w[] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                       0.3478548451374538};

const double g7_x[] = {-0.9491079123427585, -0.7415311855993945, -0.4058451513773972,
                       0.0,
                       0.4058451513773972,  0.7415311855993945,  0.9491079123427585};
const double g7_w[] = {0.1294849661688697, 0.2797053914892766, 0.3818300505051189,
                       0.4179591836734694,
                       0.3818300505051189, 0.2797053914892766, 0.1294849661688697};

const double g15_x[] = {-0.9879925180204854, -0.9372733924007060, -0.8482065834104272,
                        -0.7244177313601700, -0.5709721726085388, -0.3941513470775634,
                        -0.2011940939974345, 0.0,
                        0.2011940939974345,  0.3941513470775634,  0.5709721726085388,
                        0.7244177313601700,  0.8482065834104272,  0.9372733924007060,
                        0.9879925180204854};
const double g15_w[] = {0.0307532419961173, 0.0703660474881081, 0.1071592204671719,
                        0.1395706779261543, 0.1662692058169939, 0.1861610000155622,
                        0.1984314853271116, 0.2025782419255613,
                        0.1984314853271116, 0.1861610000155622, 0.1662692058169939,
                        0.1395706779261543, 0.1071592204671719, 0.0703660474881081,
                        0.0307532419961173};

struct AdaptiveCtx {
    const std::function<double(double)>& f;
    double abs_tol;
    int evals = 0;
};

double adapt(AdaptiveCtx& ctx, double a, double b, double whole, double tol, int depth,
             double& err_out) {
    const double m = 0.5 * (a + b);
    const double left = gauss_panel(ctx.f, a, m, gauss7());
    const double right = gauss_panel(ctx.f, m, b, gauss7());
    ctx.evals += 14;
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= tol) {
        err_out += std::abs(delta);
        return left + right + delta / 63.0;  // Richardson of the O(h^14) pair
    }
    double e1 = 0.0, e2 = 0.0;
    const double v =
        adapt(ctx, a, m, left, 0.5 * tol, depth - 1, e1) + adapt(ctx, m, b, right, 0.5 * tol, depth - 1, e2);
    err_out += e1 + e2;
    return v;
}

}  // namespace

GaussRule gauss4() { return {std::span(g4_x, 4), std::span(g4_w, 4)}; }
GaussRule gauss7() { return {std::span(g7_x, 7), std::span(g7_w, 7)}; }
GaussRule gauss15() { return {std::span(g15_x, 15), std::span(g15_w, 15)}; }

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, int max_depth) {
    if (!(a < b)) {
        if (a == b) return {0.0, 0.0, 0};
        QuadResult r = integrate_adaptive(f, b, a, abs_tol, max_depth);
        r.value = -r.value;
        return r;
    }
    AdaptiveCtx ctx{f, abs_tol};
    const double whole = gauss_panel(f, a, b, gauss7());
    ctx.evals = 7;
    double err = 0.0;
    const double v = adapt(ctx, a, b, whole, abs_tol, max_depth, err);
    return {v, err, ctx.evals};
}

std::vector<double> graded_breaks(double a, double b, double h0, double ratio, double h_max) {
    if (!(b > a) || !(h0 > 0) || !(ratio >= 1.0))
        throw std::invalid_argument("graded_breaks: bad parameters");
    std::vector<double> xs{a};
    double h = h0;
    while (xs.back() < b) {
        double nxt = xs.back() + std::min(h, h_max);
        if (nxt >= b - 1e-12 * (b - a)) nxt = b;
        xs.push_back(nxt);
        h *= ratio;
    }
    return xs;
}

std::vector<double> uniform_breaks(double a, double b, int n) {
    std::vector<double> xs(n + 1);
    for (int i = 0; i <= n; ++i) xs[i] = a + (b - a) * i / n;
    return xs;
}

}  // namespace conic
