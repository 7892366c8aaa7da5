#include "conic/oscquad.hpp"

#include <cmath>

#include "conic/gauss.hpp"
#include "conic/specfun.hpp"

namespace conic::oscquad {

namespace {

const cplx kI{0.0, 1.0};

std::array<std::array<double, 4>, 4> build_lagrange_monomials() {
    const GaussRule r = gauss4();
    std::array<std::array<double, 4>, 4> L{};
    for (int j = 0; j < 4; ++j) {
        // start with polynomial "1", multiply the linear factors
        std::array<double, 4> p{1.0, 0.0, 0.0, 0.0};
        double denom = 1.0;
        for (int k = 0; k < 4; ++k) {
            if (k == j) continue;
            denom *= r.nodes[j] - r.nodes[k];
            std::array<double, 4> q{};
            for (int m = 3; m >= 1; --m) q[m] = p[m - 1];
            for (int m = 0; m < 4; ++m) q[m] -= r.nodes[k] * p[m];
            p = q;
        }
        for (int m = 0; m < 4; ++m) L[j][m] = p[m] / denom;
    }
    return L;
}

// int_u^1 tau^m e^{i a tau} d tau by Maclaurin series in a (small |a|).
std::array<cplx, 4> linear_moments_series(double a, double u) {
    std::array<cplx, 4> I{};
    for (int m = 0; m < 4; ++m) {
        cplx term = 1.0, sum = 0.0;
        double upow = std::pow(u, m + 1);
        for (int j = 0; j < 40; ++j) {
            const int p = m + j + 1;
            sum += term * (1.0 - upow) / double(p);
            term *= kI * a / double(j + 1);
            upow *= u;
            if (std::abs(term) < 1e-18) break;
        }
        I[m] = sum;
    }
    return I;
}

}  // namespace

std::array<double, 4> gl4_nodes(double a, double b) {
    const GaussRule r = gauss4();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    return {c + h * r.nodes[0], c + h * r.nodes[1], c + h * r.nodes[2], c + h * r.nodes[3]};
}

const std::array<std::array<double, 4>, 4>& gl4_lagrange_monomials() {
    static const auto L = build_lagrange_monomials();
    return L;
}

std::array<cplx, 4> linear_moments_partial(double alpha, double u) {
    if (std::abs(alpha) <= 2.0) return linear_moments_series(alpha, u);
    // upward recursion; stable since |m/alpha| <= 3/2 here and I0 is exact
    std::array<cplx, 4> I{};
    const cplx ia = kI * alpha;
    const cplx e1 = std::exp(ia), eu = std::exp(ia * u);
    I[0] = (e1 - eu) / ia;
    double upow = u;
    for (int m = 1; m < 4; ++m) {
        I[m] = (e1 - upow * eu) / ia - double(m) / ia * I[m - 1];
        upow *= u;
    }
    return I;
}

cplx linear_phase_panel(double omega, double a, double b, std::span<const cplx, 4> g) {
    const auto w = linear_phase_weights(omega, a, b, -1, true);
    return w[0] * g[0] + w[1] * g[1] + w[2] * g[2] + w[3] * g[3];
}

std::array<cplx, 4> linear_phase_weights(double omega, double a, double b, int partial_from_node,
                                         bool from_node_to_right) {
    const GaussRule r = gauss4();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double alpha = omega * h;
    const cplx phase = std::exp(kI * omega * c);
    const auto& L = gl4_lagrange_monomials();

    std::array<cplx, 4> I;
    if (partial_from_node < 0) {
        I = linear_moments_partial(alpha, -1.0);
    } else if (from_node_to_right) {
        I = linear_moments_partial(alpha, r.nodes[partial_from_node]);
    } else {
        // int_{-1}^{tau_k}: full minus right part
        const auto full = linear_moments_partial(alpha, -1.0);
        const auto right = linear_moments_partial(alpha, r.nodes[partial_from_node]);
        for (int m = 0; m < 4; ++m) I[m] = full[m] - right[m];
    }
    std::array<cplx, 4> w{};
    for (int j = 0; j < 4; ++j) {
        cplx s = 0.0;
        for (int m = 0; m < 4; ++m) s += L[j][m] * I[m];
        w[j] = h * phase * s;
    }
    return w;
}

cplx quadratic_phase_panel(double t, double a, double b, std::span<const cplx, 4> g) {
    const double dphi = std::abs(t) * std::abs(b * b - a * a);
    const GaussRule r = gauss4();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    if (dphi <= 1.5) {
        cplx s = 0.0;
        for (int j = 0; j < 4; ++j) {
            const double mu = c + h * r.nodes[j];
            s += r.weights[j] * g[j] * std::exp(kI * (t * mu * mu));
        }
        return h * s;
    }
    // cubic amplitude in local coordinates, exact quadratic-phase moments
    const auto& L = gl4_lagrange_monomials();
    std::array<cplx, 4> coef{};  // monomial coefficients in tau = (mu - c)/h
    for (int m = 0; m < 4; ++m)
        for (int j = 0; j < 4; ++j) coef[m] += L[j][m] * g[j];

    const cplx ea = std::exp(kI * (t * a * a)), eb = std::exp(kI * (t * b * b));
    const cplx i2t = 2.0 * kI * t;
    std::array<cplx, 4> M;  // M_k = int_a^b (mu-c)^k e^{i t mu^2} d mu
    M[0] = specfun::fresnel_segment(t, a, b);
    M[1] = (eb - ea) / i2t - c * M[0];
    double dbp = 1.0, dap = 1.0;  // (b-c)^{k-1}, (a-c)^{k-1}
    for (int k = 2; k < 4; ++k) {
        dbp *= (b - c);
        dap *= (a - c);
        M[k] = (dbp * eb - dap * ea - double(k - 1) * M[k - 2]) / i2t - c * M[k - 1];
    }
    cplx s = 0.0;
    double hp = 1.0;
    for (int m = 0; m < 4; ++m) {
        s += coef[m] * M[m] / hp;
        hp *= h;
    }
    return s;
}

}  // namespace conic::oscquad
