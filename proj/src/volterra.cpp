#include "conic/volterra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "conic/gauss.hpp"
#include "conic/oscquad.hpp"

namespace conic::volterra {

namespace {

struct Scheme {
    std::vector<double> breaks;
    std::vector<double> nodes;  // 4 per panel
    std::size_t panels = 0;
};

Scheme make_scheme(const std::vector<double>& breaks) {
    Scheme s;
    s.breaks = breaks;
    s.panels = breaks.size() - 1;
    s.nodes.reserve(4 * s.panels);
    for (std::size_t p = 0; p < s.panels; ++p) {
        const auto ns = oscquad::gl4_nodes(breaks[p], breaks[p + 1]);
        s.nodes.insert(s.nodes.end(), ns.begin(), ns.end());
    }
    return s;
}

// Precomputed Filon weights for one separable term on one panel: full-panel
// weights plus the partial integral reaching each interior node.
struct PanelWeights {
    std::array<cplx, 4> full;
    std::array<std::array<cplx, 4>, 4> part;  // [node][amplitude node]
};

std::vector<PanelWeights> make_weights(const Scheme& s, double omega, bool backward) {
    std::vector<PanelWeights> w(s.panels);
    for (std::size_t p = 0; p < s.panels; ++p) {
        const double a = s.breaks[p], b = s.breaks[p + 1];
        w[p].full = oscquad::linear_phase_weights(omega, a, b, -1, true);
        for (int k = 0; k < 4; ++k)
            w[p].part[k] = oscquad::linear_phase_weights(omega, a, b, k, backward);
    }
    return w;
}

}  // namespace

std::size_t VolterraSolution::panel_of(double x) const {
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    if (it == breaks_.begin()) return 0;
    const std::size_t p = (it - breaks_.begin()) - 1;
    return std::min(p, breaks_.size() - 2);
}

cplx VolterraSolution::operator()(double x) const {
    const std::size_t p = panel_of(x);
    const double a = breaks_[p], b = breaks_[p + 1];
    const double tau = (2.0 * x - a - b) / (b - a);
    const auto& L = oscquad::gl4_lagrange_monomials();
    cplx v = 0.0;
    for (int j = 0; j < 4; ++j) {
        double lj = 0.0, tp = 1.0;
        for (int m = 0; m < 4; ++m) {
            lj += L[j][m] * tp;
            tp *= tau;
        }
        v += lj * values_[4 * p + j];
    }
    return v;
}

cplx VolterraSolution::term_integral(std::size_t term, double x) const {
    const auto& td = terms_.at(term);
    const std::size_t p = panel_of(x);
    const double a = breaks_[p], b = breaks_[p + 1];
    const bool backward = orientation_ == Orientation::backward;
    // partial piece inside panel p from x (Filon against the panel's cubic)
    const double tau = std::clamp((2.0 * x - a - b) / (b - a), -1.0, 1.0);
    const double h = 0.5 * (b - a), c = 0.5 * (a + b);
    const double alpha = td.omega * h;
    auto I = oscquad::linear_moments_partial(alpha, tau);
    if (!backward) {
        const auto full = oscquad::linear_moments_partial(alpha, -1.0);
        for (int m = 0; m < 4; ++m) I[m] = full[m] - I[m];
    }
    const auto& L = oscquad::gl4_lagrange_monomials();
    const cplx phase = std::exp(cplx{0.0, td.omega * c});
    cplx partial = 0.0;
    for (int j = 0; j < 4; ++j) {
        cplx wj = 0.0;
        for (int m = 0; m < 4; ++m) wj += L[j][m] * I[m];
        partial += h * phase * wj * td.amp[4 * p + j];
    }
    return partial + (backward ? td.edge[p + 1] : td.edge[p]);
}

double estimate_mu(const VolterraProblem& problem, const std::vector<double>& breaks) {
    if (!problem.K) throw std::invalid_argument("estimate_mu: problem has no kernel evaluator");
    const Scheme s = make_scheme(breaks);
    const double lo = breaks.front(), hi = breaks.back();
    const bool backward = problem.orientation == Orientation::backward;
    const GaussRule g4 = gauss4();
    double mu = 0.0;
    for (std::size_t p = 0; p < s.panels; ++p) {
        const double h = 0.5 * (s.breaks[p + 1] - s.breaks[p]);
        for (int j = 0; j < 4; ++j) {
            const double sx = s.nodes[4 * p + j];
            // sup over the admissible x side of the triangle, on a scan grid
            const double xa = backward ? lo : sx;
            const double xb = backward ? sx : hi;
            double sup = 0.0;
            const int nx = 48;
            for (int i = 0; i <= nx; ++i) {
                const double x = xa + (xb - xa) * (double(i) / nx);
                const double v = std::abs(problem.K(x, sx));
                if (std::isinf(v) || std::isnan(v)) return std::numeric_limits<double>::infinity();
                sup = std::max(sup, v);
            }
            mu += h * g4.weights[j] * sup;
        }
    }
    return mu + problem.tail_mu;
}

VolterraSolution solve(const VolterraProblem& problem, const std::vector<double>& breaks,
                       double tol) {
    if (breaks.size() < 2) throw std::invalid_argument("volterra::solve: need at least one panel");
    if (problem.separable.empty())
        throw std::invalid_argument("volterra::solve: kernel needs a separable representation");
    const bool backward = problem.orientation == Orientation::backward;
    const Scheme s = make_scheme(breaks);
    const std::size_t N = s.nodes.size();
    const std::size_t T = problem.separable.size();

    VolterraSolution sol;
    sol.orientation_ = problem.orientation;
    sol.breaks_ = s.breaks;
    sol.nodes_ = s.nodes;

    // static data: g, P(x) per node, q(s) per node, Filon weights per panel
    std::vector<cplx> g(N);
    for (std::size_t i = 0; i < N; ++i) g[i] = problem.g(s.nodes[i]);
    double gnorm = 0.0;
    for (const auto& v : g) gnorm = std::max(gnorm, std::abs(v));

    std::vector<std::vector<cplx>> P(T), q(T);
    std::vector<std::vector<PanelWeights>> W(T);
    sol.terms_.resize(T);
    for (std::size_t m = 0; m < T; ++m) {
        P[m].resize(N);
        q[m].resize(N);
        for (std::size_t i = 0; i < N; ++i) {
            P[m][i] = problem.separable[m].left(s.nodes[i]);
            q[m][i] = problem.separable[m].right(s.nodes[i]);
        }
        W[m] = make_weights(s, problem.separable[m].omega, backward);
        sol.terms_[m].omega = problem.separable[m].omega;
        sol.terms_[m].amp.assign(N, cplx{});
        sol.terms_[m].edge.assign(s.panels + 1, cplx{});
    }

    sol.mu = (problem.mu_hint >= 0.0) ? problem.mu_hint + problem.tail_mu
                                      : estimate_mu(problem, breaks);
    sol.majorant_bound = std::exp(sol.mu) * gnorm;
    const int cap = int(std::ceil(std::exp(1.0) * sol.mu)) + 40;

    std::vector<cplx> f = g, fnew(N);
    auto sweep = [&](const std::vector<cplx>& cur, std::vector<cplx>& nxt) {
        for (std::size_t m = 0; m < T; ++m) {
            auto& td = sol.terms_[m];
            for (std::size_t i = 0; i < N; ++i) td.amp[i] = q[m][i] * cur[i];
            if (backward) {
                td.edge[s.panels] = 0.0;
                for (std::size_t p = s.panels; p-- > 0;) {
                    cplx full = 0.0;
                    for (int j = 0; j < 4; ++j) full += W[m][p].full[j] * td.amp[4 * p + j];
                    td.edge[p] = td.edge[p + 1] + full;
                }
            } else {
                td.edge[0] = 0.0;
                for (std::size_t p = 0; p < s.panels; ++p) {
                    cplx full = 0.0;
                    for (int j = 0; j < 4; ++j) full += W[m][p].full[j] * td.amp[4 * p + j];
                    td.edge[p + 1] = td.edge[p] + full;
                }
            }
        }
        for (std::size_t p = 0; p < s.panels; ++p) {
            for (int k = 0; k < 4; ++k) {
                const std::size_t i = 4 * p + k;
                cplx acc = g[i];
                for (std::size_t m = 0; m < T; ++m) {
                    const auto& td = sol.terms_[m];
                    cplx partial = 0.0;
                    for (int j = 0; j < 4; ++j)
                        partial += W[m][p].part[k][j] * td.amp[4 * p + j];
                    acc += P[m][i] * (partial + (backward ? td.edge[p + 1] : td.edge[p]));
                }
                nxt[i] = acc;
            }
        }
    };

    double dsup = 0.0;
    int it = 0;
    for (it = 1; it <= cap; ++it) {
        sweep(f, fnew);
        dsup = 0.0;
        for (std::size_t i = 0; i < N; ++i) dsup = std::max(dsup, std::abs(fnew[i] - f[i]));
        std::swap(f, fnew);
        if (dsup <= tol * std::max(gnorm, 1e-300)) break;
    }
    if (it > cap && dsup > tol * std::max(gnorm, 1e-300))
        throw std::runtime_error("volterra::solve: no convergence within iteration cap");
    sol.iterations = std::min(it, cap);
    sol.values_ = f;

    double fnorm = 0.0;
    for (const auto& v : f) fnorm = std::max(fnorm, std::abs(v));
    sol.majorant_ok = fnorm <= sol.majorant_bound * (1.0 + 1e-9) + 1e-300;

    // residual by re-quadrature on halved panels: one extra application of the
    // integral operator on refreshed nodes, compared against the interpolant
    {
        std::vector<double> rb;
        rb.reserve(2 * s.panels + 1);
        for (std::size_t p = 0; p < s.panels; ++p) {
            rb.push_back(s.breaks[p]);
            rb.push_back(0.5 * (s.breaks[p] + s.breaks[p + 1]));
        }
        rb.push_back(s.breaks.back());
        const Scheme rs = make_scheme(rb);
        const std::size_t RN = rs.nodes.size();
        std::vector<cplx> rf(RN);
        for (std::size_t i = 0; i < RN; ++i) rf[i] = sol(rs.nodes[i]);
        double res = 0.0;
        std::vector<std::vector<cplx>> ramp(T, std::vector<cplx>(RN));
        for (std::size_t m = 0; m < T; ++m)
            for (std::size_t i = 0; i < RN; ++i)
                ramp[m][i] = problem.separable[m].right(rs.nodes[i]) * rf[i];
        std::vector<std::vector<cplx>> redge(T, std::vector<cplx>(rs.panels + 1, cplx{}));
        for (std::size_t m = 0; m < T; ++m) {
            const auto rw = make_weights(rs, problem.separable[m].omega, backward);
            if (backward) {
                for (std::size_t p = rs.panels; p-- > 0;) {
                    cplx full = 0.0;
                    for (int j = 0; j < 4; ++j) full += rw[p].full[j] * ramp[m][4 * p + j];
                    redge[m][p] = redge[m][p + 1] + full;
                }
            } else {
                for (std::size_t p = 0; p < rs.panels; ++p) {
                    cplx full = 0.0;
                    for (int j = 0; j < 4; ++j) full += rw[p].full[j] * ramp[m][4 * p + j];
                    redge[m][p + 1] = redge[m][p] + full;
                }
            }
        }
        // compare at panel breakpoints of the refined scheme
        for (std::size_t p = 0; p <= rs.panels; ++p) {
            const double x = rs.breaks[p];
            cplx rhs = problem.g(x);
            for (std::size_t m = 0; m < T; ++m) rhs += problem.separable[m].left(x) * redge[m][p];
            res = std::max(res, std::abs(rhs - sol(x)));
        }
        sol.residual = res + problem.tail_mu * fnorm;
    }
    return sol;
}

}  // namespace conic::volterra
