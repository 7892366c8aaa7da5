#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace conic::volterra {

using cplx = std::complex<double>;

// (*) backward: f(x) = g(x) + int_x^X K(x,s) f(s) ds   (X = last breakpoint,
//     truncating the paper's infinite upper limit; tail folded into residual)
// (**) forward: f(x) = g(x) + int_a^x K(x,s) f(s) ds
enum class Orientation { backward, forward };

// One rank-1 piece of a separable kernel: K contribution P(x) e^{i omega s} q(s),
// with q smooth so the oscillation is carried entirely by the tagged phase.
// All kernels in this project are sums of at most two such terms; the solver
// then iterates in O(N) with Filon panel weights instead of dense O(N^2).
struct SeparableTerm {
    std::function<cplx(double)> left;   // P(x)
    std::function<cplx(double)> right;  // q(s)
    double omega = 0.0;
};

struct VolterraProblem {
    Orientation orientation = Orientation::backward;
    std::function<cplx(double)> g;
    std::function<cplx(double, double)> K;  // generic evaluator (residual checks, mu)
    std::vector<SeparableTerm> separable;   // optional; when present must sum to K
    double a = 0.0;        // forward lower endpoint
    double tail_mu = 0.0;  // analytic bound for the truncated part of mu (backward)
    double mu_hint = -1.0; // skip the mu scan when the caller knows a bound
};

class VolterraSolution {
  public:
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<cplx>& values() const { return values_; }

    // cubic interpolation through the owning panel's nodes
    cplx operator()(double x) const;

    // running integral of term m against the solution:
    //   backward: int_x^X e^{i omega s} q(s) f(s) ds
    //   forward:  int_a^x e^{i omega s} q(s) f(s) ds
    // (what a caller needs to assemble derivatives of f)
    cplx term_integral(std::size_t term, double x) const;

    double residual = 0.0;
    int iterations = 0;
    double mu = 0.0;
    double majorant_bound = 0.0;  // e^mu ||g||_inf
    bool majorant_ok = true;

  private:
    friend VolterraSolution solve(const VolterraProblem&, const std::vector<double>&, double);
    std::size_t panel_of(double x) const;

    Orientation orientation_ = Orientation::backward;
    std::vector<double> breaks_;
    std::vector<double> nodes_;   // 4 per panel
    std::vector<cplx> values_;
    // per term: amplitude q*f at nodes and accumulated panel-edge integrals
    struct TermData {
        double omega = 0.0;
        std::vector<cplx> amp;     // q(s_j) f(s_j)
        std::vector<cplx> edge;    // backward: suffix at panel start; forward: prefix at panel end
    };
    std::vector<TermData> terms_;
};

// Fixed-point Volterra iteration on composite GL4 panels defined by 'breaks'
// (ascending). Stops when the sup change is below tol * ||g||_inf or the
// e^mu series tail certifies tol; throws on non-convergence within the cap.
VolterraSolution solve(const VolterraProblem& problem, const std::vector<double>& breaks,
                       double tol);

// Upper-sum estimate of mu = int sup_x |K(x,s)| ds on the given panels
// (plus the problem's analytic tail). Returns +inf when divergent.
double estimate_mu(const VolterraProblem& problem, const std::vector<double>& breaks);

}  // namespace conic::volterra
