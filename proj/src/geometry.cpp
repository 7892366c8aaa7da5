#include "conic/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "conic/gauss.hpp"

namespace conic::geometry {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

// 4th-order finite-difference derivative samples of tabulated data, with
// one-sided closures at the ends. Requires a uniform grid.
std::vector<double> fd_derivative(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    const double h = x[1] - x[0];
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= 2 && i + 2 < n) {
            d[i] = (-y[i + 2] + 8 * y[i + 1] - 8 * y[i - 1] + y[i - 2]) / (12 * h);
        } else if (i < 2) {
            d[i] = (-25 * y[i] + 48 * y[i + 1] - 36 * y[i + 2] + 16 * y[i + 3] - 3 * y[i + 4]) /
                   (12 * h);
        } else {
            d[i] = (25 * y[i] - 48 * y[i - 1] + 36 * y[i - 2] - 16 * y[i - 3] + 3 * y[i - 4]) /
                   (12 * h);
        }
    }
    return d;
}

}  // namespace

double SurfaceProfile::r(double x) const {
    switch (kind_) {
        case ProfileKind::cylinder: return radius_;
        case ProfileKind::conic_alpha1: return std::sqrt(1.0 + x * x);
        case ProfileKind::tabulated: return tab_r_(x);
    }
    return radius_;
}

double SurfaceProfile::dr(double x) const {
    switch (kind_) {
        case ProfileKind::cylinder: return 0.0;
        case ProfileKind::conic_alpha1: return x / std::sqrt(1.0 + x * x);
        case ProfileKind::tabulated: return tab_dr_(x);
    }
    return 0.0;
}

double SurfaceProfile::d2r(double x) const {
    switch (kind_) {
        case ProfileKind::cylinder: return 0.0;
        case ProfileKind::conic_alpha1: {
            const double t = 1.0 + x * x;
            return 1.0 / (t * std::sqrt(t));
        }
        case ProfileKind::tabulated: return tab_d2r_(x);
    }
    return 0.0;
}

double SurfaceProfile::d3r(double x) const {
    switch (kind_) {
        case ProfileKind::cylinder: return 0.0;
        case ProfileKind::conic_alpha1: {
            const double t = 1.0 + x * x;
            return -3.0 * x / (t * t * std::sqrt(t));
        }
        case ProfileKind::tabulated: return tab_d3r_(x);
    }
    return 0.0;
}

double SurfaceProfile::speed(double x) const {
    const double d = dr(x);
    return std::sqrt(1.0 + d * d);
}

SurfaceProfile build_profile(ProfileKind kind, const ProfileParams& params) {
    SurfaceProfile p;
    p.kind_ = kind;
    switch (kind) {
        case ProfileKind::cylinder:
            if (!(params.radius > 0.0))
                throw std::invalid_argument("build_profile: cylinder radius must be positive");
            p.radius_ = params.radius;
            break;
        case ProfileKind::conic_alpha1:
            break;
        case ProfileKind::tabulated: {
            const auto& xs = params.x_samples;
            const auto& rs = params.r_samples;
            if (xs.size() < 8 || xs.size() != rs.size())
                throw std::invalid_argument("build_profile: tabulated profile needs >= 8 samples");
            double max_gap = 0.0;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                if (!(rs[i] > 0.0))
                    throw std::invalid_argument("build_profile: non-positive radius sample");
                if (i > 0) max_gap = std::max(max_gap, xs[i] - xs[i - 1]);
            }
            if (max_gap > params.max_spacing)
                throw std::invalid_argument("build_profile: tabulated grid too coarse");
            const auto d1 = fd_derivative(xs, rs);
            const auto d2 = fd_derivative(xs, d1);
            const auto d3 = fd_derivative(xs, d2);
            p.tab_r_ = Pchip(xs, rs);
            p.tab_dr_ = Pchip(xs, d1);
            p.tab_d2r_ = Pchip(xs, d2);
            p.tab_d3r_ = Pchip(xs, d3);
            p.tab_lo_ = xs.front();
            p.tab_hi_ = xs.back();
            // symmetry check on the samples
            p.symmetric_ = std::abs(xs.front() + xs.back()) < 1e-9;
            if (p.symmetric_) {
                for (std::size_t i = 0; i < xs.size(); ++i) {
                    const double mirror = p.tab_r_(-xs[i]);
                    if (std::abs(mirror - rs[i]) > 1e-8 * std::abs(rs[i])) {
                        p.symmetric_ = false;
                        break;
                    }
                }
            }
            break;
        }
    }
    return p;
}

ProfileParams read_profile_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_profile_csv: cannot open " + path);
    ProfileParams params;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        double x, r;
        if (ss >> x >> r) {
            params.x_samples.push_back(x);
            params.r_samples.push_back(r);
        }
    }
    return params;
}

ArclengthMap arclength_map(const SurfaceProfile& profile, double x_max, double quad_tol) {
    if (!(x_max > 0.0)) throw std::invalid_argument("arclength_map: x_max must be positive");
    ArclengthMap m;
    m.profile_ = std::make_shared<SurfaceProfile>(profile);
    m.x_max_ = x_max;
    m.quad_tol_ = quad_tol;

    // accumulate xi on nodes uniform in asinh(x): dense near 0, sparse far out
    const int n = 2048;
    const double umax = std::asinh(x_max);
    m.xs_.resize(n + 1);
    m.xis_.resize(n + 1);
    m.xs_[0] = 0.0;
    m.xis_[0] = 0.0;
    const auto& pr = *m.profile_;
    double acc_err = 0.0;
    for (int i = 1; i <= n; ++i) {
        m.xs_[i] = std::sinh(umax * i / n);
        const double a = m.xs_[i - 1], b = m.xs_[i];
        const double coarse = gauss_panel([&](double x) { return pr.speed(x); }, a, b, gauss7());
        const double fine = gauss_panel([&](double x) { return pr.speed(x); }, a, 0.5 * (a + b), gauss7()) +
                            gauss_panel([&](double x) { return pr.speed(x); }, 0.5 * (a + b), b, gauss7());
        acc_err += std::abs(fine - coarse);
        m.xis_[i] = m.xis_[i - 1] + fine;
    }
    if (acc_err > quad_tol * std::max(1.0, m.xis_.back()) * 1e3)
        throw std::runtime_error("arclength_map: quadrature did not reach requested tolerance");
    m.xi_max_ = m.xis_.back();
    m.seed_ = Pchip(m.xis_, m.xs_);

    if (profile.kind() != ProfileKind::cylinder) {
        // c_infinity = int_0^inf (speed - sqrt(2)); integrate to x_max, then
        // close with the O(x^-1) tail  int_xmax^inf C2/x^2 = C2/x_max.
        const auto res = integrate_adaptive([&](double x) { return pr.speed(x) - kSqrt2; }, 0.0,
                                            x_max, quad_tol);
        const double c2 = x_max * x_max * (pr.speed(x_max) - kSqrt2);
        m.cinf_ = res.value + c2 / x_max;
        m.has_cinf_ = true;
    }
    return m;
}

double ArclengthMap::xi_of_x(double x) const {
    if (x < 0.0) return -xi_of_x(-x);
    if (x > x_max_ * (1.0 + 1e-12))
        throw std::domain_error("ArclengthMap: x beyond tabulated range");
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    const std::size_t i = (it == xs_.begin()) ? 0 : (it - xs_.begin() - 1);
    return xis_[i] + gauss_panel([&](double xx) { return profile_->speed(xx); }, xs_[i], x, gauss7());
}

double ArclengthMap::x_of_xi(double xi) const {
    if (xi < 0.0) return -x_of_xi(-xi);
    if (xi > xi_max_ * (1.0 + 1e-12))
        throw std::domain_error("ArclengthMap: xi beyond tabulated range");
    double x = std::clamp(seed_(xi), 0.0, x_max_);
    double lo = 0.0, hi = x_max_;
    for (int it = 0; it < 60; ++it) {
        const double f = xi_of_x(x) - xi;
        if (std::abs(f) < 1e-13 * (1.0 + xi)) return x;
        (f > 0 ? hi : lo) = x;
        const double step = f / profile_->speed(x);
        double nxt = x - step;
        if (!(nxt > lo) || !(nxt < hi)) nxt = 0.5 * (lo + hi);  // bisection fallback
        x = nxt;
    }
    return x;
}

double ArclengthMap::c_infinity() const {
    if (!has_cinf_) throw std::logic_error("c_infinity undefined for cylinder profiles");
    return cinf_;
}

PotentialModel potential(const SurfaceProfile& profile, const ArclengthMap& map, int n) {
    if (n < 0) throw std::invalid_argument("potential: n must be >= 0");
    auto prof = std::make_shared<SurfaceProfile>(profile);
    auto m = std::make_shared<ArclengthMap>(map);

    PotentialModel pm;
    pm.n_ = n;
    pm.xi_max_ = map.xi_max();
    pm.omega_ = [prof, m](double xi) {
        const double x = m->x_of_xi(std::abs(xi));
        const double rp = prof->dr(x), s = prof->speed(x);
        const double w = rp / (prof->r(x) * s);
        return xi < 0.0 ? -w : w;  // r even in xi, so omega is odd
    };
    pm.v_ = [prof, m](double xi) {
        const double x = m->x_of_xi(std::abs(xi));
        const double r = prof->r(x), rp = prof->dr(x), rpp = prof->d2r(x);
        const double s2 = 1.0 + rp * rp;
        const double w = rp / (r * std::sqrt(s2));
        // omega_dot = omega'(x)/s with omega'(x) = (r'' r - r'^2 (1+r'^2))/(r^2 s^3)
        const double wdot = (rpp * r - rp * rp * s2) / (r * r * s2 * s2);
        return 0.25 * w * w + 0.5 * wdot;
    };
    pm.r_xi_ = [prof, m](double xi) { return prof->r(m->x_of_xi(std::abs(xi))); };
    return pm;
}

PotentialModel PotentialModel::synthetic(std::function<double(double)> v_eff, int n) {
    PotentialModel pm;
    pm.n_ = n;
    pm.xi_max_ = 0.0;
    pm.v_eff_synth_ = std::move(v_eff);
    return pm;
}

double PotentialModel::omega(double xi) const {
    if (!omega_) throw std::logic_error("PotentialModel: no geometry behind synthetic potential");
    return omega_(xi);
}

double PotentialModel::V(double xi) const {
    if (v_) return v_(xi);
    if (v_eff_synth_ && n_ == 0) return v_eff_synth_(xi);
    throw std::logic_error("PotentialModel: V undefined");
}

double PotentialModel::V1(double xi) const { return V(xi) + 0.25 / (xi * xi); }

double PotentialModel::barrier(double xi) const {
    if (n_ == 0) return 0.0;
    const double r = r_of_xi(xi);
    return double(n_) * n_ / (r * r);
}

double PotentialModel::r_of_xi(double xi) const {
    if (!r_xi_) throw std::logic_error("PotentialModel: no geometry behind synthetic potential");
    return r_xi_(xi);
}

}  // namespace conic::geometry
