#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "conic/interp.hpp"

namespace conic::geometry {

enum class ProfileKind { cylinder, conic_alpha1, tabulated };

struct ProfileParams {
    double radius = 1.0;            // cylinder
    std::vector<double> x_samples;  // tabulated: sorted abscissas
    std::vector<double> r_samples;  // tabulated: radii, all > 0
    double max_spacing = 0.05;      // coarseness bound for tabulated grids
};

// Generating curve r(x) with analytic derivatives for the built-in kinds and
// 4th-order finite differences for tabulated data.
class SurfaceProfile {
  public:
    ProfileKind kind() const { return kind_; }
    bool symmetric() const { return symmetric_; }

    double r(double x) const;
    double dr(double x) const;
    double d2r(double x) const;
    double d3r(double x) const;

    // arclength density sqrt(1 + r'(x)^2)
    double speed(double x) const;

    friend SurfaceProfile build_profile(ProfileKind, const ProfileParams&);

  private:
    ProfileKind kind_ = ProfileKind::cylinder;
    bool symmetric_ = true;
    double radius_ = 1.0;
    Pchip tab_r_, tab_dr_, tab_d2r_, tab_d3r_;
    double tab_lo_ = 0.0, tab_hi_ = 0.0;
};

SurfaceProfile build_profile(ProfileKind kind, const ProfileParams& params = {});

// Two-column CSV (x, r); comma or whitespace separated, '#' comments.
ProfileParams read_profile_csv(const std::string& path);

// Arclength reparametrization xi(x) = int_0^x sqrt(1+r'^2), with inverse and
// the asymptotic offset c_infinity of the conic case.
class ArclengthMap {
  public:
    double xi_of_x(double x) const;
    double x_of_xi(double xi) const;

    bool has_c_infinity() const { return has_cinf_; }
    double c_infinity() const;

    double x_max() const { return x_max_; }
    double xi_max() const { return xi_max_; }

    friend ArclengthMap arclength_map(const SurfaceProfile&, double, double);

  private:
    std::shared_ptr<const SurfaceProfile> profile_;
    std::vector<double> xs_, xis_;  // accumulated table on [0, x_max]
    Pchip seed_;                    // xi -> x seed for Newton
    double x_max_ = 0.0, xi_max_ = 0.0;
    bool has_cinf_ = false;
    double cinf_ = 0.0;
    double quad_tol_ = 1e-12;
};

ArclengthMap arclength_map(const SurfaceProfile& profile, double x_max, double quad_tol = 1e-12);

// Reduced 1D potential of the radial operator on the line:
//   V = omega^2/4 + omega_dot/2,  omega = r_dot/r  (dots are d/dxi),
// plus the angular barrier n^2/r^2. Negative xi is routed through the
// symmetry r(xi) = r(-xi).
class PotentialModel {
  public:
    int n() const { return n_; }

    double omega(double xi) const;
    double V(double xi) const;
    double V1(double xi) const;  // V + 1/(4 xi^2), meaningful for |xi| > 1
    double V_eff(double xi) const { return V(xi) + barrier(xi); }
    double r_of_xi(double xi) const;

    bool has_geometry() const { return bool(r_xi_); }
    double xi_max() const { return xi_max_; }

    // Synthetic potential for oracle tests (no underlying surface).
    static PotentialModel synthetic(std::function<double(double)> v_eff, int n = 0);

    friend PotentialModel potential(const SurfaceProfile&, const ArclengthMap&, int);

  private:
    double barrier(double xi) const;
    int n_ = 0;
    double xi_max_ = 0.0;
    std::function<double(double)> omega_, v_, r_xi_;
    std::function<double(double)> v_eff_synth_;
};

PotentialModel potential(const SurfaceProfile& profile, const ArclengthMap& map, int n);

}  // namespace conic::geometry
