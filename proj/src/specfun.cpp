#include "conic/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace conic::specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kEulerGamma = 0.577215664901532860606512090082402;
const cplx kI{0.0, 1.0};

// Power-series branch, z in (0, kBesselSwitch].
HankelEval bessel_series(double z) {
    const double q = 0.25 * z * z;
    // J0 and the harmonic-number companion sum for Y0.
    double term = 1.0, j0 = 1.0, y0sum = 0.0, hk = 0.0;
    for (int k = 1; k < 60; ++k) {
        term *= -q / (double(k) * k);
        hk += 1.0 / k;
        j0 += term;
        y0sum += -term * hk;  // sum (-1)^{k+1} H_k q^k/(k!)^2
        if (std::abs(term) < 1e-18 * (std::abs(j0) + 1.0)) break;
    }
    // J1 and the companion for Y1.
    double t1 = 0.5 * z, j1 = t1, y1sum = t1;  // y1sum: sum (-1)^k (H_k+H_{k+1}) ... starts H_0+H_1 = 1
    double hsum = 1.0;                         // H_k + H_{k+1} at k=0
    for (int k = 1; k < 60; ++k) {
        t1 *= -q / (double(k) * (k + 1.0));
        hsum += 1.0 / k + 1.0 / (k + 1.0);
        j1 += t1;
        y1sum += t1 * hsum;
        if (std::abs(t1) < 1e-18 * (std::abs(j1) + 1.0)) break;
    }
    const double lg = std::log(0.5 * z) + kEulerGamma;
    HankelEval e;
    e.z = z;
    e.j0 = j0;
    e.j1 = j1;
    e.y0 = (2.0 / kPi) * (lg * j0 + y0sum);
    e.y1 = (2.0 / kPi) * (lg * j1 - 1.0 / z) - (1.0 / kPi) * y1sum;
    return e;
}

// Hankel asymptotic expansion H_nu^+(z) ~ sqrt(2/(pi z)) e^{i(z - nu pi/2 - pi/4)}
// sum_k i^k a_k(nu) z^{-k}, summed to its smallest term.
cplx hankel_asym(int nu, double z) {
    const double mu = 4.0 * nu * nu;
    cplx sum = 1.0;
    double ak = 1.0;
    cplx ik = 1.0;
    double prev = 1e300;
    for (int k = 0; k < 80; ++k) {
        const double odd = 2.0 * k + 1.0;
        ak *= (mu - odd * odd) / (8.0 * (k + 1.0));
        ik *= kI;
        const double mag = std::abs(ak) / std::pow(z, k + 1);
        if (mag >= prev || mag < 1e-18) {
            if (mag < prev) sum += ik * ak / std::pow(z, k + 1);
            break;
        }
        sum += ik * ak / std::pow(z, k + 1);
        prev = mag;
    }
    const double phase = z - 0.5 * nu * kPi - 0.25 * kPi;
    return std::sqrt(2.0 / (kPi * z)) * std::exp(kI * phase) * sum;
}

HankelEval bessel_asymptotic(double z) {
    const cplx h0 = hankel_asym(0, z);
    const cplx h1 = hankel_asym(1, z);
    HankelEval e;
    e.z = z;
    e.j0 = h0.real();
    e.y0 = h0.imag();
    e.j1 = h1.real();
    e.y1 = h1.imag();
    return e;
}

// Laplace continued fraction for sqrt(pi) e^{w^2} erfc(w), Re w > 0.
cplx erfc_scaled_cf(cplx w) {
    // Evaluate 1/(w + (1/2)/(w + 1/(w + (3/2)/(w + ...)))) by modified Lentz.
    const double tiny = 1e-300;
    cplx f = w, C = w, D = 0.0;
    for (int n = 1; n <= 120; ++n) {
        const double a = 0.5 * n;
        D = w + a * D;
        if (std::abs(D) < tiny) D = tiny;
        C = w + a / C;
        if (std::abs(C) < tiny) C = tiny;
        D = 1.0 / D;
        const cplx delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return 1.0 / f;
}

}  // namespace

HankelEval bessel_j0_y0(double z) {
    if (!(z > 0.0)) throw std::domain_error("bessel_j0_y0: z must be positive");
    HankelEval e = (z <= kBesselSwitch) ? bessel_series(z) : bessel_asymptotic(z);
    e.h0_plus = cplx{e.j0, e.y0};
    e.dh0_plus = -cplx{e.j1, e.y1};
    return e;
}

double kappa_constant() {
    auto fit = [](double z) { return bessel_j0_y0(z).y0 - (2.0 / kPi) * std::log(z); };
    const double v3 = fit(1e-3), v4 = fit(1e-4);
    // residual model kappa + c z^2 log z: eliminate the leading term
    return v4 - (v3 - v4) * 1e-8 / (1e-6 - 1e-8);
}

FreeJost free_jost(double xi, double lambda) {
    if (!(xi > 0.0) || !(lambda > 0.0))
        throw std::domain_error("free_jost: xi and lambda must be positive");
    const double z = xi * lambda;
    const HankelEval e = bessel_j0_y0(z);
    const cplx pref = std::sqrt(0.5 * kPi) * std::exp(kI * (0.25 * kPi));
    const double rz = std::sqrt(z);
    FreeJost f;
    f.value = pref * rz * e.h0_plus;
    f.dvalue = pref * lambda * (0.5 / rz * e.h0_plus + rz * e.dh0_plus);
    return f;
}

cplx green0(double xi, double eta, double lambda) {
    if (!(0.0 < xi) || !(xi <= eta)) throw std::domain_error("green0: need 0 < xi <= eta");
    const cplx fx = free_jost(xi, lambda).value;
    const cplx fe = free_jost(eta, lambda).value;
    return (std::conj(fx) * fe - fx * std::conj(fe)) / (-2.0 * kI * lambda);
}

FresnelCS fresnel_cs(double x) {
    if (x < 0.0) {
        FresnelCS r = fresnel_cs(-x);
        return {-r.c, -r.s};
    }
    if (x == 0.0) return {0.0, 0.0};
    if (x <= 3.5) {
        const double p = 0.5 * kPi, x2 = x * x;
        // C: sum (-1)^k p^{2k} x^{4k+1}/((2k)!(4k+1)), S analogous
        double c = 0.0, s = 0.0;
        double tc = x;            // p^{2k} x^{4k+1}/(2k)!
        double ts = p * x2 * x;   // p^{2k+1} x^{4k+3}/(2k+1)!
        for (int k = 0; k < 60; ++k) {
            c += tc / (4.0 * k + 1.0);
            s += ts / (4.0 * k + 3.0);
            const double fac = -p * p * x2 * x2;
            tc *= fac / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
            ts *= fac / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
            if (std::abs(tc) + std::abs(ts) < 1e-18) break;
        }
        return {c, s};
    }
    // C + iS = (1+i)/2 erf(w), w = (sqrt(pi)/2)(1-i)x;  w^2 = -i pi x^2/2.
    const cplx w = 0.5 * std::sqrt(kPi) * cplx{1.0, -1.0} * x;
    const cplx emw2 = std::exp(-w * w);  // modulus 1 on this ray
    const cplx erfcw = emw2 / std::sqrt(kPi) * erfc_scaled_cf(w);
    const cplx cs = 0.5 * cplx{1.0, 1.0} * (1.0 - erfcw);
    return {cs.real(), cs.imag()};
}

cplx fresnel_segment(double w, double a, double b) {
    if (w == 0.0) return cplx{b - a, 0.0};
    if (w < 0.0) return std::conj(fresnel_segment(-w, a, b));
    // int e^{i w u^2} du = sqrt(pi/(2w)) [C(ru) + i S(ru)], r = sqrt(2w/pi)
    const double r = std::sqrt(2.0 * w / kPi);
    const FresnelCS fb = fresnel_cs(r * b), fa = fresnel_cs(r * a);
    return std::sqrt(0.5 * kPi / w) * cplx{fb.c - fa.c, fb.s - fa.s};
}

}  // namespace conic::specfun
