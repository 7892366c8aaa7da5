#pragma once

#include <vector>

namespace conic {

// Shape-preserving piecewise-cubic interpolant (Fritsch-Carlson slopes).
// Monotone data stays monotone; used for map inversion seeds and for
// interpolating cached scattering amplitudes in log-lambda.
class Pchip {
  public:
    Pchip() = default;
    Pchip(std::vector<double> x, std::vector<double> y);

    double operator()(double xq) const;
    double derivative(double xq) const;

    const std::vector<double>& abscissas() const { return x_; }

  private:
    std::vector<double> x_, y_, d_;  // nodes, values, node slopes
    std::size_t locate(double xq) const;
};

}  // namespace conic
