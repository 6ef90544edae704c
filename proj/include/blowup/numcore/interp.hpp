#pragma once

#include <vector>

namespace blowup::numcore {

/// Monotone piecewise-cubic Hermite interpolant (Fritsch-Carlson slopes).
/// Preserves local monotonicity of the data; exact at the nodes.
class PchipInterpolant {
public:
    PchipInterpolant() = default;
    PchipInterpolant(std::vector<double> x, std::vector<double> y);

    double operator()(double xq) const;
    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::vector<double> x_, y_, slope_;
};

}  // namespace blowup::numcore
