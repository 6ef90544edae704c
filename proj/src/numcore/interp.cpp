#include "blowup/numcore/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blowup::numcore {

PchipInterpolant::PchipInterpolant(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const int n = static_cast<int>(x_.size());
    if (n < 2 || y_.size() != x_.size())
        throw std::invalid_argument("PchipInterpolant: need >= 2 matching nodes");
    for (int i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1]))
            throw std::invalid_argument("PchipInterpolant: abscissae not increasing");

    std::vector<double> h(n - 1), d(n - 1);
    for (int i = 0; i < n - 1; ++i) {
        h[i] = x_[i + 1] - x_[i];
        d[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    slope_.assign(n, 0.0);
    if (n == 2) {
        slope_[0] = slope_[1] = d[0];
        return;
    }
    for (int i = 1; i < n - 1; ++i) {
        if (d[i - 1] == 0.0 || d[i] == 0.0 || (d[i - 1] > 0) != (d[i] > 0)) {
            slope_[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            slope_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    auto end_slope = [](double h0, double h1, double d0, double d1) {
        double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if ((m > 0) != (d0 > 0) || d0 == 0.0)
            m = 0.0;
        else if ((d0 > 0) != (d1 > 0) && std::abs(m) > 3.0 * std::abs(d0))
            m = 3.0 * d0;
        return m;
    };
    slope_[0] = end_slope(h[0], h[1], d[0], d[1]);
    slope_[n - 1] = end_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
}

double PchipInterpolant::operator()(double xq) const {
    const int n = static_cast<int>(x_.size());
    if (xq <= x_.front()) xq = x_.front();
    if (xq >= x_.back()) xq = x_.back();
    int lo = static_cast<int>(std::upper_bound(x_.begin(), x_.end(), xq) - x_.begin()) - 1;
    lo = std::clamp(lo, 0, n - 2);
    const double h = x_[lo + 1] - x_[lo];
    const double t = (xq - x_[lo]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * y_[lo] + h * h10 * slope_[lo] + h01 * y_[lo + 1] + h * h11 * slope_[lo + 1];
}

}  // namespace blowup::numcore
