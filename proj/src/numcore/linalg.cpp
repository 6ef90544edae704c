#include "blowup/numcore/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "blowup/errors.hpp"

namespace blowup::numcore {

std::vector<double> Tridiagonal::column(int j) const {
    const int n = size();
    std::vector<double> col(n, 0.0);
    if (j > 0) col[j - 1] = upper.empty() ? 0.0 : upper[j - 1];
    col[j] = diag[j];
    if (j + 1 < n) col[j + 1] = lower.empty() ? 0.0 : lower[j];
    return col;
}

std::vector<double> Tridiagonal::apply(const std::vector<double>& x) const {
    const int n = size();
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) {
        double v = diag[i] * x[i];
        if (i > 0) v += lower[i - 1] * x[i - 1];
        if (i + 1 < n) v += upper[i] * x[i + 1];
        y[i] = v;
    }
    return y;
}

double Tridiagonal::norm_inf() const {
    const int n = size();
    double m = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = std::abs(diag[i]);
        if (i > 0) s += std::abs(lower[i - 1]);
        if (i + 1 < n) s += std::abs(upper[i]);
        m = std::max(m, s);
    }
    return m;
}

std::vector<double> solve_tridiagonal(const Tridiagonal& t, const std::vector<double>& rhs) {
    return solve_tridiagonal(t.lower, t.diag, t.upper, rhs);
}

std::vector<double> solve_tridiagonal(const std::vector<double>& lower,
                                      const std::vector<double>& diag,
                                      const std::vector<double>& upper,
                                      const std::vector<double>& rhs) {
    const int n = static_cast<int>(diag.size());
    if (n == 0) return {};
    if (static_cast<int>(rhs.size()) != n ||
        static_cast<int>(lower.size()) != std::max(0, n - 1) ||
        static_cast<int>(upper.size()) != std::max(0, n - 1))
        throw std::invalid_argument("solve_tridiagonal: inconsistent lengths");

    double scale = 0.0;
    for (double d : diag) scale = std::max(scale, std::abs(d));

    std::vector<double> c(n - 1 > 0 ? n - 1 : 0), x(n);
    double pivot = diag[0];
    if (std::abs(pivot) <= 1e-300 * std::max(1.0, scale))
        throw singular_matrix_error("solve_tridiagonal: zero pivot at row 0");
    if (n > 1) c[0] = upper[0] / pivot;
    x[0] = rhs[0] / pivot;
    for (int i = 1; i < n; ++i) {
        pivot = diag[i] - lower[i - 1] * c[i - 1];
        if (std::abs(pivot) <= 1e-300 * std::max(1.0, scale))
            throw singular_matrix_error("solve_tridiagonal: zero pivot at row " + std::to_string(i));
        if (i < n - 1) c[i] = upper[i] / pivot;
        x[i] = (rhs[i] - lower[i - 1] * x[i - 1]) / pivot;
    }
    for (int i = n - 2; i >= 0; --i) x[i] -= c[i] * x[i + 1];
    return x;
}

std::vector<double> Banded::column(int j) const {
    std::vector<double> col(n, 0.0);
    for (int i = std::max(0, j - bandwidth); i <= std::min(n - 1, j + bandwidth); ++i)
        col[i] = get(i, j);
    return col;
}

std::vector<double> Banded::apply(const std::vector<double>& x) const {
    std::vector<double> y(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const int lo = std::max(0, i - bandwidth);
        const int hi = std::min(n - 1, i + bandwidth);
        double v = 0.0;
        for (int j = lo; j <= hi; ++j) v += get(i, j) * x[j];
        y[i] = v;
    }
    return y;
}

std::vector<double> solve_banded(Banded a, const std::vector<double>& rhs) {
    const int n = a.n;
    const int bw = a.bandwidth;
    if (static_cast<int>(rhs.size()) != n)
        throw std::invalid_argument("solve_banded: rhs length mismatch");

    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(a.get(i, i)));

    std::vector<double> x = rhs;
    const int stride = 2 * bw + 1;
    double* band = a.band.data();
    for (int k = 0; k < n; ++k) {
        const double pivot = band[static_cast<size_t>(k) * stride + bw];
        if (std::abs(pivot) <= 1e-300 * std::max(1.0, scale))
            throw singular_matrix_error("solve_banded: zero pivot at row " + std::to_string(k));
        const int last = std::min(n - 1, k + bw);
        for (int i = k + 1; i <= last; ++i) {
            double* row_i = band + static_cast<size_t>(i) * stride;
            const double lik = row_i[k - i + bw] / pivot;
            if (lik == 0.0) continue;
            row_i[k - i + bw] = 0.0;
            const double* row_k = band + static_cast<size_t>(k) * stride;
            for (int j = k + 1; j <= std::min(n - 1, k + bw); ++j)
                row_i[j - i + bw] -= lik * row_k[j - k + bw];
            x[i] -= lik * x[k];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        const double* row_i = band + static_cast<size_t>(i) * stride;
        double v = x[i];
        const int hi = std::min(n - 1, i + bw);
        for (int j = i + 1; j <= hi; ++j) v -= row_i[j - i + bw] * x[j];
        x[i] = v / row_i[bw];
    }
    return x;
}

}  // namespace blowup::numcore
