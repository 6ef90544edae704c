#pragma once

#include <vector>

namespace blowup::numcore {

/// Tridiagonal matrix: diag has n entries, lower/upper have n-1.
struct Tridiagonal {
    std::vector<double> lower;
    std::vector<double> diag;
    std::vector<double> upper;

    int size() const { return static_cast<int>(diag.size()); }
    /// Dense column j (for finite-difference Jacobian checks).
    std::vector<double> column(int j) const;
    /// y = T x.
    std::vector<double> apply(const std::vector<double>& x) const;
    /// max row sum norm.
    double norm_inf() const;
};

/// Thomas algorithm. Throws singular_matrix_error when a pivot underflows.
std::vector<double> solve_tridiagonal(const Tridiagonal& t, const std::vector<double>& rhs);
std::vector<double> solve_tridiagonal(const std::vector<double>& lower,
                                      const std::vector<double>& diag,
                                      const std::vector<double>& upper,
                                      const std::vector<double>& rhs);

/// Banded matrix with symmetric bandwidth: entry (i,j) stored when
/// |i-j| <= bandwidth, at band[i*(2*bandwidth+1) + (j-i+bandwidth)].
/// Covers the 5-point 2-D systems (bandwidth = grid stride).
struct Banded {
    int n = 0;
    int bandwidth = 0;
    std::vector<double> band;

    void resize(int n_, int bw) {
        n = n_;
        bandwidth = bw;
        band.assign(static_cast<size_t>(n) * (2 * bw + 1), 0.0);
    }
    double& at(int i, int j) { return band[static_cast<size_t>(i) * (2 * bandwidth + 1) + (j - i + bandwidth)]; }
    double get(int i, int j) const {
        if (j < i - bandwidth || j > i + bandwidth) return 0.0;
        return band[static_cast<size_t>(i) * (2 * bandwidth + 1) + (j - i + bandwidth)];
    }
    std::vector<double> column(int j) const;
    std::vector<double> apply(const std::vector<double>& x) const;
};

/// In-place banded LU without pivoting (valid for the diagonally dominant
/// M-matrix systems assembled here), then back substitution.
/// Throws singular_matrix_error when a pivot underflows.
std::vector<double> solve_banded(Banded a, const std::vector<double>& rhs);

}  // namespace blowup::numcore
