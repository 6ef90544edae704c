#include "blowup/numcore/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "blowup/errors.hpp"

namespace blowup::numcore {

namespace {

// Sum 1 + r + ... + r^(m-1) without the cancellation of the closed form
// near r = 1.
double geometric_sum(double r, int m) {
    if (std::abs(r - 1.0) < 1e-12) return static_cast<double>(m);
    return (std::pow(r, m) - 1.0) / (r - 1.0);
}

}  // namespace

Grid1D make_graded_grid(double a, double b, int n, double ratio) {
    if (!(a < b)) throw std::invalid_argument("make_graded_grid: requires a < b");
    if (n < 2) throw std::invalid_argument("make_graded_grid: requires n >= 2");
    if (!(ratio > 0.0)) throw std::invalid_argument("make_graded_grid: requires ratio > 0");

    const int cells = n - 1;
    const double w0 = (b - a) / geometric_sum(ratio, cells);

    Grid1D g;
    g.grading_ratio = ratio;
    g.nodes.resize(n);
    g.nodes[0] = a;
    for (int k = 1; k < n; ++k) {
        g.nodes[k] = a + w0 * geometric_sum(ratio, k);
    }
    g.nodes[n - 1] = b;  // pin the endpoint exactly
    return g;
}

Grid1D refine(const Grid1D& g) {
    const int n = g.size();
    if (n < 2) throw std::invalid_argument("refine: grid too small");
    const double a = g.front();
    const double b = g.back();
    const double r = std::sqrt(g.grading_ratio);
    Grid1D fine = make_graded_grid(a, b, 2 * n - 1, r);
    // Coarse nodes are a subset up to roundoff of the closed form; snap them
    // so nested comparisons are exact.
    for (int k = 0; k < n; ++k) fine.nodes[2 * k] = g.nodes[k];
    return fine;
}

double ratio_for_first_cell(double a, double b, int n, double first_width) {
    if (!(a < b) || n < 2) throw std::invalid_argument("ratio_for_first_cell: bad interval");
    const int cells = n - 1;
    const double uniform = (b - a) / cells;
    if (!(first_width > 0.0) || first_width >= (b - a))
        throw std::invalid_argument("ratio_for_first_cell: bad first width");
    if (std::abs(first_width - uniform) / uniform < 1e-14) return 1.0;

    // first_width(ratio) = (b-a)/geometric_sum(ratio, cells) is strictly
    // decreasing in ratio.
    auto width_at = [&](double r) { return (b - a) / geometric_sum(r, cells); };
    double lo = 1e-6, hi = 1e6;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (width_at(mid) > first_width)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

void validate_grid(const Grid1D& g, double a, double b) {
    const int n = g.size();
    if (n < 2) throw std::invalid_argument("Grid1D: needs at least 2 nodes");
    if (g.nodes.front() != a || g.nodes.back() != b)
        throw std::invalid_argument("Grid1D: endpoints do not match declaration");
    for (int k = 1; k < n; ++k)
        if (!(g.nodes[k] > g.nodes[k - 1]))
            throw std::invalid_argument("Grid1D: nodes not strictly increasing");
    for (int k = 1; k + 1 < n; ++k) {
        const double w_prev = g.nodes[k] - g.nodes[k - 1];
        const double w_next = g.nodes[k + 1] - g.nodes[k];
        const double target = w_prev * g.grading_ratio;
        if (std::abs(w_next - target) > 1e-12 * std::max(std::abs(w_next), std::abs(target)) + 1e-300)
            throw std::invalid_argument("Grid1D: cell widths break the declared grading ratio");
    }
}

void validate_mask(const Grid2D& g) {
    const int nx = g.nx(), ny = g.ny();
    if (static_cast<int>(g.flags.size()) != nx * ny)
        throw std::invalid_argument("Grid2D: flag array size mismatch");
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            if (g.flag(i, j) != NodeFlag::interior) continue;
            const int di[4] = {1, -1, 0, 0};
            const int dj[4] = {0, 0, 1, -1};
            for (int d = 0; d < 4; ++d) {
                const int ii = i + di[d], jj = j + dj[d];
                if (ii < 0 || ii >= nx || jj < 0 || jj >= ny)
                    throw std::invalid_argument("Grid2D: interior node on the lattice edge");
                if (g.flag(ii, jj) == NodeFlag::outside)
                    throw std::invalid_argument("Grid2D: interior node with an outside neighbor");
            }
        }
    }
}

void close_mask(Grid2D& g, int piece_id) {
    const int nx = g.nx(), ny = g.ny();
    if (g.piece.size() != g.flags.size()) g.piece.assign(g.flags.size(), -1);
    const int di[4] = {1, -1, 0, 0};
    const int dj[4] = {0, 0, 1, -1};
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            if (g.flag(i, j) != NodeFlag::outside) continue;
            bool touches = false;
            for (int d = 0; d < 4 && !touches; ++d) {
                const int ii = i + di[d], jj = j + dj[d];
                if (ii >= 0 && ii < nx && jj >= 0 && jj < ny &&
                    g.flag(ii, jj) == NodeFlag::interior)
                    touches = true;
            }
            if (touches) {
                g.flags[g.idx(i, j)] = NodeFlag::boundary;
                g.piece[g.idx(i, j)] = piece_id;
            }
        }
    }
}

Grid2D erode_mask(const Grid2D& g, int cells, int piece_id) {
    Grid2D out = g;
    const int nx = g.nx(), ny = g.ny();
    // Start from interior only.
    for (auto& f : out.flags)
        if (f == NodeFlag::boundary) f = NodeFlag::outside;
    out.piece.assign(out.flags.size(), -1);
    for (int pass = 0; pass < cells; ++pass) {
        std::vector<NodeFlag> next = out.flags;
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                if (out.flag(i, j) != NodeFlag::interior) continue;
                const int di[4] = {1, -1, 0, 0};
                const int dj[4] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d) {
                    const int ii = i + di[d], jj = j + dj[d];
                    if (ii < 0 || ii >= nx || jj < 0 || jj >= ny ||
                        out.flag(ii, jj) == NodeFlag::outside) {
                        next[out.idx(i, j)] = NodeFlag::outside;
                        break;
                    }
                }
            }
        }
        out.flags = std::move(next);
    }
    close_mask(out, piece_id);
    return out;
}

}  // namespace blowup::numcore
