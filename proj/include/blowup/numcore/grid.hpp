#pragma once

#include <vector>

namespace blowup::numcore {

/// One-dimensional grid with geometrically graded cell widths.
/// Consecutive cell widths form a geometric progression with common ratio
/// `grading_ratio`; ratio 1 is the uniform grid, ratio < 1 concentrates
/// nodes toward the right endpoint.
struct Grid1D {
    std::vector<double> nodes;
    double grading_ratio = 1.0;

    int size() const { return static_cast<int>(nodes.size()); }
    double front() const { return nodes.front(); }
    double back() const { return nodes.back(); }
};

/// Builds a grid on [a,b] with n nodes whose n-1 cell widths form a
/// geometric progression with common ratio `ratio`.
Grid1D make_graded_grid(double a, double b, int n, double ratio);

/// Nested refinement: 2n-1 nodes, grading ratio sqrt(ratio). Every node of
/// the input grid is a node of the output grid (exactly, by construction
/// from the closed-form node positions).
Grid1D refine(const Grid1D& g);

/// Finds the grading ratio for which make_graded_grid(a,b,n,ratio) has its
/// first cell width equal to `first_width`. Bisection on the monotone map
/// ratio -> first width.
double ratio_for_first_cell(double a, double b, int n, double first_width);

/// Checks the Grid1D invariants (strict increase, endpoints, geometric
/// widths within relative 1e-12); throws std::invalid_argument on failure.
void validate_grid(const Grid1D& g, double a, double b);

enum class NodeFlag : unsigned char { outside = 0, interior = 1, boundary = 2 };

/// Tensor grid with a per-node inside/outside/boundary mask for
/// non-rectangular domains. Boundary nodes carry a piece id used to attach
/// per-piece boundary conditions.
struct Grid2D {
    Grid1D x;
    Grid1D y;
    std::vector<NodeFlag> flags;  // size nx*ny, index = j*nx + i
    std::vector<int> piece;       // piece id for boundary nodes, -1 otherwise

    int nx() const { return x.size(); }
    int ny() const { return y.size(); }
    int idx(int i, int j) const { return j * nx() + i; }
    NodeFlag flag(int i, int j) const { return flags[idx(i, j)]; }
};

/// Verifies that every interior node has its four axis neighbors flagged
/// interior or boundary; throws std::invalid_argument otherwise.
void validate_mask(const Grid2D& g);

/// Marks as boundary every non-interior node that is 4-adjacent to an
/// interior node (piece id `piece_id`); leaves existing boundary tags alone.
void close_mask(Grid2D& g, int piece_id);

/// Erodes the interior of the mask by `cells` layers (4-neighbor), then
/// rebuilds the boundary ring with the given piece id.
Grid2D erode_mask(const Grid2D& g, int cells, int piece_id);

}  // namespace blowup::numcore
