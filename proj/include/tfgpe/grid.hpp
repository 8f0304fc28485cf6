#ifndef TFGPE_GRID_HPP
#define TFGPE_GRID_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace tfgpe {

std::vector<double> uniform_grid(double a, double b, std::size_t n);

// Geometric grid from a to b (a > 0), n nodes. Used for the outer z-grid,
// which must resolve the z -> 0 singularity.
std::vector<double> log_grid(double a, double b, std::size_t n);

// First and second derivative samples by 3-point stencils; handles
// nonuniform spacing, one-sided second-order stencils at the ends.
void derivative_tables(const std::vector<double>& x, const std::vector<double>& f,
                       std::vector<double>& d1, std::vector<double>& d2);

// Trapezoid weights for \int f dx on a (possibly nonuniform) grid.
std::vector<double> trapezoid_weights(const std::vector<double>& x);

// A pair of radial fields on a shared grid, plus the metadata needed to
// interpret them (eps, beta, truncation orders or the tag "direct").
struct RadialState {
    std::vector<double> grid;   // strictly increasing, grid.front() == 0
    std::vector<double> eta1;
    std::vector<double> eta2;
    double eps = 0.0;
    double beta = 0.0;
    int orderM = -1, orderN = -1, orderL = -1;
    std::string tag;            // "direct", "ansatz", "tf", ...
};

}  // namespace tfgpe

#endif
