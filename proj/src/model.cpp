#include "tfgpe/model.hpp"

#include <cmath>
#include <string>

#include "tfgpe/errors.hpp"

namespace tfgpe {

double surface_area(int d) {
    switch (d) {
        case 1: return 2.0;
        case 2: return 2.0 * M_PI;
        case 3: return 4.0 * M_PI;
    }
    throw std::invalid_argument("surface_area: d must be 1, 2 or 3");
}

ModelParams derive_params(double alpha0, double alpha1, double alpha2,
                          double R1, double R2, int d) {
    if (!(alpha0 > 0.0) || !(alpha1 > 0.0) || !(alpha2 > 0.0))
        throw std::invalid_argument("derive_params: couplings must be positive");
    if (!(R1 > 0.0) || !(R2 > 0.0))
        throw std::invalid_argument("derive_params: radii must be positive");
    if (d < 1 || d > 3)
        throw std::invalid_argument("derive_params: d must be 1, 2 or 3");
    if (R1 == R2)
        throw DegenerateCase("R1 == R2 reduces to the scalar problem; rejected");
    if (R1 > R2)
        throw std::invalid_argument("derive_params: need R1 < R2");

    ModelParams p;
    p.alpha0 = alpha0;
    p.alpha1 = alpha1;
    p.alpha2 = alpha2;
    p.R1 = R1;
    p.R2 = R2;
    p.d = d;
    p.Gamma1 = 1.0 - alpha0 / alpha1;
    p.Gamma2 = 1.0 - alpha0 / alpha2;
    p.Gamma12 = 1.0 - alpha0 * alpha0 / (alpha1 * alpha2);

    if (p.Gamma12 == 0.0)
        throw DegenerateCase("Gamma12 == 0 reduces to the scalar problem; rejected");
    if (p.Gamma2 <= 0.0)
        throw InvalidRegime("Gamma2 = " + std::to_string(p.Gamma2) + " <= 0");
    if (p.Gamma12 < 0.0)
        throw InvalidRegime("Gamma12 = " + std::to_string(p.Gamma12) + " < 0");
    if (!(R2 * R2 > (alpha0 / alpha1) * (p.Gamma2 / p.Gamma12) * R1 * R1))
        throw InvalidRegime("disk condition R2^2 > (a0/a1)(G2/G12) R1^2 fails");

    p.mu2 = R2 * R2;
    p.mu1 = (alpha0 / alpha2) * p.mu2 + p.Gamma2 * R1 * R1;
    p.lambda_minus1 = (R2 * R2 - R1 * R1) / (2.0 * alpha2);
    return p;
}

std::pair<double, double> tf_profile(const ModelParams& p, double r) {
    const double r2 = r * r;
    double eta1 = 0.0, eta2 = 0.0;
    if (r2 <= p.R1sq()) {
        eta1 = std::sqrt(p.Gamma2 / (2.0 * p.alpha1 * p.Gamma12) * (p.R1sq() - r2));
        eta2 = std::sqrt(p.dR() / (2.0 * p.alpha2)
                         + p.Gamma1 / (2.0 * p.alpha2 * p.Gamma12) * (p.R1sq() - r2));
    } else if (r2 <= p.R2sq()) {
        eta2 = std::sqrt((p.R2sq() - r2) / (2.0 * p.alpha2));
    }
    return {eta1, eta2};
}

std::pair<double, double> sys0_residual(const ModelParams& p, double r,
                                        double eta1, double eta2) {
    const double r2 = r * r;
    const double res1 = (p.mu1 - r2) * eta1 - 2.0 * p.alpha1 * eta1 * eta1 * eta1
                        - 2.0 * p.alpha0 * eta2 * eta2 * eta1;
    const double res2 = (p.mu2 - r2) * eta2 - 2.0 * p.alpha2 * eta2 * eta2 * eta2
                        - 2.0 * p.alpha0 * eta1 * eta1 * eta2;
    return {res1, res2};
}

double gp_energy(const ModelParams& p, const RadialState& state, double eps) {
    const std::size_t n = state.grid.size();
    if (state.eta1.size() != n || state.eta2.size() != n || n < 2)
        throw GridMismatch("gp_energy: fields and grid sizes differ");

    const double sd = surface_area(p.d);
    double e = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double rl = state.grid[i], rr = state.grid[i + 1];
        const double h = rr - rl;
        // exact cell measure of |S^{d-1}| r^{d-1} dr
        const double cell = sd * (std::pow(rr, p.d) - std::pow(rl, p.d)) / double(p.d);
        const double g1 = (state.eta1[i + 1] - state.eta1[i]) / h;
        const double g2 = (state.eta2[i + 1] - state.eta2[i]) / h;
        e += eps * eps * (g1 * g1 + g2 * g2) * cell;
    }

    const auto w = trapezoid_weights(state.grid);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = state.grid[i];
        const double m = sd * std::pow(r, p.d - 1) * w[i];
        const double u1 = state.eta1[i] * state.eta1[i];
        const double u2 = state.eta2[i] * state.eta2[i];
        e += m * ((r * r - p.mu1) * u1 + (r * r - p.mu2) * u2
                  + p.alpha1 * u1 * u1 + p.alpha2 * u2 * u2 + 2.0 * p.alpha0 * u1 * u2);
    }
    return e;
}

RadialState tf_state(const ModelParams& p, const std::vector<double>& grid,
                     double eps, double beta) {
    RadialState s;
    s.grid = grid;
    s.eta1.resize(grid.size());
    s.eta2.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto [e1, e2] = tf_profile(p, grid[i]);
        s.eta1[i] = e1;
        s.eta2[i] = e2;
    }
    s.eps = eps;
    s.beta = beta;
    s.tag = "tf";
    return s;
}

}  // namespace tfgpe
