#ifndef TFGPE_MODEL_HPP
#define TFGPE_MODEL_HPP

#include <utility>

#include "tfgpe/grid.hpp"

namespace tfgpe {

// Couplings, turning radii, dimension, and every derived constant the
// rest of the code needs. Immutable after derive_params; derived fields
// are computed once here and nowhere else.
struct ModelParams {
    double alpha0 = 0, alpha1 = 0, alpha2 = 0;
    double R1 = 0, R2 = 0;
    int d = 1;

    double Gamma1 = 0, Gamma2 = 0, Gamma12 = 0;
    double mu1 = 0, mu2 = 0;
    double lambda_minus1 = 0;   // (R2^2 - R1^2) / (2 alpha2)

    double R1sq() const { return R1 * R1; }
    double R2sq() const { return R2 * R2; }
    double dR() const { return R2 * R2 - R1 * R1; }
};

// |S^{d-1}|: 2, 2*pi, 4*pi for d = 1, 2, 3.
double surface_area(int d);

// Validates the disk-supported regime and populates the derived constants.
// Throws InvalidRegime / DegenerateCase per the regime checks.
ModelParams derive_params(double alpha0, double alpha1, double alpha2,
                          double R1, double R2, int d);

// Thomas-Fermi pair (eta10, eta20) at radius r; compactly supported.
std::pair<double, double> tf_profile(const ModelParams& p, double r);

// Residual of the eps = 0 system at radius r for given field values;
// used by tests to check the TF pair algebraically.
std::pair<double, double> sys0_residual(const ModelParams& p, double r,
                                        double eta1, double eta2);

// Two-component Gross-Pitaevskii energy in radial coordinates.
// Gradient terms are cell-wise finite differences, everything else is
// trapezoid quadrature against |S^{d-1}| r^{d-1} dr.
double gp_energy(const ModelParams& p, const RadialState& state, double eps);

// TF pair sampled on a grid (a convenient solver/ansatz seed).
RadialState tf_state(const ModelParams& p, const std::vector<double>& grid,
                     double eps, double beta);

}  // namespace tfgpe

#endif
