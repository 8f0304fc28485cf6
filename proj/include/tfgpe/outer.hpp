#ifndef TFGPE_OUTER_HPP
#define TFGPE_OUTER_HPP

#include <utility>
#include <vector>

#include "tfgpe/model.hpp"
#include "tfgpe/tabulated.hpp"

namespace tfgpe {

struct OuterOptions {
    double z_min_frac = 1e-5;    // z_min = frac * R1^2
    std::size_t n_points = 4001;
};

// One order of the bulk expansion, with the fitted leading near-origin
// coefficients (omega_m ~ w z^{1/2-3m}, tau_m ~ t z^{1-3m}).
struct OuterTerm {
    TabulatedFunction omega, tau;
    double lead_omega = 0.0, lead_tau = 0.0;
};

class OuterExpansion {
  public:
    OuterExpansion(ModelParams params, int order, const OuterOptions& opt = {});

    const ModelParams& params() const { return params_; }
    int order() const { return order_; }
    double z_min() const { return z_min_; }
    const std::vector<double>& z_grid() const { return terms_[0].omega.grid(); }
    const OuterTerm& term(int m) const { return terms_[std::size_t(m)]; }

    // Guarded single-term evaluation; throws NearOriginBlowup below z_min.
    double omega(int m, double z) const;
    double tau(int m, double z) const;

    // Truncated sums sum_{m<=M} eps^{2m} omega_m(z) (resp. tau).
    double omega_sum(int M, double eps, double z) const;
    double tau_sum(int M, double eps, double z) const;

  private:
    ModelParams params_;
    int order_;
    double z_min_;
    std::vector<OuterTerm> terms_;
};

// Spec operations, exposed for tests: the closed-form order-0 pair and
// one recursion step from the existing terms.
std::pair<TabulatedFunction, TabulatedFunction>
outer_order0(const ModelParams& p, const std::vector<double>& z);
OuterTerm outer_next(const ModelParams& p, int m, const std::vector<OuterTerm>& previous);

// Sup over z-grid nodes in [z_lo, R1^2] of the residual of the truncated
// pair in the two bulk equations. Exact cancellation at the stencil
// level makes this the reference residual-order probe.
std::pair<double, double> outer_residual_sup(const OuterExpansion& outer, int M,
                                             double eps, double z_lo);

}  // namespace tfgpe

#endif
