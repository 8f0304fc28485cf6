#ifndef TFGPE_INNER_HPP
#define TFGPE_INNER_HPP

#include <utility>
#include <vector>

#include "tfgpe/model.hpp"
#include "tfgpe/tabulated.hpp"

namespace tfgpe {

struct InnerOptions {
    // domain [-left_factor * c, right_factor * c], c = R1^{2/3} / Gamma2^{1/3};
    // the grid is the rescaled Hastings-McLeod grid, so these factors are
    // taken from the gamma0 table rather than set here.
    double bvp_tol = 1e-8;
};

// Closed-form leading asymptotic coefficients of the first-turning-point
// hierarchy at order n (right tails N_{n,0}, L_{n,0}; left tail Lt_{n,0};
// internal delta/F coefficients for the consistency-chain checks).
struct LeadingCoefficients {
    double N = 0.0;    // nu_n ~ N y1^{n-5/2}   (y1 -> +inf)
    double L = 0.0;    // lam_n ~ L y1^{n-2}    (y1 -> +inf)
    double Lt = 0.0;   // lam_n ~ Lt y1^{n-2}   (y1 -> -inf)
    double D = 0.0;    // delta_n ~ D y1^{n-2}  (y1 -> +inf)
    double Dt = 0.0;   // delta_n ~ Dt y1^{n-2} (y1 -> -inf)
    double F = 0.0;    // F_n ~ F y1^{n-3/2}    (y1 -> +inf)
};
LeadingCoefficients leading_coefficients(const ModelParams& p, int n);

// nu_0 .. nu_N, lambda_{-1}, lambda_0 .. lambda_N, the Schroedinger
// potential W, and the delta_n source tables, all on one y1 grid
// (the rescaled gamma0 grid).
class InnerHierarchy {
  public:
    InnerHierarchy(ModelParams params, const TabulatedFunction& gamma0, int N,
                   const InnerOptions& opt = {});

    const ModelParams& params() const { return params_; }
    int order() const { return order_; }
    double lambda_minus1() const { return params_.lambda_minus1; }
    const std::vector<double>& y_grid() const { return nu_[0].grid(); }

    const TabulatedFunction& nu(int n) const { return nu_[std::size_t(n)]; }
    const TabulatedFunction& lam(int n) const { return lam_[std::size_t(n)]; }
    const TabulatedFunction& W() const { return W_; }
    // delta_n node values, n >= 1
    const std::vector<double>& delta(int n) const { return delta_[std::size_t(n - 1)]; }
    // F_n node values, n >= 1
    const std::vector<double>& F(int n) const { return F_[std::size_t(n - 1)]; }

    // truncated sums at a point (tables + tails beyond the grid)
    double nu_sum(int N, double eps, double y1) const;
    // lambda sum including eps^{-2/3} lambda_{-1}
    double lambda_sum(int N, double eps, double y1) const;

  private:
    void push_step(int n, double bvp_tol);

    ModelParams params_;
    int order_ = 0;
    TabulatedFunction W_;
    std::vector<TabulatedFunction> nu_, lam_;
    std::vector<std::vector<double>> delta_, F_;
};

// nu_0 built from gamma0 by the exact rescaling.
TabulatedFunction nu0(const ModelParams& p, const TabulatedFunction& gamma0);

// One hierarchy step in isolation: (nu_n, lam_n) given the history
// implied by gamma0 (rebuilds orders below n).
std::pair<TabulatedFunction, TabulatedFunction>
inner_step(const ModelParams& p, int n, const TabulatedFunction& gamma0,
           const InnerOptions& opt = {});

// Residual-order probes for the pure inner pair on D1
// (|y1| <= 2 eps^{beta - 2/3}), evaluated at table nodes.
// First equation and second (lambda^{1/2}) equation sups.
std::pair<double, double> inner_residual_sup(const InnerHierarchy& h, int N,
                                             double eps, double beta);

}  // namespace tfgpe

#endif
