#ifndef TFGPE_PAINLEVE_HPP
#define TFGPE_PAINLEVE_HPP

#include <vector>

#include "tfgpe/model.hpp"
#include "tfgpe/rational.hpp"
#include "tfgpe/tabulated.hpp"

namespace tfgpe {

struct HmOptions {
    double y_left = 12.0;        // domain [-y_left, y_right]
    double y_right = 40.0;
    std::size_t n_points = 20001;
    double newton_tol = 1e-11;
    int max_newton = 60;
};

// Hastings-McLeod solution of 4 g'' + y g - g^3 = 0 connecting the
// Airy-type decay at -inf to sqrt(y) at +inf. Damped Newton on central
// differences; boundary values pinned to the truncated asymptotics
// (3 series terms on the right, leading Airy form on the left).
TabulatedFunction hastings_mcleod(const HmOptions& opt = {});

// Coefficients a_0..a_N of gamma0(y) ~ y^{1/2} sum a_n y^{-3n}, exact.
struct HmSeries {
    std::vector<Rational> coeffs;
};
HmSeries hm_series(int N);

// W_0 = 3 gamma0^2 - y.
TabulatedFunction w0(const TabulatedFunction& gamma0);

// n-th correction: solves -4 g_n'' + W_0 g_n = F_n with decaying ends,
// F_n built from the stored derivative tables of the history
// {gamma_0 .. gamma_{n-1}}.
TabulatedFunction painleve_correction(int n, int d,
                                      const std::vector<TabulatedFunction>& history);

// Scaled second-turning-point profile
// mu_n(y2) = R2^{1/3} (2 alpha2)^{-1/2} R2^{-4n/3} gamma_n(y2 / R2^{2/3}).
TabulatedFunction mu_n(const ModelParams& p, int n, const TabulatedFunction& gamma_n);

// Sup of the residual of the second bulk equation for the pure state
// (0, eps^{1/3} mu) with mu truncated at order L, over table nodes with
// y2 <= y2_max. Used by the residual-order harness.
double mu_equation_residual_sup(const ModelParams& p,
                                const std::vector<TabulatedFunction>& gammas,
                                int L, double eps, double y2_max);

}  // namespace tfgpe

#endif
