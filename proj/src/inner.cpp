#include "tfgpe/inner.hpp"

#include <cmath>
#include <string>

#include "tfgpe/errors.hpp"
#include "tfgpe/grid.hpp"
#include "tfgpe/linalg.hpp"
#include "tfgpe/painleve.hpp"

namespace tfgpe {

namespace {

// a_1, a_2 of the Hastings-McLeod series, used for exact subleading tails
constexpr double kA1 = -0.5;
constexpr double kA2 = -73.0 / 8.0;

double pow_int(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

}  // namespace

LeadingCoefficients leading_coefficients(const ModelParams& p, int n) {
    if (n < 1) throw std::invalid_argument("leading_coefficients: n >= 1");
    const double D = p.dR();
    const double G1 = p.Gamma1, G2 = p.Gamma2, G12 = p.Gamma12;
    const double a0 = p.alpha0, a1 = p.alpha1, a2 = p.alpha2;
    LeadingCoefficients c;
    if (n == 1) {
        c.F = std::sqrt(G2 / (2.0 * a1 * G12)) * (1.0 - double(p.d));
        c.N = c.F / (2.0 * G2);
        c.L = a0 * (double(p.d) - 1.0) / (2.0 * a1 * a2 * G12);
        c.D = 0.0;
        c.Dt = 0.0;
        c.Lt = 0.0;
        return c;
    }
    const double q = -G1 / (G12 * D);
    const double A = G12 * D * double(n + p.d - 2) + G1 * p.R1sq() * double(n - 1);
    c.D = -pow_int(q, n) * D * D * A / (4.0 * a2 * a2 * G1);
    c.N = pow_int(q, n) * a0 * A / (2.0 * a2 * G1 * std::sqrt(2.0 * a1 * G12 * G2));
    c.L = -pow_int(q, n) * A / (2.0 * a2 * G1 * G12);
    c.F = -(4.0 * a0 * a2 / (D * D)) * std::sqrt(G2 / (2.0 * a1 * G12)) * c.D;
    const double At = double(p.d - 2 + n) * D + double(n - 1) * p.R1sq();
    const double sgn = (n % 2 == 0) ? -1.0 : 1.0;   // (-1)^{n+1}
    c.Dt = sgn * At / (4.0 * a2 * a2 * pow_int(D, n - 2));
    c.Lt = 2.0 * a2 * c.Dt / (D * D);
    return c;
}

TabulatedFunction nu0(const ModelParams& p, const TabulatedFunction& gamma0) {
    const double c = std::pow(p.R1, 2.0 / 3.0) / std::cbrt(p.Gamma2);   // y1 = c * y
    const double K = std::pow(p.R1, 1.0 / 3.0) * std::cbrt(p.Gamma2)
                   / std::sqrt(2.0 * p.alpha1 * p.Gamma12);
    const auto& y = gamma0.grid();
    std::vector<double> gy(y.size()), v(y.size()), d1(y.size()), d2(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        gy[i] = c * y[i];
        v[i] = K * gamma0.values()[i];
        d1[i] = K / c * gamma0.d1()[i];
        d2[i] = K / (c * c) * gamma0.d2()[i];
    }
    const double N00 = std::sqrt(p.Gamma2 / (2.0 * p.alpha1 * p.Gamma12));
    const double rg = p.R1sq() / p.Gamma2;
    auto right = TailDescriptor::power({N00, N00 * rg * kA1, N00 * rg * rg * kA2},
                                       {0.5, -2.5, -5.5});
    auto left = TailDescriptor::airy(K / std::sqrt(M_PI), 1.0 / c);
    return TabulatedFunction::from_tables(gy, v, d1, d2, left, right, 1e-6);
}

namespace {

struct LamView {
    // indexable over k = -1 .. n-1 with lambda_{-1} constant
    const std::vector<TabulatedFunction>* lam;
    double lam_m1;
    double value(int k, std::size_t i) const {
        return k < 0 ? lam_m1 : (*lam)[std::size_t(k)].values()[i];
    }
    double d1(int k, std::size_t i) const {
        return k < 0 ? 0.0 : (*lam)[std::size_t(k)].d1()[i];
    }
    double d2(int k, std::size_t i) const {
        return k < 0 ? 0.0 : (*lam)[std::size_t(k)].d2()[i];
    }
};

std::vector<double> delta_values(const ModelParams& p, int n,
                                 const std::vector<TabulatedFunction>& nu,
                                 const LamView& L, const std::vector<double>& y) {
    std::vector<double> out(y.size(), 0.0);
    const double R1s = p.R1sq(), DR = p.dR();
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double yi = y[i];
        double s = 0.0;
        for (int n1 = -1; n1 <= n - 2; ++n1) {                    // n1 + n2 = n - 3
            const int n2 = n - 3 - n1;
            if (n2 < -1 || n2 > n - 1) continue;
            s += -double(p.d) * L.d1(n1, i) * L.value(n2, i)
               - 2.0 * yi * L.d2(n1, i) * L.value(n2, i)
               + yi * L.d1(n1, i) * L.d1(n2, i);
        }
        for (int n1 = -1; n1 <= n - 1; ++n1) {                    // n1 + n2 = n - 2
            const int n2 = n - 2 - n1;
            if (n2 < -1 || n2 > n - 1) continue;
            s += 2.0 * R1s * L.d2(n1, i) * L.value(n2, i)
               - R1s * L.d1(n1, i) * L.d1(n2, i)
               + yi * L.value(n1, i) * L.value(n2, i);
        }
        for (int n1 = 0; n1 <= n - 1; ++n1) {                     // n1 + n2 = n - 1
            const int n2 = n - 1 - n1;
            if (n2 < 0 || n2 > n - 1) continue;
            s += DR * L.value(n1, i) * L.value(n2, i);
        }
        for (int n1 = -1; n1 <= n - 1; ++n1)                      // triples, sum n - 2
            for (int n2 = -1; n2 <= n - 1; ++n2) {
                const int n3 = n - 2 - n1 - n2;
                if (n3 < -1 || n3 > n - 1) continue;
                s += -2.0 * p.alpha2 * L.value(n1, i) * L.value(n2, i) * L.value(n3, i);
            }
        for (int n3 = 0; n3 <= n - 1; ++n3)                       // lam lam nu nu, sum n - 2
            for (int n4 = 0; n4 <= n - 1; ++n4)
                for (int n1 = -1; n1 <= n - 1; ++n1) {
                    const int n2 = n - 2 - n1 - n3 - n4;
                    if (n2 < -1 || n2 > n - 1) continue;
                    s += -2.0 * p.alpha0 * L.value(n1, i) * L.value(n2, i)
                       * nu[std::size_t(n3)].values()[i] * nu[std::size_t(n4)].values()[i];
                }
        out[i] = s;
    }
    return out;
}

std::vector<double> f_values(const ModelParams& p, int n,
                             const std::vector<TabulatedFunction>& nu,
                             const LamView& L, const std::vector<double>& delta,
                             const std::vector<double>& y) {
    std::vector<double> out(y.size(), 0.0);
    const double DR = p.dR();
    const double cdel = -4.0 * p.alpha0 * p.alpha2 / (DR * DR);
    for (std::size_t i = 0; i < y.size(); ++i) {
        double s = cdel * nu[0].values()[i] * delta[i]
                 - 2.0 * double(p.d) * nu[std::size_t(n - 1)].d1()[i]
                 - 4.0 * y[i] * nu[std::size_t(n - 1)].d2()[i];
        double cube = 0.0;
        for (int n1 = 0; n1 <= n - 1; ++n1)
            for (int n2 = 0; n2 <= n - 1; ++n2) {
                const int n3 = n - n1 - n2;
                if (n3 < 0 || n3 > n - 1) continue;
                cube += nu[std::size_t(n1)].values()[i] * nu[std::size_t(n2)].values()[i]
                      * nu[std::size_t(n3)].values()[i];
            }
        s -= 2.0 * p.alpha1 * cube;
        double mix = 0.0;
        for (int n1 = 1; n1 <= n - 1; ++n1) {
            const int n2 = n - n1;
            if (n2 < 1 || n2 > n - 1) continue;
            mix += L.value(n1, i) * nu[std::size_t(n2)].values()[i];
        }
        s -= 2.0 * p.alpha0 * mix;
        out[i] = s;
    }
    return out;
}

}  // namespace

InnerHierarchy::InnerHierarchy(ModelParams params, const TabulatedFunction& gamma0, int N,
                               const InnerOptions& opt)
    : params_(params) {
    nu_.push_back(nu0(params_, gamma0));
    const auto& y = nu_[0].grid();

    // W = 6 alpha1 Gamma12 nu0^2 - Gamma2 y1; scaled copy of W0
    {
        std::vector<double> w(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) {
            const double v = nu_[0].values()[i];
            w[i] = 6.0 * params_.alpha1 * params_.Gamma12 * v * v - params_.Gamma2 * y[i];
        }
        auto right = TailDescriptor::power({2.0 * params_.Gamma2, -3.0 * params_.R1sq()},
                                           {1.0, -2.0});
        auto left = TailDescriptor::power({params_.Gamma2}, {1.0});
        W_ = TabulatedFunction::from_values(y, w, left, right, 1e-4);
        double wmin = w[0];
        for (double v : w) wmin = std::min(wmin, v);
        if (!(wmin > 0.0)) throw SingularSystem("inner: W is not positive");
    }

    // lambda_0 = y1/(2 alpha2) - (alpha0/alpha2) nu0^2
    {
        std::vector<double> l0(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) {
            const double v = nu_[0].values()[i];
            l0[i] = y[i] / (2.0 * params_.alpha2) - params_.alpha0 / params_.alpha2 * v * v;
        }
        const double L00 = params_.Gamma1 / (2.0 * params_.alpha2 * params_.Gamma12);
        const double L01 = params_.alpha0 * params_.R1sq()
                         / (2.0 * params_.alpha1 * params_.alpha2 * params_.Gamma12);
        auto right = TailDescriptor::power({L00, L01}, {1.0, -2.0});
        auto left = TailDescriptor::power({-1.0 / (2.0 * params_.alpha2)}, {1.0});
        lam_.push_back(TabulatedFunction::from_values(y, l0, left, right, 1e-5));
    }

    order_ = 0;
    for (int n = 1; n <= N; ++n) push_step(n, opt.bvp_tol);
}

void InnerHierarchy::push_step(int n, double bvp_tol) {
    const auto& y = nu_[0].grid();
    const std::size_t m = y.size();
    const double h = y[1] - y[0];
    LamView L{&lam_, params_.lambda_minus1};

    auto delta = delta_values(params_, n, nu_, L, y);
    auto F = f_values(params_, n, nu_, L, delta, y);

    const auto lead = leading_coefficients(params_, n);

    // T nu_n = F_n, values pinned to the decaying left tail and the
    // leading right tail term N_{n,0} y^{n-5/2}
    std::vector<double> diag(m), sub(m - 1, 0.0), sup(m - 1, 0.0), rhs(m, 0.0);
    const double R1s = params_.R1sq();
    diag.front() = 1.0;
    diag.back() = 1.0;
    rhs.front() = 0.0;
    rhs.back() = lead.N * std::pow(y.back(), double(n) - 2.5);
    for (std::size_t i = 1; i + 1 < m; ++i) {
        diag[i] = 8.0 * R1s / (h * h) + W_.values()[i];
        sub[i - 1] = -4.0 * R1s / (h * h);
        sup[i] = -4.0 * R1s / (h * h);
        rhs[i] = F[i];
    }
    auto nun = solve_tridiagonal(sub, diag, sup, rhs);

    // residual audit of the discrete BVP
    {
        double worst = 0.0, fmax = 1.0;
        for (double v : F) fmax = std::max(fmax, std::abs(v));
        for (std::size_t i = 1; i + 1 < m; ++i) {
            const double lhs = -4.0 * R1s * (nun[i - 1] - 2.0 * nun[i] + nun[i + 1]) / (h * h)
                             + W_.values()[i] * nun[i];
            worst = std::max(worst, std::abs(lhs - F[i]));
        }
        if (worst > bvp_tol * fmax)
            throw SingularSystem("inner step " + std::to_string(n) + ": BVP residual "
                                 + std::to_string(worst));
    }

    std::vector<double> lamn(m);
    const double cdel = 2.0 * params_.alpha2 / (params_.dR() * params_.dR());
    for (std::size_t i = 0; i < m; ++i)
        lamn[i] = -2.0 * params_.alpha0 / params_.alpha2 * nu_[0].values()[i] * nun[i]
                + cdel * delta[i];

    TailDescriptor nu_right = std::abs(lead.N) > 0.0
        ? TailDescriptor::power({lead.N}, {double(n) - 2.5})
        : TailDescriptor::zero();
    TailDescriptor lam_right = std::abs(lead.L) > 0.0
        ? TailDescriptor::power({lead.L}, {double(n) - 2.0})
        : TailDescriptor::zero();
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;   // (-1)^{n-2}
    TailDescriptor lam_left = std::abs(lead.Lt) > 0.0
        ? TailDescriptor::power({lead.Lt * sgn}, {double(n) - 2.0})
        : TailDescriptor::zero();

    nu_.push_back(TabulatedFunction::from_values(y, nun, TailDescriptor::zero(), nu_right,
                                                 1e-5));
    lam_.push_back(TabulatedFunction::from_values(y, lamn, lam_left, lam_right, 1e-2));
    delta_.push_back(std::move(delta));
    F_.push_back(std::move(F));
    order_ = n;
}

double InnerHierarchy::nu_sum(int N, double eps, double y1) const {
    double s = 0.0;
    for (int n = 0; n <= N; ++n)
        s += std::pow(eps, 2.0 * double(n) / 3.0) * nu_[std::size_t(n)].eval(y1);
    return s;
}

double InnerHierarchy::lambda_sum(int N, double eps, double y1) const {
    double s = params_.lambda_minus1 * std::pow(eps, -2.0 / 3.0);
    for (int n = 0; n <= N; ++n)
        s += std::pow(eps, 2.0 * double(n) / 3.0) * lam_[std::size_t(n)].eval(y1);
    return s;
}

std::pair<TabulatedFunction, TabulatedFunction>
inner_step(const ModelParams& p, int n, const TabulatedFunction& gamma0,
           const InnerOptions& opt) {
    InnerHierarchy h(p, gamma0, n, opt);
    return {h.nu(n), h.lam(n)};
}

std::pair<double, double> inner_residual_sup(const InnerHierarchy& h, int N,
                                             double eps, double beta) {
    const auto& p = h.params();
    const auto& y = h.y_grid();
    const double e23 = std::pow(eps, 2.0 / 3.0);
    const double band = 2.0 * std::pow(eps, beta - 2.0 / 3.0);
    double sup1 = 0.0, sup2 = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (std::abs(y[i]) > band) continue;
        double nu = 0.0, nu2 = 0.0, nu1 = 0.0, lh = 0.0, lh1 = 0.0, lh2 = 0.0;
        for (int n = 0; n <= N; ++n) {
            const double w = std::pow(eps, 2.0 * double(n) / 3.0);
            nu += w * h.nu(n).values()[i];
            nu1 += w * h.nu(n).d1()[i];
            nu2 += w * h.nu(n).d2()[i];
            lh += w * h.lam(n).values()[i];
            lh1 += w * h.lam(n).d1()[i];
            lh2 += w * h.lam(n).d2()[i];
        }
        const double r2 = p.R1sq() - e23 * y[i];
        const double E1 = eps * (4.0 * r2 * nu2 - 2.0 * double(p.d) * e23 * nu1 + y[i] * nu
                                 - 2.0 * p.alpha1 * nu * nu * nu - 2.0 * p.alpha0 * lh * nu);
        const double Lam = p.lambda_minus1 + e23 * lh;
        const double Lam1 = e23 * lh1;
        const double Lam2 = e23 * lh2;
        const double br = 2.0 * r2 * Lam * Lam2 - r2 * Lam1 * Lam1
                        - double(p.d) * e23 * Lam * Lam1 + y[i] * Lam * Lam
                        - 2.0 * p.alpha2 * Lam * Lam * lh - 2.0 * p.alpha0 * nu * nu * Lam * Lam;
        const double E2 = std::pow(eps, 2.0 / 3.0) * std::pow(Lam, -1.5) * br;
        sup1 = std::max(sup1, std::abs(E1));
        sup2 = std::max(sup2, std::abs(E2));
    }
    return {sup1, sup2};
}

}  // namespace tfgpe
