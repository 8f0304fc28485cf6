#include "tfgpe/outer.hpp"

#include <cmath>
#include <string>

#include "tfgpe/errors.hpp"
#include "tfgpe/grid.hpp"

namespace tfgpe {

std::pair<TabulatedFunction, TabulatedFunction>
outer_order0(const ModelParams& p, const std::vector<double>& z) {
    const double A = std::sqrt(p.Gamma2 / (2.0 * p.alpha1 * p.Gamma12));
    const double B = p.lambda_minus1;                       // tau0^2 at z = 0
    const double C = p.Gamma1 / (2.0 * p.alpha2 * p.Gamma12);
    std::vector<double> om(z.size()), ta(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        om[i] = A * std::sqrt(z[i]);
        ta[i] = std::sqrt(B + C * z[i]);
    }
    const double sB = std::sqrt(B);
    // Taylor of sqrt(B + Cz) at z = 0, three terms
    auto tau_left = TailDescriptor::power({sB, C / (2.0 * sB), -C * C / (8.0 * B * sB)},
                                          {0.0, 1.0, 2.0});
    auto omega_left = TailDescriptor::power({A}, {0.5});
    auto om_t = TabulatedFunction::from_values(z, om, omega_left, TailDescriptor::none(), 1e-6);
    auto ta_t = TabulatedFunction::from_values(z, ta, tau_left, TailDescriptor::none(), 1e-6);
    return {std::move(om_t), std::move(ta_t)};
}

OuterTerm outer_next(const ModelParams& p, int m, const std::vector<OuterTerm>& previous) {
    if (m < 1 || int(previous.size()) < m)
        throw std::invalid_argument("outer_next: need all terms below m");
    const auto& z = previous[0].omega.grid();
    const std::size_t n = z.size();
    const auto& om0 = previous[0].omega;
    const auto& ta0 = previous[0].tau;

    std::vector<double> om(n), ta(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double w0 = om0.values()[i], t0 = ta0.values()[i];
        const double det = p.alpha1 * p.alpha2 * p.Gamma12 * w0 * w0 * t0 * t0;
        if (!(std::abs(det) > 0.0))
            throw SingularSystem("outer recursion matrix singular at z = " + std::to_string(z[i]));

        double cube_o = 0.0, mix_o = 0.0, cube_t = 0.0, mix_t = 0.0;
        for (int m1 = 0; m1 < m; ++m1)
            for (int m2 = 0; m2 < m; ++m2) {
                const int m3 = m - m1 - m2;
                if (m3 < 0 || m3 >= m) continue;
                const double o1 = previous[std::size_t(m1)].omega.values()[i];
                const double o2 = previous[std::size_t(m2)].omega.values()[i];
                const double o3 = previous[std::size_t(m3)].omega.values()[i];
                const double t1 = previous[std::size_t(m1)].tau.values()[i];
                const double t2 = previous[std::size_t(m2)].tau.values()[i];
                const double t3 = previous[std::size_t(m3)].tau.values()[i];
                cube_o += o1 * o2 * o3;
                mix_o += o1 * t2 * t3;
                cube_t += t1 * t2 * t3;
                mix_t += o1 * o2 * t3;
            }
        const auto& prevo = previous[std::size_t(m - 1)].omega;
        const auto& prevt = previous[std::size_t(m - 1)].tau;
        const double u = -0.5 * double(p.d) * prevo.d1()[i] - (z[i] - p.R1sq()) * prevo.d2()[i]
                       - 0.5 * p.alpha1 * cube_o - 0.5 * p.alpha0 * mix_o;
        const double v = -0.5 * double(p.d) * prevt.d1()[i] - (z[i] - p.R1sq()) * prevt.d2()[i]
                       - 0.5 * p.alpha2 * cube_t - 0.5 * p.alpha0 * mix_t;
        om[i] = (p.alpha2 * t0 * t0 * u - p.alpha0 * w0 * t0 * v) / det;
        ta[i] = (-p.alpha0 * w0 * t0 * u + p.alpha1 * w0 * w0 * v) / det;
    }

    OuterTerm term;
    const double eo = 0.5 - 3.0 * double(m);
    const double et = 1.0 - 3.0 * double(m);
    term.lead_omega = om.front() / std::pow(z.front(), eo);
    term.lead_tau = ta.front() / std::pow(z.front(), et);
    auto left_o = TailDescriptor::power({term.lead_omega}, {eo});
    auto left_t = TailDescriptor::power({term.lead_tau}, {et});
    term.omega = TabulatedFunction::from_values(z, om, left_o, TailDescriptor::none(), 1e-4);
    term.tau = TabulatedFunction::from_values(z, ta, left_t, TailDescriptor::none(), 1e-4);
    return term;
}

OuterExpansion::OuterExpansion(ModelParams params, int order, const OuterOptions& opt)
    : params_(params), order_(order) {
    z_min_ = opt.z_min_frac * params_.R1sq();
    const auto z = log_grid(z_min_, params_.R1sq(), opt.n_points);
    auto [om0, ta0] = outer_order0(params_, z);
    OuterTerm t0;
    t0.omega = std::move(om0);
    t0.tau = std::move(ta0);
    t0.lead_omega = std::sqrt(params_.Gamma2 / (2.0 * params_.alpha1 * params_.Gamma12));
    t0.lead_tau = params_.Gamma1 / (2.0 * params_.alpha2 * params_.Gamma12)
                  / (2.0 * std::sqrt(params_.lambda_minus1));   // t_{0,0}, coefficient of z
    terms_.push_back(std::move(t0));
    for (int m = 1; m <= order; ++m) terms_.push_back(outer_next(params_, m, terms_));
}

double OuterExpansion::omega(int m, double z) const {
    if (z < z_min_)
        throw NearOriginBlowup("omega_" + std::to_string(m) + " requested at z = "
                               + std::to_string(z) + " < z_min");
    return terms_[std::size_t(m)].omega.eval(z);
}

double OuterExpansion::tau(int m, double z) const {
    if (z < z_min_)
        throw NearOriginBlowup("tau_" + std::to_string(m) + " requested at z = "
                               + std::to_string(z) + " < z_min");
    return terms_[std::size_t(m)].tau.eval(z);
}

double OuterExpansion::omega_sum(int M, double eps, double z) const {
    double s = 0.0;
    for (int m = 0; m <= M; ++m) s += std::pow(eps, 2.0 * m) * omega(m, z);
    return s;
}

double OuterExpansion::tau_sum(int M, double eps, double z) const {
    double s = 0.0;
    for (int m = 0; m <= M; ++m) s += std::pow(eps, 2.0 * m) * tau(m, z);
    return s;
}

std::pair<double, double> outer_residual_sup(const OuterExpansion& outer, int M,
                                             double eps, double z_lo) {
    const auto& p = outer.params();
    const auto& z = outer.z_grid();
    double sup1 = 0.0, sup2 = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] < z_lo) continue;
        double w = 0.0, w1 = 0.0, w2 = 0.0, t = 0.0, t1 = 0.0, t2 = 0.0;
        for (int m = 0; m <= M; ++m) {
            const double e = std::pow(eps, 2.0 * m);
            const auto& term = outer.term(m);
            w += e * term.omega.values()[i];
            w1 += e * term.omega.d1()[i];
            w2 += e * term.omega.d2()[i];
            t += e * term.tau.values()[i];
            t1 += e * term.tau.d1()[i];
            t2 += e * term.tau.d2()[i];
        }
        const double lap_w = 4.0 * (p.R1sq() - z[i]) * w2 - 2.0 * double(p.d) * w1;
        const double lap_t = 4.0 * (p.R1sq() - z[i]) * t2 - 2.0 * double(p.d) * t1;
        const double r1 = eps * eps * lap_w + ((p.alpha0 / p.alpha2) * p.dR() + z[i]) * w
                        - 2.0 * p.alpha1 * w * w * w - 2.0 * p.alpha0 * t * t * w;
        const double r2 = eps * eps * lap_t + (p.dR() + z[i]) * t
                        - 2.0 * p.alpha2 * t * t * t - 2.0 * p.alpha0 * w * w * t;
        sup1 = std::max(sup1, std::abs(r1));
        sup2 = std::max(sup2, std::abs(r2));
    }
    return {sup1, sup2};
}

}  // namespace tfgpe
