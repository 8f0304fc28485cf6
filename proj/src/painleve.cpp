#include "tfgpe/painleve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tfgpe/errors.hpp"
#include "tfgpe/grid.hpp"
#include "tfgpe/linalg.hpp"

namespace tfgpe {

namespace {

double airy_form(double y) {
    // leading left asymptote: exp(-(1/3)(-y)^{3/2}) / (sqrt(pi) (-y)^{1/4})
    const double a = -y;
    const double e = -std::pow(a, 1.5) / 3.0;
    if (e < -700.0) return 0.0;
    return std::exp(e) / (std::sqrt(M_PI) * std::pow(a, 0.25));
}

double hm_series_value(double y, const std::vector<double>& a) {
    double s = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) s += a[n] * std::pow(y, -3.0 * double(n));
    return std::sqrt(y) * s;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

HmSeries hm_series(int N) {
    if (N < 0) throw std::invalid_argument("hm_series: N >= 0");
    HmSeries s;
    s.coeffs.reserve(std::size_t(N) + 1);
    s.coeffs.emplace_back(1);
    for (int n = 0; n < N; ++n) {
        // a_{n+1} = 2(9n^2 - 1/4) a_n - (1/2) sum_{n1+n2+n3=n+1, ni<=n} a_{n1} a_{n2} a_{n3}
        Rational next = Rational(2) * (Rational(9 * n * n) - Rational(1, 4)) * s.coeffs[n];
        Rational corr(0);
        for (int n1 = 0; n1 <= n; ++n1)
            for (int n2 = 0; n2 <= n; ++n2) {
                const int n3 = n + 1 - n1 - n2;
                if (n3 < 0 || n3 > n) continue;
                corr = corr + s.coeffs[n1] * s.coeffs[n2] * s.coeffs[n3];
            }
        next = next - Rational(1, 2) * corr;
        s.coeffs.push_back(next);
    }
    return s;
}

TabulatedFunction hastings_mcleod(const HmOptions& opt) {
    if (opt.y_left < 8.0 || opt.y_right < 25.0 || opt.n_points < 2000)
        throw std::invalid_argument("hastings_mcleod: domain too small");

    const auto series = hm_series(2);
    std::vector<double> a(3);
    for (int i = 0; i < 3; ++i) a[std::size_t(i)] = series.coeffs[std::size_t(i)].to_double();

    const auto y = uniform_grid(-opt.y_left, opt.y_right, opt.n_points);
    const std::size_t n = y.size();
    const double h = y[1] - y[0];

    // initial guess: sqrt(max(y,0)) smoothed at the origin
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = std::sqrt(0.5 * (y[i] + std::hypot(y[i], 1.0)));
    const double bc_left = airy_form(y.front());
    const double bc_right = hm_series_value(y.back(), a);
    g.front() = bc_left;
    g.back() = bc_right;

    auto residual = [&](const std::vector<double>& u, std::vector<double>& res) {
        res.assign(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i)
            res[i] = 4.0 * (u[i - 1] - 2.0 * u[i] + u[i + 1]) / (h * h) + y[i] * u[i]
                   - u[i] * u[i] * u[i];
    };

    std::vector<double> res, rhs, diag(n), sub(n - 1), sup(n - 1);
    residual(g, res);
    double rnorm = max_abs(res);
    std::ostringstream trace;
    int iter = 0;
    for (; iter < opt.max_newton && rnorm > opt.newton_tol; ++iter) {
        for (std::size_t i = 0; i < n; ++i) diag[i] = 1.0;
        std::fill(sub.begin(), sub.end(), 0.0);
        std::fill(sup.begin(), sup.end(), 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            diag[i] = -8.0 / (h * h) + y[i] - 3.0 * g[i] * g[i];
            sub[i - 1] = 4.0 / (h * h);
            sup[i] = 4.0 / (h * h);
        }
        rhs = res;
        for (double& v : rhs) v = -v;
        rhs.front() = 0.0;
        rhs.back() = 0.0;
        const auto step = solve_tridiagonal(sub, diag, sup, rhs);

        // backtracking on the residual max norm
        double s = 1.0;
        std::vector<double> trial(n);
        double trial_norm = rnorm;
        while (s >= 1.0 / 1024.0) {
            for (std::size_t i = 0; i < n; ++i) trial[i] = g[i] + s * step[i];
            residual(trial, res);
            trial_norm = max_abs(res);
            if (trial_norm < rnorm * (1.0 - 0.25 * s) || trial_norm < opt.newton_tol) break;
            s *= 0.5;
        }
        trace << "iter " << iter << ": |res| " << rnorm << " -> " << trial_norm
              << " (damping " << s << ")\n";
        if (trial_norm >= rnorm && trial_norm > opt.newton_tol)
            throw NewtonDiverged("hastings_mcleod stalled\n" + trace.str());
        g = trial;
        rnorm = trial_norm;
    }
    if (rnorm > opt.newton_tol)
        throw NewtonDiverged("hastings_mcleod: no convergence\n" + trace.str());

    auto right = TailDescriptor::power({a[0], a[1], a[2]}, {0.5, -2.5, -5.5});
    auto left = TailDescriptor::airy(1.0 / std::sqrt(M_PI), 1.0);
    return TabulatedFunction::from_values(y, g, left, right, 1e-6);
}

TabulatedFunction w0(const TabulatedFunction& gamma0) {
    const auto& y = gamma0.grid();
    std::vector<double> w(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double g = gamma0.values()[i];
        w[i] = 3.0 * g * g - y[i];
    }
    // right: 3y(1 + a1 y^-3)^2 - y = 2y - 3 y^-2 + ...; left: -y + (exp small)
    auto right = TailDescriptor::power({2.0, -3.0}, {1.0, -2.0});
    auto left = TailDescriptor::power({1.0}, {1.0});
    return TabulatedFunction::from_values(y, w, left, right, 1e-4);
}

TabulatedFunction painleve_correction(int n, int d,
                                      const std::vector<TabulatedFunction>& history) {
    if (n < 1) throw std::invalid_argument("painleve_correction: n >= 1");
    if (int(history.size()) < n)
        throw std::invalid_argument("painleve_correction: incomplete history");
    const auto& g0 = history[0];
    const auto& y = g0.grid();
    const std::size_t m = y.size();

    std::vector<double> F(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double cube = 0.0;
        for (int n1 = 0; n1 < n; ++n1)
            for (int n2 = 0; n2 < n; ++n2) {
                const int n3 = n - n1 - n2;
                if (n3 < 0 || n3 >= n) continue;
                cube += history[std::size_t(n1)].values()[i]
                      * history[std::size_t(n2)].values()[i]
                      * history[std::size_t(n3)].values()[i];
            }
        const auto& prev = history[std::size_t(n - 1)];
        F[i] = -cube - 2.0 * double(d) * prev.d1()[i] - 4.0 * y[i] * prev.d2()[i];
    }

    auto solve_pinned = [&](double right_pin) {
        std::vector<double> diag(m), sub(m - 1, 0.0), sup(m - 1, 0.0), rhs(m, 0.0);
        const double h = y[1] - y[0];
        diag.front() = 1.0;
        diag.back() = 1.0;
        rhs.front() = 0.0;
        rhs.back() = right_pin;
        for (std::size_t i = 1; i + 1 < m; ++i) {
            const double g = g0.values()[i];
            diag[i] = 8.0 / (h * h) + (3.0 * g * g - y[i]);
            sub[i - 1] = -4.0 / (h * h);
            sup[i] = -4.0 / (h * h);
            rhs[i] = F[i];
        }
        return solve_tridiagonal(sub, diag, sup, rhs);
    };

    // Leading right coefficient g_{n,0} is known in closed form only for
    // n = 1; otherwise solve once with a zero pin, fit the coefficient in
    // the asymptotic window, and re-solve with the fitted pin.
    const double expo = 0.5 - 2.0 * double(n);
    double gn0;
    bool have_exact_pin = false;
    if (n == 1) {
        gn0 = (d == 1) ? 0.0 : 0.5 * (1.0 - double(d));
        have_exact_pin = true;
    } else {
        const auto probe = solve_pinned(0.0);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (y[i] < 25.0 || y[i] > 32.0) continue;
            const double b = std::pow(y[i], expo);
            num += probe[i] * b;
            den += b * b;
        }
        gn0 = den > 0.0 ? num / den : 0.0;
    }
    auto g = solve_pinned(gn0 * std::pow(y.back(), expo));

    // residual check of the linear BVP
    {
        const double h = y[1] - y[0];
        double worst = 0.0;
        for (std::size_t i = 1; i + 1 < m; ++i) {
            const double g0i = g0.values()[i];
            const double lhs = -4.0 * (g[i - 1] - 2.0 * g[i] + g[i + 1]) / (h * h)
                             + (3.0 * g0i * g0i - y[i]) * g[i];
            worst = std::max(worst, std::abs(lhs - F[i]));
        }
        const double scale = std::max(1.0, max_abs(F));
        if (worst > 1e-9 * scale)
            throw SingularSystem("painleve_correction: BVP residual " + std::to_string(worst));
    }

    TailDescriptor right;
    double stitch = 1e-6;
    if (std::abs(gn0) > 1e-12) {
        right = TailDescriptor::power({gn0}, {expo});
        stitch = have_exact_pin ? 1e-6 : 1e-3;
    } else {
        right = TailDescriptor::zero();
        stitch = 1e-3;
    }
    // If the pin is zero the endpoint sample is exactly zero, so a Zero/Power
    // tail stitches trivially. Left end decays like the Airy form squared.
    return TabulatedFunction::from_values(y, g, TailDescriptor::zero(), right, stitch);
}

TabulatedFunction mu_n(const ModelParams& p, int n, const TabulatedFunction& gamma_n) {
    const double s = std::pow(p.R2, 2.0 / 3.0);              // y2 = s * y
    const double K = std::pow(p.R2, 1.0 / 3.0) / std::sqrt(2.0 * p.alpha2)
                   * std::pow(p.R2, -4.0 * double(n) / 3.0);
    const auto& y = gamma_n.grid();
    std::vector<double> gy(y.size()), v(y.size()), d1(y.size()), d2(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        gy[i] = s * y[i];
        v[i] = K * gamma_n.values()[i];
        d1[i] = K / s * gamma_n.d1()[i];
        d2[i] = K / (s * s) * gamma_n.d2()[i];
    }

    auto scale_tail = [&](const TailDescriptor& t) {
        TailDescriptor out = t;
        switch (t.kind) {
            case TailKind::Zero: break;
            case TailKind::Power:
                for (std::size_t k = 0; k < out.coeff.size(); ++k)
                    out.coeff[k] = K * t.coeff[k] * std::pow(s, -t.expo[k]);
                break;
            case TailKind::AiryExp:
                out.coeff[0] = K * t.coeff[0];
                out.argscale = t.argscale / s;
                break;
        }
        return out;
    };
    return TabulatedFunction::from_tables(gy, v, d1, d2, scale_tail(gamma_n.left_tail()),
                                          scale_tail(gamma_n.right_tail()),
                                          gamma_n.stitch_tol());
}

double mu_equation_residual_sup(const ModelParams& p,
                                const std::vector<TabulatedFunction>& gammas,
                                int L, double eps, double y2_max) {
    if (int(gammas.size()) <= L) throw std::invalid_argument("mu_equation_residual_sup: L");
    const auto& y = gammas[0].grid();
    const double et = eps / p.R2sq();                        // eps-tilde
    const double et23 = std::pow(et, 2.0 / 3.0);
    const double s = std::pow(p.R2, 2.0 / 3.0);
    const double pref = eps * p.R2 / std::sqrt(2.0 * p.alpha2);
    double sup = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (s * y[i] > y2_max) continue;
        double G = 0.0, G1 = 0.0, G2 = 0.0;
        for (int k = 0; k <= L; ++k) {
            const double w = std::pow(et23, double(k));
            G += w * gammas[std::size_t(k)].values()[i];
            G1 += w * gammas[std::size_t(k)].d1()[i];
            G2 += w * gammas[std::size_t(k)].d2()[i];
        }
        const double bracket = 4.0 * (1.0 - et23 * y[i]) * G2 - 2.0 * double(p.d) * et23 * G1
                             + y[i] * G - G * G * G;
        sup = std::max(sup, std::abs(pref * bracket));
    }
    return sup;
}

}  // namespace tfgpe
