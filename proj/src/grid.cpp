#include "tfgpe/grid.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace tfgpe {

std::vector<double> uniform_grid(double a, double b, std::size_t n) {
    if (n < 2 || !(b > a)) throw std::invalid_argument("uniform_grid: bad range");
    std::vector<double> x(n);
    const double h = (b - a) / double(n - 1);
    for (std::size_t i = 0; i < n; ++i) x[i] = a + h * double(i);
    x.back() = b;
    return x;
}

std::vector<double> log_grid(double a, double b, std::size_t n) {
    if (n < 2 || !(a > 0.0) || !(b > a)) throw std::invalid_argument("log_grid: bad range");
    std::vector<double> x(n);
    const double la = std::log(a), lb = std::log(b);
    const double h = (lb - la) / double(n - 1);
    for (std::size_t i = 0; i < n; ++i) x[i] = std::exp(la + h * double(i));
    x.front() = a;
    x.back() = b;
    return x;
}

void derivative_tables(const std::vector<double>& x, const std::vector<double>& f,
                       std::vector<double>& d1, std::vector<double>& d2) {
    const std::size_t n = x.size();
    if (f.size() != n || n < 3) throw std::invalid_argument("derivative_tables: size");
    d1.assign(n, 0.0);
    d2.assign(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double hm = x[i] - x[i - 1];
        const double hp = x[i + 1] - x[i];
        d1[i] = (-hp / (hm * (hm + hp))) * f[i - 1] + ((hp - hm) / (hm * hp)) * f[i]
              + (hm / (hp * (hm + hp))) * f[i + 1];
        d2[i] = 2.0 * (f[i - 1] / (hm * (hm + hp)) - f[i] / (hm * hp)
                       + f[i + 1] / (hp * (hm + hp)));
    }
    // one-sided 3-point stencils at the ends
    {
        const double h1 = x[1] - x[0], h2 = x[2] - x[1];
        d1[0] = -(2.0 * h1 + h2) / (h1 * (h1 + h2)) * f[0]
              + (h1 + h2) / (h1 * h2) * f[1]
              - h1 / (h2 * (h1 + h2)) * f[2];
        d2[0] = 2.0 * (f[0] / (h1 * (h1 + h2)) - f[1] / (h1 * h2) + f[2] / (h2 * (h1 + h2)));
    }
    {
        const double h1 = x[n - 1] - x[n - 2], h2 = x[n - 2] - x[n - 3];
        d1[n - 1] = (2.0 * h1 + h2) / (h1 * (h1 + h2)) * f[n - 1]
                  - (h1 + h2) / (h1 * h2) * f[n - 2]
                  + h1 / (h2 * (h1 + h2)) * f[n - 3];
        d2[n - 1] = 2.0 * (f[n - 1] / (h1 * (h1 + h2)) - f[n - 2] / (h1 * h2)
                           + f[n - 3] / (h2 * (h1 + h2)));
    }
}

std::vector<double> trapezoid_weights(const std::vector<double>& x) {
    const std::size_t n = x.size();
    if (n < 2) throw std::invalid_argument("trapezoid_weights: need >= 2 nodes");
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double h = x[i + 1] - x[i];
        w[i] += 0.5 * h;
        w[i + 1] += 0.5 * h;
    }
    return w;
}

}  // namespace tfgpe
