#include "tfgpe/tabulated.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tfgpe/grid.hpp"

namespace tfgpe {

TailDescriptor TailDescriptor::power(std::vector<double> c, std::vector<double> p) {
    if (c.size() != p.size() || c.empty())
        throw std::invalid_argument("TailDescriptor::power: term lists");
    TailDescriptor t;
    t.kind = TailKind::Power;
    t.coeff = std::move(c);
    t.expo = std::move(p);
    return t;
}

TailDescriptor TailDescriptor::airy(double amplitude, double argscale) {
    TailDescriptor t;
    t.kind = TailKind::AiryExp;
    t.coeff = {amplitude};
    t.argscale = argscale;
    return t;
}

TailDescriptor TailDescriptor::none() {
    TailDescriptor t;
    t.kind = TailKind::None;
    return t;
}

double TailDescriptor::value(double y) const {
    const double a = std::abs(y);
    switch (kind) {
        case TailKind::None:
            throw std::domain_error("TabulatedFunction: evaluation beyond a side with no tail");
        case TailKind::Zero: return 0.0;
        case TailKind::Power: {
            double s = 0.0;
            for (std::size_t k = 0; k < coeff.size(); ++k) s += coeff[k] * std::pow(a, expo[k]);
            return s;
        }
        case TailKind::AiryExp: {
            const double t = argscale * a;
            const double e = -std::pow(t, 1.5) / 3.0;
            if (e < -700.0) return 0.0;
            return coeff[0] * std::pow(t, -0.25) * std::exp(e);
        }
    }
    return 0.0;
}

double TailDescriptor::d1(double y) const {
    const double a = std::abs(y);
    const double sgn = y < 0 ? -1.0 : 1.0;   // d/dy = sgn * d/da
    switch (kind) {
        case TailKind::None:
            throw std::domain_error("TabulatedFunction: evaluation beyond a side with no tail");
        case TailKind::Zero: return 0.0;
        case TailKind::Power: {
            double s = 0.0;
            for (std::size_t k = 0; k < coeff.size(); ++k)
                s += coeff[k] * expo[k] * std::pow(a, expo[k] - 1.0);
            return sgn * s;
        }
        case TailKind::AiryExp: {
            const double t = argscale * a;
            const double e = -std::pow(t, 1.5) / 3.0;
            if (e < -700.0) return 0.0;
            // d/dt [t^{-1/4} e^{-t^{3/2}/3}] = (-1/4 t^{-5/4} - t^{1/4} sqrt(t)/2 ... )
            const double f = std::pow(t, -0.25) * std::exp(e);
            const double df = f * (-0.25 / t - 0.5 * std::sqrt(t));
            return sgn * coeff[0] * df * argscale;
        }
    }
    return 0.0;
}

double TailDescriptor::d2(double y) const {
    const double a = std::abs(y);
    switch (kind) {
        case TailKind::None:
            throw std::domain_error("TabulatedFunction: evaluation beyond a side with no tail");
        case TailKind::Zero: return 0.0;
        case TailKind::Power: {
            double s = 0.0;
            for (std::size_t k = 0; k < coeff.size(); ++k)
                s += coeff[k] * expo[k] * (expo[k] - 1.0) * std::pow(a, expo[k] - 2.0);
            return s;   // (d/dy)^2 = (d/da)^2
        }
        case TailKind::AiryExp: {
            const double t = argscale * a;
            const double e = -std::pow(t, 1.5) / 3.0;
            if (e < -700.0) return 0.0;
            const double f = std::pow(t, -0.25) * std::exp(e);
            const double g = -0.25 / t - 0.5 * std::sqrt(t);          // f'/f
            const double dg = 0.25 / (t * t) - 0.25 / std::sqrt(t);   // g'
            return coeff[0] * (f * (g * g + dg)) * argscale * argscale;
        }
    }
    return 0.0;
}

TabulatedFunction TabulatedFunction::from_values(std::vector<double> grid,
                                                 std::vector<double> values,
                                                 TailDescriptor left, TailDescriptor right,
                                                 double stitch_tol) {
    std::vector<double> d1, d2;
    derivative_tables(grid, values, d1, d2);
    return from_tables(std::move(grid), std::move(values), std::move(d1), std::move(d2),
                       std::move(left), std::move(right), stitch_tol);
}

TabulatedFunction TabulatedFunction::from_tables(std::vector<double> grid,
                                                 std::vector<double> values,
                                                 std::vector<double> d1, std::vector<double> d2,
                                                 TailDescriptor left, TailDescriptor right,
                                                 double stitch_tol) {
    TabulatedFunction f;
    f.grid_ = std::move(grid);
    f.values_ = std::move(values);
    f.d1_ = std::move(d1);
    f.d2_ = std::move(d2);
    f.left_ = std::move(left);
    f.right_ = std::move(right);
    f.stitch_tol_ = stitch_tol;
    f.validate();
    return f;
}

void TabulatedFunction::validate() const {
    const std::size_t n = grid_.size();
    if (n < 4) throw std::invalid_argument("TabulatedFunction: need >= 4 nodes");
    if (values_.size() != n || d1_.size() != n || d2_.size() != n)
        throw std::invalid_argument("TabulatedFunction: table lengths differ from grid");
    for (std::size_t i = 1; i < n; ++i)
        if (!(grid_[i] > grid_[i - 1]))
            throw std::invalid_argument("TabulatedFunction: grid not strictly increasing");

    // uniform-grid detection for O(1) lookup
    const double h0 = grid_[1] - grid_[0];
    bool uni = true;
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (std::abs((grid_[i + 1] - grid_[i]) - h0) > 1e-12 * std::max(1.0, std::abs(h0))) {
            uni = false;
            break;
        }
    const_cast<TabulatedFunction*>(this)->uniform_ = uni;
    const_cast<TabulatedFunction*>(this)->h_ = h0;

    // stitching: endpoint samples must match their tail formulas
    double scale = 0.0;
    for (double v : values_) scale = std::max(scale, std::abs(v));
    const double floor = 1e-12 * std::max(1.0, scale);
    if (left_.kind != TailKind::None) {
        const double lv = left_.value(grid_.front());
        if (std::abs(lv - values_.front())
            > stitch_tol_ * std::max(std::abs(values_.front()), floor))
            throw std::invalid_argument("TabulatedFunction: left tail does not stitch");
    }
    if (right_.kind != TailKind::None) {
        const double rv = right_.value(grid_.back());
        if (std::abs(rv - values_.back())
            > stitch_tol_ * std::max(std::abs(values_.back()), floor))
            throw std::invalid_argument("TabulatedFunction: right tail does not stitch");
    }
}

std::size_t TabulatedFunction::locate(double y) const {
    const std::size_t n = grid_.size();
    std::size_t i;
    if (uniform_) {
        const double t = (y - grid_.front()) / h_;
        i = t <= 0.0 ? 0 : std::min(n - 2, std::size_t(t));
    } else {
        const auto it = std::upper_bound(grid_.begin(), grid_.end(), y);
        i = it == grid_.begin() ? 0 : std::size_t(it - grid_.begin()) - 1;
        i = std::min(i, n - 2);
    }
    return i;
}

double TabulatedFunction::interp(const std::vector<double>& table, int deriv, double y) const {
    if (y < grid_.front()) {
        switch (deriv) {
            case 0: return left_.value(y);
            case 1: return left_.d1(y);
            default: return left_.d2(y);
        }
    }
    if (y > grid_.back()) {
        switch (deriv) {
            case 0: return right_.value(y);
            case 1: return right_.d1(y);
            default: return right_.d2(y);
        }
    }
    // 4-point Lagrange on the bracketing nodes
    const std::size_t n = grid_.size();
    std::size_t i = locate(y);
    std::size_t j0 = i == 0 ? 0 : i - 1;
    if (j0 + 3 >= n) j0 = n - 4;
    double out = 0.0;
    for (std::size_t a = 0; a < 4; ++a) {
        double l = 1.0;
        for (std::size_t b = 0; b < 4; ++b) {
            if (a == b) continue;
            l *= (y - grid_[j0 + b]) / (grid_[j0 + a] - grid_[j0 + b]);
        }
        out += l * table[j0 + a];
    }
    return out;
}

}  // namespace tfgpe
