#ifndef TFGPE_RATIONAL_HPP
#define TFGPE_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tfgpe {

// Exact rational arithmetic on 64-bit numerator/denominator with
// 128-bit intermediates. Throws std::overflow_error instead of
// silently wrapping; plenty of headroom for the series orders this
// project ever asks for.
class Rational {
  public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1) : n_(num), d_(den) { normalize(); }

    std::int64_t num() const { return n_; }
    std::int64_t den() const { return d_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return fromWide(wide(a.n_) * b.d_ + wide(b.n_) * a.d_, wide(a.d_) * b.d_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return fromWide(wide(a.n_) * b.d_ - wide(b.n_) * a.d_, wide(a.d_) * b.d_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return fromWide(wide(a.n_) * b.n_, wide(a.d_) * b.d_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.n_ == 0) throw std::domain_error("Rational: division by zero");
        return fromWide(wide(a.n_) * b.d_, wide(a.d_) * b.n_);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.n_ == b.n_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    double to_double() const { return double(n_) / double(d_); }

    std::string str() const {
        return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
    }

  private:
    using wide = __int128;

    static Rational fromWide(wide n, wide d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        const wide g = gcdWide(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr wide lim = wide(INT64_MAX);
        if (n > lim || n < -lim || d > lim) throw std::overflow_error("Rational overflow");
        Rational r;
        r.n_ = std::int64_t(n);
        r.d_ = std::int64_t(d);
        return r;
    }

    static wide gcdWide(wide a, wide b) {
        while (b != 0) { const wide t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (d_ == 0) throw std::domain_error("Rational: zero denominator");
        if (d_ < 0) { n_ = -n_; d_ = -d_; }
        const std::int64_t g = std::gcd(n_ < 0 ? -n_ : n_, d_);
        if (g > 1) { n_ /= g; d_ /= g; }
    }

    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
};

}  // namespace tfgpe

#endif
