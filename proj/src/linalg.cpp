#include "tfgpe/linalg.hpp"

#include <lapacke.h>

#include <cmath>
#include <stdexcept>

#include "tfgpe/errors.hpp"

namespace tfgpe {

BandMatrix::BandMatrix(std::size_t n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), ldab_(2 * kl + ku + 1), ab_(std::size_t(ldab_) * n, 0.0) {
    if (n == 0 || kl < 0 || ku < 0) throw std::invalid_argument("BandMatrix: bad shape");
}

std::size_t BandMatrix::idx(std::size_t i, std::size_t j) const {
    // column-major LAPACK band storage: A(i,j) -> ab[kl+ku+i-j, j]
    return j * std::size_t(ldab_) + std::size_t(kl_ + ku_ + long(i) - long(j));
}

void BandMatrix::set(std::size_t i, std::size_t j, double v) {
    if (long(j) - long(i) > ku_ || long(i) - long(j) > kl_)
        throw std::out_of_range("BandMatrix::set outside band");
    ab_[idx(i, j)] = v;
}

void BandMatrix::add(std::size_t i, std::size_t j, double v) {
    if (long(j) - long(i) > ku_ || long(i) - long(j) > kl_)
        throw std::out_of_range("BandMatrix::add outside band");
    ab_[idx(i, j)] += v;
}

double BandMatrix::get(std::size_t i, std::size_t j) const {
    if (long(j) - long(i) > ku_ || long(i) - long(j) > kl_) return 0.0;
    return ab_[idx(i, j)];
}

void BandMatrix::reset() { ab_.assign(ab_.size(), 0.0); }

void BandMatrix::solve(std::vector<double>& rhs) {
    if (rhs.size() != n_) throw std::invalid_argument("BandMatrix::solve rhs size");
    std::vector<lapack_int> ipiv(n_);
    const lapack_int info = LAPACKE_dgbsv(LAPACK_COL_MAJOR, lapack_int(n_), kl_, ku_, 1,
                                          ab_.data(), ldab_, ipiv.data(), rhs.data(),
                                          lapack_int(n_));
    if (info > 0) throw SingularSystem("banded LU: zero pivot at row " + std::to_string(info));
    if (info < 0) throw std::runtime_error("dgbsv: illegal argument " + std::to_string(-info));
}

std::vector<double> solve_tridiagonal(const std::vector<double>& sub,
                                      const std::vector<double>& diag,
                                      const std::vector<double>& super,
                                      std::vector<double> rhs) {
    const std::size_t n = diag.size();
    if (sub.size() != n - 1 || super.size() != n - 1 || rhs.size() != n)
        throw std::invalid_argument("solve_tridiagonal: sizes");
    std::vector<double> dl = sub, d = diag, du = super;
    const lapack_int info = LAPACKE_dgtsv(LAPACK_COL_MAJOR, lapack_int(n), 1, dl.data(),
                                          d.data(), du.data(), rhs.data(), lapack_int(n));
    if (info > 0) throw SingularSystem("tridiagonal solve: zero pivot");
    if (info < 0) throw std::runtime_error("dgtsv: illegal argument");
    return rhs;
}

}  // namespace tfgpe
