#ifndef TFGPE_LINALG_HPP
#define TFGPE_LINALG_HPP

#include <cstddef>
#include <vector>

namespace tfgpe {

// General banded matrix with kl sub- and ku super-diagonals, stored in
// LAPACK band layout with room for pivoting fill. solve() runs dgbsv
// (LU with partial pivoting) in place and destroys the factorization
// inputs, so assemble, solve once, then reset.
class BandMatrix {
  public:
    BandMatrix(std::size_t n, int kl, int ku);

    void set(std::size_t i, std::size_t j, double v);
    void add(std::size_t i, std::size_t j, double v);
    double get(std::size_t i, std::size_t j) const;
    void reset();

    std::size_t size() const { return n_; }

    // Solves A x = rhs, overwriting rhs with x. Throws SingularSystem
    // if the factorization hits an exact zero pivot.
    void solve(std::vector<double>& rhs);

  private:
    std::size_t idx(std::size_t i, std::size_t j) const;
    std::size_t n_;
    int kl_, ku_, ldab_;
    std::vector<double> ab_;
};

// Convenience tridiagonal solve: diag a (n), sub l (n-1), super u (n-1).
std::vector<double> solve_tridiagonal(const std::vector<double>& sub,
                                      const std::vector<double>& diag,
                                      const std::vector<double>& super,
                                      std::vector<double> rhs);

}  // namespace tfgpe

#endif
