#ifndef TFGPE_TABULATED_HPP
#define TFGPE_TABULATED_HPP

#include <cstddef>
#include <vector>

namespace tfgpe {

enum class TailKind {
    Zero,      // function treated as 0 beyond the grid
    Power,     // sum_k coeff[k] * |y|^expo[k]  (sign folded into coeff)
    AiryExp,   // coeff[0] * (s|y|)^(-1/4) * exp(-(s|y|)^(3/2)/3), s = argscale
    None,      // no extension on this side; evaluation beyond the grid throws
};

// One-sided asymptotic descriptor for evaluation beyond the grid.
struct TailDescriptor {
    TailKind kind = TailKind::Zero;
    std::vector<double> coeff;   // strongest term first
    std::vector<double> expo;
    double argscale = 1.0;       // AiryExp only

    static TailDescriptor zero() { return {}; }
    static TailDescriptor none();
    static TailDescriptor power(std::vector<double> c, std::vector<double> p);
    static TailDescriptor airy(double amplitude, double argscale);

    double value(double y) const;
    double d1(double y) const;
    double d2(double y) const;
};

// A function of one scaled variable: samples of the function and its
// first two derivatives on a strictly increasing grid, plus two-sided
// tail descriptors for evaluation beyond the grid. Immutable once built.
class TabulatedFunction {
  public:
    TabulatedFunction() = default;

    // Builds d1/d2 tables from the values with the shared 3-point stencils.
    static TabulatedFunction from_values(std::vector<double> grid, std::vector<double> values,
                                         TailDescriptor left, TailDescriptor right,
                                         double stitch_tol = 1e-6);

    // Takes derivative tables as given (used when an exact rescaling of
    // another table is available).
    static TabulatedFunction from_tables(std::vector<double> grid, std::vector<double> values,
                                         std::vector<double> d1, std::vector<double> d2,
                                         TailDescriptor left, TailDescriptor right,
                                         double stitch_tol = 1e-6);

    double eval(double y) const { return interp(values_, 0, y); }
    double eval_d1(double y) const { return interp(d1_, 1, y); }
    double eval_d2(double y) const { return interp(d2_, 2, y); }

    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& d1() const { return d1_; }
    const std::vector<double>& d2() const { return d2_; }
    const TailDescriptor& left_tail() const { return left_; }
    const TailDescriptor& right_tail() const { return right_; }
    double stitch_tol() const { return stitch_tol_; }

    double y_min() const { return grid_.front(); }
    double y_max() const { return grid_.back(); }

    bool empty() const { return grid_.empty(); }

  private:
    void validate() const;   // monotone grid, sizes, stitch check
    double interp(const std::vector<double>& table, int deriv, double y) const;
    std::size_t locate(double y) const;

    std::vector<double> grid_, values_, d1_, d2_;
    TailDescriptor left_, right_;
    double stitch_tol_ = 1e-6;
    bool uniform_ = false;
    double h_ = 0.0;
};

}  // namespace tfgpe

#endif
