// Smooth compactly supported bumps with evaluable derivatives, the dyadic
// partition of unity, and the smoothstep they are built from.
#pragma once

#include <functional>

#include "ampsum/common.hpp"

namespace ampsum {

// The canonical C^infty profile phi(u) = exp(1 - 1/(1 - u^2)) on (-1, 1),
// normalized so phi(0) = 1; zero outside.  Derivatives come from the
// recurrence phi^(k+1) = sum_j C(k,j) phi^(j) g^(k+1-j) with g = -1/(1-u^2),
// whose derivatives are exact partial-fraction expressions.
double bump_profile(double u);
double bump_profile_derivative(int k, double u);

// A bump supported in [center - width, center + width] subset (0, inf).
class TestFunction {
  public:
    TestFunction() : center_(1.0), width_(0.5) {}
    TestFunction(double center, double width, int order = 8);

    double operator()(double x) const { return bump_profile((x - center_) / width_); }
    double evaluate(double x) const { return (*this)(x); }
    double derivative(int k, double x) const;

    double center() const { return center_; }
    double width() const { return width_; }
    int order() const { return order_; }
    double support_lo() const { return center_ - width_; }
    double support_hi() const { return center_ + width_; }

  private:
    double center_, width_;
    int order_ = 8;
};

// Smoothstep eta: 0 for x <= 1/2, 1 for x >= 1, C^infty monotone between.
double smoothstep(double x);
double smoothstep_derivative(int k, double x);

// Dyadic partition blocks eta_M(x) = eta(x/M) - eta(x/(2M)), M = 2^j, each
// supported in [M/2, 2M]; their sum telescopes back to eta.
struct PartitionSpec {
    std::vector<double> M_list;  // dyadic centers 1, 2, 4, ...
    double X_cap;

    double block(size_t j, double x) const;
    double block_derivative(size_t j, int k, double x) const;
    double sum_all(double x) const;
    size_t count() const { return M_list.size(); }
};

struct PartitionCheck {
    PartitionSpec spec;
    double max_partition_residual;   // max |sum_M eta_M(x) - eta(x)| on grid
    std::vector<double> deriv_bound; // reported C_i for x^i |eta_M^(i)(x)|
    size_t block_count;
    bool count_ok;                   // count <= 2 + log2(X_cap)
    bool pass(double tol) const { return max_partition_residual < tol && count_ok; }
};

// Builds the partition covering [1, X_cap] and verifies its invariants on a
// 10^3-point grid.
PartitionCheck partition_unity(double X_cap);

}  // namespace ampsum
