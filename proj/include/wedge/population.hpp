#ifndef WEDGE_POPULATION_HPP
#define WEDGE_POPULATION_HPP

#include <functional>
#include <span>
#include <vector>

#include "wedge/distribution.hpp"

namespace wedge {

/// A weighted sample model: n independent observations with predetermined
/// real weights summing to n (weights may be negative).
class Population {
public:
    Population(std::vector<double> weights, std::vector<DistributionDescriptor> dists);

    int size() const { return static_cast<int>(weights_.size()); }
    const std::vector<double>& weights() const { return weights_; }
    double weight(int i) const { return weights_[static_cast<size_t>(i)]; }
    const DistributionDescriptor& dist(int i) const { return dists_[static_cast<size_t>(i)]; }
    const std::vector<DistributionDescriptor>& dists() const { return dists_; }

    bool iid() const;
    bool finite_support() const;
    int total_atoms() const;

    Population shifted(double c) const;

private:
    std::vector<double> weights_;
    std::vector<DistributionDescriptor> dists_;
};

/// W_r = n^{-1} sum_i w_i^r. W_1 = 1 by the weight constraint.
double weight_power_mean(const Population& pop, int r);

/// Central moments mu_{r,i} = E (X_i - mu)^r about the pooled weighted mean
/// mu = n^{-1} sum w_i E X_i, together with the pooled moments of the mean
/// distribution F. Every closed-form coefficient reads from here.
class MomentTable {
public:
    MomentTable(std::vector<double> weights, std::vector<std::vector<double>> central,
                double pooled_mean, int max_order);

    double pooled_mean() const { return mu_; }
    int max_order() const { return max_order_; }
    int size() const { return static_cast<int>(weights_.size()); }
    const std::vector<double>& weights() const { return weights_; }

    /// mu_{r,i}; r = 0..max_order.
    double central(int r, int i) const;
    /// mu_r(F) = n^{-1} sum_i w_i mu_{r,i}.
    double pooled_central(int r) const;

private:
    void require_order(int r) const;

    std::vector<double> weights_;
    std::vector<std::vector<double>> central_;  // central_[i][r]
    std::vector<double> pooled_;
    double mu_;
    int max_order_;
};

/// Exact central moments about the pooled mean to order K.
MomentTable build_moment_table(const Population& pop, int K);

/// M^k_{rs...} = n^{-1} sum_i w_i^k mu_{r,i} mu_{s,i} ...
double moment_product(const MomentTable& table, int k, std::span<const int> orders);

/// Covariance-style contractions of the moment vector S = (mu, mu_2):
/// C(ab) = M^2_{a+b} - M^2_{ab},
/// C(abc) = M^3_{a+b+c} - sum over the 3 pairings M^3_{ab,c} + 2 M^3_{abc}.
/// Indices a,b,c in {1,2}.
double c_cov(const MomentTable& table, int a, int b);
double c_cov3(const MomentTable& table, int a, int b, int c);

/// Smooth parameterisation w(t), kappa_r(t) of weights and per-observation
/// cumulants on [0,1], for asymptotic-in-n analysis of the weighted mean.
struct WeightProfile {
    std::function<double(double)> weight;               // w(t)
    std::function<double(int, double)> cumulant;        // kappa_r(t)
    /// Optional analytic d^m/dt^m of t -> w(t)^r kappa_r(t); order m >= 1.
    std::function<double(int, int, double)> kr_derivative;  // (r, m, t)
};

}  // namespace wedge

#endif  // WEDGE_POPULATION_HPP
