#include "wedge/population.hpp"

#include <cmath>
#include <string>

#include "wedge/errors.hpp"

namespace wedge {

Population::Population(std::vector<double> weights,
                       std::vector<DistributionDescriptor> dists)
    : weights_(std::move(weights)), dists_(std::move(dists)) {
    if (weights_.empty()) throw config_error("population: n must be >= 1");
    if (weights_.size() != dists_.size())
        throw config_error("population: weights and distributions differ in length");
    const double n = static_cast<double>(weights_.size());
    double total = 0.0;
    for (double w : weights_) total += w;
    // tolerance admits weights given to limited decimal precision
    if (std::abs(total - n) > 1e-9 * n)
        throw config_error("population: weights must sum to n (got " +
                           std::to_string(total) + " for n = " +
                           std::to_string(weights_.size()) + ")");
}

bool Population::iid() const {
    for (size_t i = 1; i < dists_.size(); ++i)
        if (!dists_[i].same_as(dists_[0])) return false;
    return true;
}

bool Population::finite_support() const {
    for (const auto& d : dists_)
        if (!d.finite_support()) return false;
    return true;
}

int Population::total_atoms() const {
    int count = 0;
    for (const auto& d : dists_)
        count += d.finite_support() ? static_cast<int>(d.atoms().size()) : 0;
    return count;
}

Population Population::shifted(double c) const {
    std::vector<DistributionDescriptor> moved;
    moved.reserve(dists_.size());
    for (const auto& d : dists_) moved.push_back(d.shifted(c));
    return Population(weights_, std::move(moved));
}

double weight_power_mean(const Population& pop, int r) {
    if (r < 1) throw config_error("weight_power_mean: r must be >= 1");
    double sum = 0.0;
    for (double w : pop.weights()) sum += std::pow(w, r);
    return sum / pop.size();
}

MomentTable::MomentTable(std::vector<double> weights,
                         std::vector<std::vector<double>> central,
                         double pooled_mean, int max_order)
    : weights_(std::move(weights)),
      central_(std::move(central)),
      mu_(pooled_mean),
      max_order_(max_order) {
    const double n = static_cast<double>(weights_.size());
    pooled_.assign(static_cast<size_t>(max_order_) + 1, 0.0);
    for (int r = 0; r <= max_order_; ++r) {
        double s = 0.0;
        for (size_t i = 0; i < weights_.size(); ++i)
            s += weights_[i] * central_[i][static_cast<size_t>(r)];
        pooled_[static_cast<size_t>(r)] = s / n;
    }
}

void MomentTable::require_order(int r) const {
    if (r < 0 || r > max_order_)
        throw capability_error("moment table holds orders 0.." +
                               std::to_string(max_order_) + ", requested " +
                               std::to_string(r));
}

double MomentTable::central(int r, int i) const {
    require_order(r);
    return central_[static_cast<size_t>(i)][static_cast<size_t>(r)];
}

double MomentTable::pooled_central(int r) const {
    require_order(r);
    return pooled_[static_cast<size_t>(r)];
}

MomentTable build_moment_table(const Population& pop, int K) {
    if (K < 1) throw config_error("build_moment_table: order must be >= 1");
    const int n = pop.size();
    for (int i = 0; i < n; ++i)
        if (pop.dist(i).max_raw_order() < K)
            throw capability_error(
                "entry " + std::to_string(i) + " supplies raw moments only to order " +
                std::to_string(pop.dist(i).max_raw_order()) + ", need " +
                std::to_string(K));

    double mu = 0.0;
    for (int i = 0; i < n; ++i) mu += pop.weight(i) * pop.dist(i).raw_moment(1);
    mu /= n;

    std::vector<std::vector<double>> central(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& row = central[static_cast<size_t>(i)];
        row.assign(static_cast<size_t>(K) + 1, 0.0);
        row[0] = 1.0;
        for (int r = 1; r <= K; ++r) {
            // binomial expansion of E (X - mu)^r about raw moments
            double acc = 0.0;
            double binom = 1.0;
            for (int j = 0; j <= r; ++j) {
                acc += binom * pop.dist(i).raw_moment(j) * std::pow(-mu, r - j);
                binom = binom * (r - j) / (j + 1);
            }
            row[static_cast<size_t>(r)] = acc;
        }
    }
    return MomentTable(pop.weights(), std::move(central), mu, K);
}

double moment_product(const MomentTable& table, int k, std::span<const int> orders) {
    const int n = table.size();
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        double term = std::pow(table.weights()[static_cast<size_t>(i)], k);
        for (int r : orders) term *= table.central(r, i);
        sum += term;
    }
    return sum / n;
}

namespace {
void check_component(int a) {
    if (a != 1 && a != 2)
        throw config_error("moment-vector component index must be 1 or 2");
}
}  // namespace

double c_cov(const MomentTable& table, int a, int b) {
    check_component(a);
    check_component(b);
    const int sum[] = {a + b};
    const int prod[] = {a, b};
    return moment_product(table, 2, sum) - moment_product(table, 2, prod);
}

double c_cov3(const MomentTable& table, int a, int b, int c) {
    check_component(a);
    check_component(b);
    check_component(c);
    const int all[] = {a + b + c};
    const int pair1[] = {a + b, c};
    const int pair2[] = {a + c, b};
    const int pair3[] = {b + c, a};
    const int sep[] = {a, b, c};
    return moment_product(table, 3, all) - moment_product(table, 3, pair1) -
           moment_product(table, 3, pair2) - moment_product(table, 3, pair3) +
           2.0 * moment_product(table, 3, sep);
}

}  // namespace wedge
