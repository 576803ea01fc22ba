#ifndef WEDGE_DISTRIBUTION_HPP
#define WEDGE_DISTRIBUTION_HPP

#include <limits>
#include <vector>

namespace wedge {

struct Atom {
    double value;
    double prob;
};

/// Analytic description of one observation's distribution. Raw moments are
/// exact per family: closed forms for Normal/Exponential/Gamma, direct sums
/// for atom lists, and a user-supplied table otherwise.
class DistributionDescriptor {
public:
    enum class Family { normal, exponential, gamma, discrete_atoms, raw_moments };

    static DistributionDescriptor normal(double mean, double sd);
    static DistributionDescriptor exponential(double scale);
    static DistributionDescriptor gamma(double shape, double scale);
    static DistributionDescriptor discrete_atoms(std::vector<Atom> atoms);
    /// moments[r-1] = E X^r for r = 1..K.
    static DistributionDescriptor raw_moments(std::vector<double> moments);

    Family family() const { return family_; }

    /// E X^r for r >= 0. Throws capability_error past the available order.
    double raw_moment(int r) const;

    /// Largest r served by raw_moment (INT_MAX for analytic families).
    int max_raw_order() const;

    /// Cumulant kappa_r, r >= 1, from raw moments.
    double cumulant(int r) const;

    bool can_sample() const { return family_ != Family::raw_moments; }
    bool finite_support() const { return family_ == Family::discrete_atoms; }

    /// Same family and parameters, bitwise.
    bool same_as(const DistributionDescriptor& other) const;

    /// Copy with X replaced by X + c (atoms and location families only;
    /// throws capability_error for families without a location parameter).
    DistributionDescriptor shifted(double c) const;

    const std::vector<Atom>& atoms() const;
    double param1() const { return p1_; }  // mean | scale | shape
    double param2() const { return p2_; }  // sd | - | scale

private:
    DistributionDescriptor(Family f, double p1, double p2)
        : family_(f), p1_(p1), p2_(p2) {}

    Family family_;
    double p1_ = 0.0;
    double p2_ = 0.0;
    std::vector<Atom> atoms_;
    std::vector<double> raw_;  // raw_[r-1] = m_r
};

}  // namespace wedge

#endif  // WEDGE_DISTRIBUTION_HPP
