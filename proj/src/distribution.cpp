#include "wedge/distribution.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "wedge/errors.hpp"

namespace wedge {

DistributionDescriptor DistributionDescriptor::normal(double mean, double sd) {
    if (!(sd > 0.0)) throw config_error("normal: sd must be > 0");
    return DistributionDescriptor(Family::normal, mean, sd);
}

DistributionDescriptor DistributionDescriptor::exponential(double scale) {
    if (!(scale > 0.0)) throw config_error("exponential: scale must be > 0");
    return DistributionDescriptor(Family::exponential, scale, 0.0);
}

DistributionDescriptor DistributionDescriptor::gamma(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
        throw config_error("gamma: shape and scale must be > 0");
    return DistributionDescriptor(Family::gamma, shape, scale);
}

DistributionDescriptor DistributionDescriptor::discrete_atoms(std::vector<Atom> atoms) {
    if (atoms.empty()) throw config_error("discrete_atoms: empty atom list");
    double total = 0.0;
    for (const Atom& a : atoms) {
        if (!(a.prob > 0.0))
            throw config_error("discrete_atoms: probabilities must be positive");
        total += a.prob;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw config_error("discrete_atoms: probabilities must sum to 1 (got " +
                           std::to_string(total) + ")");
    DistributionDescriptor d(Family::discrete_atoms, 0.0, 0.0);
    d.atoms_ = std::move(atoms);
    return d;
}

DistributionDescriptor DistributionDescriptor::raw_moments(std::vector<double> moments) {
    if (moments.empty()) throw config_error("raw_moments: need at least m_1");
    DistributionDescriptor d(Family::raw_moments, 0.0, 0.0);
    d.raw_ = std::move(moments);
    return d;
}

int DistributionDescriptor::max_raw_order() const {
    switch (family_) {
        case Family::raw_moments: return static_cast<int>(raw_.size());
        default: return std::numeric_limits<int>::max();
    }
}

double DistributionDescriptor::raw_moment(int r) const {
    if (r < 0) throw config_error("raw_moment: negative order");
    if (r == 0) return 1.0;
    switch (family_) {
        case Family::normal: {
            // E X^r = sum over even j of C(r,j) (j-1)!! sd^j mean^(r-j)
            double sum = 0.0;
            double binom = 1.0;  // C(r, j) built incrementally
            for (int j = 0; j <= r; ++j) {
                if (j % 2 == 0) {
                    double dfact = 1.0;
                    for (int k = j - 1; k >= 1; k -= 2) dfact *= k;
                    sum += binom * dfact * std::pow(p2_, j) * std::pow(p1_, r - j);
                }
                binom = binom * (r - j) / (j + 1);
            }
            return sum;
        }
        case Family::exponential: {
            double v = 1.0;
            for (int k = 1; k <= r; ++k) v *= k * p1_;
            return v;
        }
        case Family::gamma: {
            double v = 1.0;
            for (int k = 0; k < r; ++k) v *= (p1_ + k) * p2_;
            return v;
        }
        case Family::discrete_atoms: {
            double v = 0.0;
            for (const Atom& a : atoms_) v += a.prob * std::pow(a.value, r);
            return v;
        }
        case Family::raw_moments:
            if (r > static_cast<int>(raw_.size()))
                throw capability_error("raw_moments: moment of order " +
                                       std::to_string(r) + " not supplied (have " +
                                       std::to_string(raw_.size()) + ")");
            return raw_[static_cast<size_t>(r) - 1];
    }
    return 0.0;
}

double DistributionDescriptor::cumulant(int r) const {
    if (r < 1) throw config_error("cumulant: order must be >= 1");
    // kappa_r = m_r - sum_{j=1}^{r-1} C(r-1, j-1) kappa_j m_{r-j}
    std::vector<double> kappa(static_cast<size_t>(r) + 1, 0.0);
    for (int s = 1; s <= r; ++s) {
        double v = raw_moment(s);
        double binom = 1.0;  // C(s-1, j-1)
        for (int j = 1; j < s; ++j) {
            v -= binom * kappa[static_cast<size_t>(j)] * raw_moment(s - j);
            binom = binom * (s - 1 - j) / j;
        }
        kappa[static_cast<size_t>(s)] = v;
    }
    return kappa[static_cast<size_t>(r)];
}

bool DistributionDescriptor::same_as(const DistributionDescriptor& o) const {
    if (family_ != o.family_) return false;
    if (p1_ != o.p1_ || p2_ != o.p2_) return false;
    if (atoms_.size() != o.atoms_.size() || raw_.size() != o.raw_.size()) return false;
    for (size_t i = 0; i < atoms_.size(); ++i)
        if (atoms_[i].value != o.atoms_[i].value || atoms_[i].prob != o.atoms_[i].prob)
            return false;
    for (size_t i = 0; i < raw_.size(); ++i)
        if (raw_[i] != o.raw_[i]) return false;
    return true;
}

DistributionDescriptor DistributionDescriptor::shifted(double c) const {
    switch (family_) {
        case Family::normal: return normal(p1_ + c, p2_);
        case Family::discrete_atoms: {
            std::vector<Atom> moved = atoms_;
            for (Atom& a : moved) a.value += c;
            return discrete_atoms(std::move(moved));
        }
        default:
            throw capability_error("shifted: family has no location parameter");
    }
}

const std::vector<Atom>& DistributionDescriptor::atoms() const {
    if (family_ != Family::discrete_atoms)
        throw capability_error("atoms: not a finite-support distribution");
    return atoms_;
}

}  // namespace wedge
