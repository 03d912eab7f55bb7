#pragma once

#include <map>
#include <span>
#include <vector>

namespace sobkern {

enum class WeightScheme {
    Unit,             // lambda_alpha = 1
    IsotropicHs,      // |alpha|_1! * binom(s, |alpha|_1) / ((2pi)^{d/2} alpha!)
    GaussianInfinity, // 1 / (2^{|alpha|_1} alpha!), truncated at |alpha|_1 <= S
    Explicit,
};

// Weight family lambda_{d,s,alpha} over multi-indices |alpha|_1 <= s.
// For GaussianInfinity, `order` is the truncation order S of the formally
// infinite family; for the other schemes it is the max total order s.
class MultiIndexWeights {
public:
    MultiIndexWeights() = default;
    static MultiIndexWeights unit(int d, int s);
    static MultiIndexWeights isotropic_hs(int d, int s);
    static MultiIndexWeights gaussian_infinity(int d, int truncation);
    static MultiIndexWeights explicit_map(int d, int s, std::map<std::vector<int>, double> lambdas);

    int dimension() const { return d_; }
    int order() const { return s_; }
    WeightScheme scheme() const { return scheme_; }

    double lambda(std::span<const int> alpha) const;
    // min over |alpha|_1 <= ell of lambda_alpha (used by quadrature tail bounds)
    double min_lambda_up_to(int ell) const;

    // All weights strictly positive and finite; throws otherwise.
    void validate() const;

private:
    int d_ = 0;
    int s_ = 0;
    WeightScheme scheme_ = WeightScheme::Unit;
    std::map<std::vector<int>, double> explicit_;
};

} // namespace sobkern
