#include "sobkern/weights.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sobkern/multi_index.hpp"

namespace sobkern {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;

double factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}
} // namespace

MultiIndexWeights MultiIndexWeights::unit(int d, int s) {
    MultiIndexWeights w;
    w.d_ = d;
    w.s_ = s;
    w.scheme_ = WeightScheme::Unit;
    w.validate();
    return w;
}

MultiIndexWeights MultiIndexWeights::isotropic_hs(int d, int s) {
    MultiIndexWeights w;
    w.d_ = d;
    w.s_ = s;
    w.scheme_ = WeightScheme::IsotropicHs;
    w.validate();
    return w;
}

MultiIndexWeights MultiIndexWeights::gaussian_infinity(int d, int truncation) {
    MultiIndexWeights w;
    w.d_ = d;
    w.s_ = truncation;
    w.scheme_ = WeightScheme::GaussianInfinity;
    w.validate();
    return w;
}

MultiIndexWeights MultiIndexWeights::explicit_map(int d, int s,
                                                  std::map<std::vector<int>, double> lambdas) {
    MultiIndexWeights w;
    w.d_ = d;
    w.s_ = s;
    w.scheme_ = WeightScheme::Explicit;
    w.explicit_ = std::move(lambdas);
    w.validate();
    return w;
}

double MultiIndexWeights::lambda(std::span<const int> alpha) const {
    if (static_cast<int>(alpha.size()) != d_)
        throw std::invalid_argument("MultiIndexWeights::lambda: dimension mismatch");
    int total = 0;
    for (int a : alpha) total += a;
    if (total > s_) throw std::domain_error("MultiIndexWeights::lambda: |alpha| exceeds order");
    switch (scheme_) {
        case WeightScheme::Unit:
            return 1.0;
        case WeightScheme::IsotropicHs: {
            double alpha_fact = 1;
            for (int a : alpha) alpha_fact *= factorial(a);
            return factorial(total) * static_cast<double>(binomial(s_, total)) /
                   (std::pow(kTwoPi, d_ / 2.0) * alpha_fact);
        }
        case WeightScheme::GaussianInfinity: {
            double alpha_fact = 1;
            for (int a : alpha) alpha_fact *= factorial(a);
            return 1.0 / (std::pow(2.0, total) * alpha_fact);
        }
        case WeightScheme::Explicit: {
            auto it = explicit_.find(std::vector<int>(alpha.begin(), alpha.end()));
            if (it == explicit_.end())
                throw std::domain_error("MultiIndexWeights::lambda: missing explicit weight");
            return it->second;
        }
    }
    throw std::logic_error("MultiIndexWeights::lambda: bad scheme");
}

double MultiIndexWeights::min_lambda_up_to(int ell) const {
    const auto& set = multi_indices(d_, std::min(ell, s_));
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < set.size(); ++i)
        m = std::min(m, lambda(std::span<const int>(set.alpha(i), static_cast<std::size_t>(d_))));
    return m;
}

void MultiIndexWeights::validate() const {
    if (d_ < 1) throw std::domain_error("MultiIndexWeights: d >= 1 required");
    if (s_ < 0) throw std::domain_error("MultiIndexWeights: order >= 0 required");
    const auto& set = multi_indices(d_, s_);
    for (std::size_t i = 0; i < set.size(); ++i) {
        const double l = lambda(std::span<const int>(set.alpha(i), static_cast<std::size_t>(d_)));
        if (!(l > 0) || !std::isfinite(l))
            throw std::domain_error("MultiIndexWeights: all weights must be positive and finite");
    }
}

} // namespace sobkern
