#pragma once

#include <memory>
#include <string>

#include "sobkern/symbol.hpp"
#include "sobkern/weights.hpp"

namespace sobkern {

enum class KernelFamily {
    SobolevUnivariate, // d = 1, integer s >= 1, closed form
    SobolevFourier,    // d >= 1, integer s with 2s - d >= 1, oracle-evaluated
    SobolevInfinity,   // d >= 1, product of the infinite-smoothness factor
    TensorSobolev,     // d >= 1, integer s >= 1, product of univariate kernels
    MaternRadial,      // d >= 1, real s > d/2
    GaussianRadial,    // d >= 1
    Weighted,          // oracle-evaluated with a weight family
    GeneralSymbol,     // oracle-evaluated with a caller-supplied symbol
};

// One kernel family with its parameters; the value passed to every evaluator.
// Copyable and safe to share across threads.
struct KernelSpec {
    KernelFamily family = KernelFamily::SobolevUnivariate;
    int d = 1;
    double s = 1; // integral where the family requires it
    MultiIndexWeights weights;
    std::shared_ptr<const SymbolFunction> symbol;

    static KernelSpec sobolev1d(int s);
    static KernelSpec sobolev_fourier(int d, int s);
    static KernelSpec sobolev_infinity(int d);
    static KernelSpec tensor_sobolev(int d, int s);
    static KernelSpec matern(int d, double s);
    static KernelSpec gaussian(int d);
    static KernelSpec weighted(MultiIndexWeights w, double s);
    static KernelSpec general(std::shared_ptr<const SymbolFunction> symbol);

    // Throws std::domain_error naming the violated condition.
    void validate() const;

    std::string family_name() const;
    bool has_closed_form() const;
};

} // namespace sobkern
