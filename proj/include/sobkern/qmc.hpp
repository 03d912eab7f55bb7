#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sobkern/kernel_spec.hpp"
#include "sobkern/rng.hpp"

namespace sobkern {

enum class DensityKind { StandardGaussian, UniformBox };

// Probability density on R^d with seeded, counter-indexed sampling.
struct Density {
    DensityKind kind = DensityKind::StandardGaussian;
    int d = 1;
    std::vector<double> lo, hi; // UniformBox only, lo < hi componentwise
    std::uint64_t rng_seed = 0;

    static Density standard_gaussian(int d, std::uint64_t seed);
    static Density uniform_box(std::vector<double> lo, std::vector<double> hi, std::uint64_t seed);

    void validate() const;
    double pdf(std::span<const double> x) const;
    // Writes point #index of the stream defined by (rng, layout below).
    // Gaussian points consume 2*ceil(d/2) counters per point, uniform d.
    void sample(const CounterRng& rng, std::uint64_t index, std::span<double> out) const;
    std::uint64_t counters_per_point() const;
};

struct PointSet {
    int d = 1;
    std::vector<double> points; // row-major, n x d
    std::uint64_t seed = 0;
    std::string generator;

    std::size_t size() const { return d == 0 ? 0 : points.size() / static_cast<std::size_t>(d); }
    std::span<const double> point(std::size_t j) const {
        return {points.data() + j * static_cast<std::size_t>(d), static_cast<std::size_t>(d)};
    }
};

// Draw n i.i.d.-rho points as stream indices [0, n) of the given substream tag.
PointSet sample_point_set(const Density& rho, std::size_t n, std::uint64_t substream_tag);

struct McEstimate {
    double value = 0;
    double std_err = 0; // 0 when the value is closed-form
};

struct WceReport {
    double e2 = 0;        // hh - cross + gram, reported signed
    double hh = 0;        // ||h||^2 = int int K(x,t) rho(x) rho(t)
    double cross = 0;     // (2/n) sum_j h(x_j)
    double gram = 0;      // (1/n^2) sum_ij K(x_i, x_j)
    double mc_std_err = 0;

    double e() const; // sqrt(max(0, e2))
};

// h(t) = int K(t, x) rho(x) dx. Closed form for (GaussianRadial,
// StandardGaussian); seeded Monte Carlo otherwise.
McEstimate representer_h(const KernelSpec& spec, const Density& rho, std::span<const double> t,
                         std::size_t mc_samples);

// ||S_rho||^2 = int int K(x,t) rho(x) rho(t) dx dt, estimated by disjoint
// sample pairs from a single stream (unbiased) when no closed form applies.
McEstimate representer_norm_sq(const KernelSpec& spec, const Density& rho, std::size_t mc_samples);

WceReport worst_case_error(const KernelSpec& spec, const Density& rho, const PointSet& pts,
                           std::size_t mc_samples);

// K(0,0) / n: the averaged-square bound for translation-invariant kernels.
double mean_square_bound(const KernelSpec& spec, std::size_t n);

struct SearchResult {
    PointSet best;
    WceReport report;
    std::size_t best_trial = 0;
};

// Draws `trials` i.i.d.-rho point sets (trial t = substream t) and returns
// the one minimizing e^2. Deterministic given the seed; a longer run extends
// the same trial sequence, so the minimum never increases with `trials`.
SearchResult search_point_set(const KernelSpec& spec, const Density& rho, std::size_t n,
                              std::size_t trials, std::uint64_t seed, std::size_t mc_samples);

// ceil((||I_K|| / eps)^2)
std::uint64_t info_complexity_bound(const KernelSpec& spec, double eps);
// ceil(100.6009 * (6/11)^{2d} / eps^2), the dimension-uniform cap for the
// standard Sobolev family.
std::uint64_t info_complexity_cap_sobolev(int d, double eps);

} // namespace sobkern
