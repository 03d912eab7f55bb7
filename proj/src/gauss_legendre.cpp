#include "sobkern/gauss_legendre.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace sobkern {

namespace {

constexpr double kPi = 3.14159265358979323846;

GaussLegendreRule build_rule(int n) {
    GaussLegendreRule r;
    r.order = n;
    r.nodes.resize(n);
    r.weights.resize(n);
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // one final polish
                p0 = 1.0;
                p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                pp = n * (x * p1 - p0) / (x * x - 1.0);
                x -= p1 / pp;
                break;
            }
        }
        r.nodes[n - 1 - i] = x;
        r.nodes[i] = -x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.nodes[n / 2] = 0.0;

    r.vand.resize(static_cast<std::size_t>(n) * n);
    r.proj.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const double x = r.nodes[i];
        double p0 = 1.0, p1 = x;
        r.vand[static_cast<std::size_t>(i) * n + 0] = 1.0;
        if (n > 1) r.vand[static_cast<std::size_t>(i) * n + 1] = x;
        for (int k = 2; k < n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            r.vand[static_cast<std::size_t>(i) * n + k] = p2;
            p0 = p1;
            p1 = p2;
        }
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            r.proj[static_cast<std::size_t>(k) * n + i] =
                (2.0 * k + 1.0) / 2.0 * r.weights[i] * r.vand[static_cast<std::size_t>(i) * n + k];
    return r;
}

} // namespace

const GaussLegendreRule& gauss_legendre(int order) {
    if (order < 2 || order > 64) throw std::domain_error("gauss_legendre: order in [2, 64]");
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
    return it->second;
}

void legendre_values(int kmax, double x, std::span<double> out) {
    if (kmax < 0 || out.size() < static_cast<std::size_t>(kmax + 1))
        throw std::invalid_argument("legendre_values: bad output span");
    out[0] = 1.0;
    if (kmax == 0) return;
    out[1] = x;
    for (int k = 2; k <= kmax; ++k)
        out[k] = ((2.0 * k - 1.0) * x * out[k - 1] - (k - 1.0) * out[k - 2]) / k;
}

} // namespace sobkern
