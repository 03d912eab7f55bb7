#pragma once

#include <functional>
#include <memory>
#include <span>

#include "sobkern/weights.hpp"

namespace sobkern {

enum class SymbolKind {
    Sobolev,        // v^2 = 1 + sum_{0<|a|<=s} prod (2pi u_j)^{2 a_j}
    Isotropic,      // v^2 = (2pi)^{-d/2} (1 + ||2pi u||^2)^s, real s
    Weighted,       // v^2 = sum_{|a|<=s} lambda_a prod (2pi u_j)^{2 a_j}
    InfinityCutoff, // 1/v^2 = prod_j (1 - 4pi^2 u_j^2) on ||u||_inf <= 1/(2pi), 0 outside
    Custom,
};

// The positive symbol v(u)^2 whose reciprocal is the Fourier density of a
// kernel: K(x,t) = integral of prod_j cos(2pi (x_j-t_j) u_j) / v(u)^2.
class SymbolFunction {
public:
    static SymbolFunction sobolev(int d, int s);
    static SymbolFunction isotropic(int d, double s);
    static SymbolFunction weighted(MultiIndexWeights w);
    static SymbolFunction infinity_cutoff(int d);
    // custom: v(u)^2 >= 1 everywhere and v(u)^2 >= growth_coeff * (1 + ||2pi u||^2)^p
    // with 2p - d >= 1 (declared growth order 2p).
    static SymbolFunction custom(int d, std::function<double(std::span<const double>)> v_sq,
                                 double growth_order_2p, double growth_coeff);

    int dimension() const { return d_; }
    SymbolKind kind() const { return kind_; }
    double order() const { return s_; }
    const MultiIndexWeights& weights() const { return weights_; }

    // v(u)^2
    double value(std::span<const double> u) const;

    // Upper bound on the integral of 1/v^2 outside [-U, U]^d; monotone
    // decreasing in U. Requires U >= 1. Returns +inf when the declared decay
    // cannot give an integrable tail.
    double tail_bound(double U) const;

    // Compact support along every axis (InfinityCutoff): integration may stop
    // at this radius with zero tail. Zero means unbounded support.
    double support_radius() const;

    bool is_isotropic_radial() const { return kind_ == SymbolKind::Isotropic; }

private:
    int d_ = 0;
    SymbolKind kind_ = SymbolKind::Sobolev;
    double s_ = 0;
    MultiIndexWeights weights_;
    std::function<double(std::span<const double>)> custom_;
    double growth_2p_ = 0;
    double growth_coeff_ = 1;
};

} // namespace sobkern
