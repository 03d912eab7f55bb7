#pragma once

#include <cstddef>
#include <span>

namespace sobkern {

// Gamma via the Lanczos approximation (g = 7, 9 terms), reflection below 0.5.
// Relative error is ~1e-14 on [0.5, 200].
double lanczos_gamma(double x);
double lanczos_log_gamma(double x);

// Modified Bessel function of the second kind.
//
// K_0 and K_1 use the Russon–Blair minimax rational approximations; integer
// orders follow by upward recurrence, half-odd-integer orders use the finite
// elementary closed form. Orders with 2*nu not an integer are rejected
// (throws std::domain_error naming the branch).
double bessel_k(double nu, double x);

// j_0..j_kmax at z >= 0 (series / Miller downward / upward recurrence).
void spherical_jn_array(int kmax, double z, std::span<double> out);

} // namespace sobkern
