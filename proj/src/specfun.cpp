#include "sobkern/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace sobkern {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos g = 7, 9 coefficients (Godfrey's table).
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_core(double x) {
    // x >= 0.5; returns Gamma(x)
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x - 1.0 + i);
    const double t = x + 6.5; // g + 0.5 with g = 7
    return std::sqrt(2.0 * kPi) * std::pow(t, x - 0.5) * std::exp(-t) * a;
}

double poly(const double* c, int n, double x) {
    double r = c[n - 1];
    for (int i = n - 2; i >= 0; --i) r = r * x + c[i];
    return r;
}

// Russon–Blair minimax rationals for K_0 and K_1 (Chalk River AECL-3461).
double bessel_k0_scalar(double x) {
    static const double P1[] = {2.4708152720399552679e+03, 5.9169059852270512312e+03,
                                4.6850901201934832188e+02, 1.1999463724910714109e+01,
                                1.3166052564989571850e-01, 5.8599221412826100000e-04};
    static const double Q1[] = {2.1312714303849120380e+04, -2.4994418972832303646e+02, 1.0};
    static const double P2[] = {-1.6128136304458193998e+06, -3.7333769444840079748e+05,
                                -1.7984434409411765813e+04, -2.9501657892958843865e+02,
                                -1.6414452837299064100e+00};
    static const double Q2[] = {-1.6128136304458193998e+06, 2.9865713163054025489e+04,
                                -2.5064972445877992730e+02, 1.0};
    static const double P3[] = {1.1600249425076035558e+02, 2.3444738764199315021e+03,
                                1.8321525870183537725e+04, 7.1557062783764037541e+04,
                                1.5097646353289914539e+05, 1.7398867902565686251e+05,
                                1.0577068948034021957e+05, 3.1075408980684392399e+04,
                                3.6832589957340267940e+03, 1.1394980557384778174e+02};
    static const double Q3[] = {9.2556599177304839811e+01, 1.8821890840982713696e+03,
                                1.4847228371802360957e+04, 5.8824616785857027752e+04,
                                1.2689839587977598727e+05, 1.5144644673520157801e+05,
                                9.7418829762268075784e+04, 3.1474655750295278825e+04,
                                4.4329628889746408858e+03, 2.0013443064949242491e+02, 1.0};
    if (x <= 1.0) {
        const double y = x * x;
        const double r1 = poly(P1, 6, y) / poly(Q1, 3, y);
        const double r2 = poly(P2, 5, y) / poly(Q2, 4, y);
        return r1 - std::log(x) * r2;
    }
    const double y = 1.0 / x;
    return std::exp(-x) / std::sqrt(x) * (poly(P3, 10, y) / poly(Q3, 11, y));
}

double bessel_k1_scalar(double x) {
    static const double P1[] = {-2.2149374878243304548e+06, 7.1938920065420586101e+05,
                                1.7733324035147015630e+05, 7.1885382604084798576e+03,
                                9.9991373567429309922e+01, 4.8127070456878442310e-01};
    static const double Q1[] = {-2.2149374878243304548e+06, 3.7264298672067697862e+04,
                                -2.8143915754538725829e+02, 1.0};
    static const double P2[] = {0.0,
                                -1.3531161492785421328e+06, -1.4758069205414222471e+05,
                                -4.5051623763436087023e+03, -5.3103913335180275253e+01,
                                -2.2795590826955002390e-01};
    static const double Q2[] = {-2.7062322985570842656e+06, 4.3117653211351080007e+04,
                                -3.0507151578787595807e+02, 1.0};
    static const double P3[] = {2.2196792496874548962e+00, 4.4137176114230414036e+01,
                                3.4122953486801312910e+02, 1.3319486433183221990e+03,
                                2.8590657697910288226e+03, 3.4540675585544584407e+03,
                                2.3123742209168871550e+03, 8.1094256146537402173e+02,
                                1.3182609918569941308e+02, 7.5584584631176030810e+00,
                                6.4257745859173138767e-02};
    static const double Q3[] = {1.7710478032601086579e+00, 3.4552228452758912848e+01,
                                2.5951223655579051357e+02, 9.6929165726802648634e+02,
                                1.9448440788918006154e+03, 2.1181000487171943810e+03,
                                1.2082692316002348638e+03, 3.3031020088765390854e+02,
                                3.6001069306861518855e+01, 1.0};
    if (x <= 1.0) {
        const double y = x * x;
        const double r1 = poly(P1, 6, y) / poly(Q1, 4, y);
        const double r2 = poly(P2, 6, y) / poly(Q2, 4, y);
        return (r1 + std::log(x) * r2) / x;
    }
    const double y = 1.0 / x;
    return std::exp(-x) / std::sqrt(x) * (poly(P3, 11, y) / poly(Q3, 10, y));
}

// K_{n+1/2}(x) = sqrt(pi/(2x)) e^{-x} sum_{k=0}^{n} (n+k)! / (k! (n-k)! (2x)^k)
double bessel_k_half(int n, double x) {
    double sum = 1.0;
    double term = 1.0;
    for (int k = 1; k <= n; ++k) {
        // ratio of consecutive terms: (n+k)(n-k+1) / (k * 2x)
        term *= static_cast<double>((n + k) * (n - k + 1)) / (2.0 * x * k);
        sum += term;
    }
    return std::sqrt(kPi / (2.0 * x)) * std::exp(-x) * sum;
}

} // namespace

double lanczos_gamma(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.5) {
        const double s = std::sin(kPi * x);
        if (s == 0.0) throw std::domain_error("lanczos_gamma: pole at non-positive integer");
        return kPi / (s * lanczos_core(1.0 - x));
    }
    return lanczos_core(x);
}

double lanczos_log_gamma(double x) {
    if (x < 0.5) return std::log(kPi / std::abs(std::sin(kPi * x))) - lanczos_log_gamma(1.0 - x);
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x - 1.0 + i);
    const double t = x + 6.5;
    return 0.5 * std::log(2.0 * kPi) + (x - 0.5) * std::log(t) - t + std::log(a);
}

double bessel_k(double nu, double x) {
    if (!(x > 0)) throw std::domain_error("bessel_k: requires x > 0");
    nu = std::abs(nu); // K_{-nu} = K_nu
    const double two_nu = 2.0 * nu;
    const double rounded = std::round(two_nu);
    if (std::abs(two_nu - rounded) > 1e-9) {
        throw std::domain_error(
            "bessel_k: order " + std::to_string(nu) +
            " unsupported (neither the half-integer closed-form branch nor the integer "
            "recurrence branch applies; 2*order must be an integer)");
    }
    const long r = static_cast<long>(rounded);
    if (r % 2 == 1) {
        return bessel_k_half(static_cast<int>((r - 1) / 2), x);
    }
    const int n = static_cast<int>(r / 2);
    if (n == 0) return bessel_k0_scalar(x);
    if (n == 1) return bessel_k1_scalar(x);
    // upward recurrence K_{m+1} = K_{m-1} + (2m/x) K_m, stable for K
    double km1 = bessel_k0_scalar(x);
    double k = bessel_k1_scalar(x);
    for (int m = 1; m < n; ++m) {
        const double kp1 = km1 + (2.0 * m / x) * k;
        km1 = k;
        k = kp1;
    }
    return k;
}

void spherical_jn_array(int kmax, double z, std::span<double> out) {
    if (kmax < 0 || out.size() < static_cast<std::size_t>(kmax + 1))
        throw std::invalid_argument("spherical_jn_array: bad output span");
    if (z < 0) throw std::domain_error("spherical_jn_array: requires z >= 0");

    if (z < 1e-3) {
        // series j_k(z) = z^k / (2k+1)!! * (1 - (z^2/2)/(2k+3) + (z^2/2)^2/(2 (2k+3)(2k+5)) - ...)
        const double h = 0.5 * z * z;
        double zk_over_dfact = 1.0; // z^k / (2k+1)!!
        for (int k = 0; k <= kmax; ++k) {
            double series = 1.0 - h / (2 * k + 3) + h * h / (2.0 * (2 * k + 3) * (2 * k + 5)) -
                            h * h * h / (6.0 * (2 * k + 3) * (2 * k + 5) * (2 * k + 7));
            out[k] = zk_over_dfact * series;
            zk_over_dfact *= z / (2 * k + 3);
        }
        return;
    }

    if (z > kmax + 5) {
        // upward recurrence from j0, j1 is stable while k < z
        double jm1 = std::sin(z) / z;
        out[0] = jm1;
        if (kmax == 0) return;
        double j = std::sin(z) / (z * z) - std::cos(z) / z;
        out[1] = j;
        for (int k = 1; k < kmax; ++k) {
            const double jp1 = (2.0 * k + 1.0) / z * j - jm1;
            jm1 = j;
            j = jp1;
            out[k + 1] = j;
        }
        return;
    }

    // Miller's downward recurrence, normalized by j0 = sin(z)/z
    const int start = kmax + 16 + static_cast<int>(z);
    double jp1 = 0.0;
    double j = 1e-30;
    std::vector<double> tmp(static_cast<std::size_t>(kmax + 1));
    for (int k = start; k >= 1; --k) {
        const double jm1 = (2.0 * k + 1.0) / z * j - jp1;
        jp1 = j;
        j = jm1;
        if (k - 1 <= kmax) tmp[static_cast<std::size_t>(k - 1)] = j;
        if (std::abs(j) > 1e280) {
            j *= 1e-280;
            jp1 *= 1e-280;
            for (auto& v : tmp) v *= 1e-280;
        }
    }
    const double scale = (std::sin(z) / z) / tmp[0];
    for (int k = 0; k <= kmax; ++k) out[k] = tmp[static_cast<std::size_t>(k)] * scale;
}

} // namespace sobkern
