#pragma once

// Independent reference implementations used only by the tests. None of these
// share code with the library's special-function paths.

#include <cmath>
#include <complex>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846;

/// J_m(w) = (1/2pi) int_0^2pi exp(i (w sin t - m t)) dt by the periodic trapezoid rule.
inline cplx bessel_j_integral(int m, cplx w, int nodes = 512) {
    cplx sum{};
    for (int j = 0; j < nodes; ++j) {
        const double t = 2.0 * pi * j / nodes;
        sum += std::exp(cplx{0.0, 1.0} * (w * std::sin(t) - static_cast<double>(m) * t));
    }
    return sum / static_cast<double>(nodes);
}

/// K_m(x) = int_0^inf exp(-x cosh t) cosh(m t) dt for Re x > 0, trapezoid
/// rule with a step fine enough to resolve the phase exp(-i Im(x) cosh t).
inline cplx bessel_k_integral(int m, cplx x) {
    double t_end = 0.0;
    while (x.real() * (std::cosh(t_end) - 1.0) - m * t_end < 45.0) t_end += 0.01;
    const double h = std::min(0.005, 0.2 / (std::abs(x) * std::cosh(t_end)));
    cplx sum = 0.5 * std::exp(-x);
    const int steps = static_cast<int>(t_end / h) + 1;
    for (int j = 1; j <= steps; ++j) {
        const double t = j * h;
        sum += std::exp(-x * std::cosh(t)) * std::cosh(m * t);
    }
    return sum * h;
}

/// H^(1)_m(w) for Im w > 0 from K_m(-i w).
inline cplx hankel1_from_k(int m, cplx w) {
    const cplx i{0.0, 1.0};
    return 2.0 / (pi * std::pow(i, m + 1)) * bessel_k_integral(m, -i * w);
}

/// H^(1)_m(x) for real x > 0 from Boost's J and Y.
inline cplx hankel1_real(int m, double x) {
    return {boost::math::cyl_bessel_j(m, x), boost::math::cyl_neumann(m, x)};
}

inline double bessel_i(int m, double x) { return boost::math::cyl_bessel_i(m, x); }
inline double bessel_k(int m, double x) { return boost::math::cyl_bessel_k(m, x); }
inline double bessel_i_prime(int m, double x) { return boost::math::cyl_bessel_i_prime(m, x); }
inline double bessel_k_prime(int m, double x) { return boost::math::cyl_bessel_k_prime(m, x); }
inline double bessel_j_zero(int k) { return boost::math::cyl_bessel_j_zero(0.0, k); }

inline double rel_err(cplx a, cplx b) {
    const double s = std::max(std::abs(b), 1e-300);
    return std::abs(a - b) / s;
}

}  // namespace oracle
