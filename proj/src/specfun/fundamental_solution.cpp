#include "specfun/fundamental_solution.hpp"

#include <cmath>

#include "common/error.hpp"
#include "specfun/bessel.hpp"

namespace green3 {

namespace {

void check_distance(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        fail(ErrorCode::Singularity, "fundamental solution: distance must be positive and finite");
    }
}

}  // namespace

cplx fundamental_solution(int n, const SpectralPoint& z, double r) {
    check_distance(r);
    if (n == 2) {
        if (z.is_zero()) return -std::log(r) / (2.0 * pi);
        return 0.25 * I * hankel1(0, z.sqrt_z() * r);
    }
    if (n == 3) {
        // (i/4)(2 pi r / k)^(-1/2) H^(1)_(1/2)(k r) with the closed form of the
        // half-integer Hankel function.
        if (z.is_zero()) return 1.0 / (4.0 * pi * r);
        return std::exp(I * z.sqrt_z() * r) / (4.0 * pi * r);
    }
    fail(ErrorCode::Unsupported, "fundamental solution: dimension must be 2 or 3");
}

cplx fundamental_solution_radial_derivative(const SpectralPoint& z, double r) {
    check_distance(r);
    if (z.is_zero()) return -1.0 / (2.0 * pi * r);
    const cplx k = z.sqrt_z();
    return -0.25 * I * k * hankel1(1, k * r);
}

CVec2 fundamental_solution_gradient(const SpectralPoint& z, Vec2 x) {
    const double r = norm(x);
    if (r == 0.0) fail(ErrorCode::Singularity, "fundamental solution gradient: x = 0");
    const cplx d = fundamental_solution_radial_derivative(z, r);
    return {d * (x.x / r), d * (x.y / r)};
}

}  // namespace green3
