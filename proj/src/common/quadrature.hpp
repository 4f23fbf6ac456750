#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "common/types.hpp"

namespace green3 {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule with n points on [a, b].
QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Vector-valued integrand: writes dim complex values for parameter t.
using VectorIntegrand = std::function<void(double t, std::span<cplx> out)>;

struct AdaptiveOptions {
    double abs_tol = 1e-13;
    double rel_tol = 1e-12;
    int max_depth = 40;
    int max_evaluations = 200000;
};

/// Adaptive Gauss-Kronrod (7/15) integration of a vector-valued integrand over
/// [a, b]. Error is controlled in the max-norm over components.
void integrate_adaptive(const VectorIntegrand& f, int dim, double a, double b,
                        std::span<cplx> result, const AdaptiveOptions& opts = {});

/// Polynomial extrapolation to h = 0 from samples (h_j, v_j) by Neville's scheme.
cplx extrapolate_to_zero(std::span<const double> h, std::span<const cplx> v);

}  // namespace green3
