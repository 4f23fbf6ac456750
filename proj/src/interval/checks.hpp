#pragma once

#include <functional>
#include <vector>

#include "common/report.hpp"
#include "common/types.hpp"
#include "interval/model.hpp"

namespace green3 {

struct IntervalOptions {
    int grid_n = 200;        // evaluation points per interval
    int quad_nodes = 200;    // Gauss-Legendre nodes per smooth piece
    double tolerance = 1e-8;
};

/// Gaussian bumps exp(-((x - x_j) / 0.15)^2), x_j in {0.25, 0.6, 0.95, 1.35, 1.75}.
std::vector<std::function<double(double)>> interval_bump_basis();

/// (A - z)^{-1} = (A0 - z)^{-1} - gamma(z) (m+ + m-)^{-1} gamma(conj z)^*
/// applied to the bump basis; max abs residual over basis and grid.
ResidualReport krein_formula_check(cplx z, double c_plus, double c_minus, const IntervalOptions& opts = {});

/// (A - z)^{-1} = (A0+ (+) A1- - z)^{-1} + gamma_hat(z) Sigma(z) gamma_hat(conj z)^*
/// with gamma_hat = diag(gamma+, gamma- m-^{-1}) and
/// Sigma = -[[m+, 1], [1, -m-^{-1}]]^{-1}; also
/// (A0- - z)^{-1} - (A1- - z)^{-1} = gamma- m-^{-1} gamma-(conj z)^*.
ResidualReport mixed_formula_check(cplx z, double c_plus, double c_minus, const IntervalOptions& opts = {});

/// A piecewise C^2 pair on (0, 1) and (1, 2): values and derivatives of each
/// side, and T f = -f'' + c f. Each side vanishes at its outer endpoint.
struct PiecewiseField {
    std::function<double(double)> plus, plus_d1, plus_t;
    std::function<double(double)> minus, minus_d1, minus_t;
};

/// Families used by the 1D third Green identity: "smooth" (global cubic
/// 2x + x^2 - x^3), "ramp" (f+ = x, f- = 0) and "zero".
PiecewiseField interval_example_field(const std::string& family, double c);

/// f = G T f + D[Gamma0 f] - S[Gamma1 f] for A = -d^2/dx^2 + c (both sides),
/// with S phi = G_A(x, 1) phi and D phi = -d_y G_A(x, y)|_{y=1} phi. Max abs
/// residual over 100 points of (0, 2).
ResidualReport third_green_identity_1d(const PiecewiseField& f, double c, const std::string& family = "custom",
                                       int points = 100, double tolerance = 1e-8, int quad_nodes = 200);

/// Closed-form identities of the boundary triple at nonreal z on both sides:
///   gamma(z)^* f = Gamma1 (A0 - conj z)^{-1} f   (5 seeded random f),
///   m(z) - m(conj z) = (z - conj z) int |gamma(z) 1|^2,
///   antisymmetry of that identity under z <-> conj z,
///   the second Green identity for closed-form trial pairs,
///   Im m(w) / Im w > 0 on 100 sample points w.
ResidualReport abstract_identity_suite(const std::vector<cplx>& zs, double c_plus, double c_minus,
                                       unsigned seed = 1, double tolerance = 1e-9);

/// Roots of m+ + m- below limit against the closed-form eigenvalues for
/// equal potentials c+ = c- = c: ((2j - 1) pi / 2)^2 + c, and their distance
/// to sigma(A0).
ResidualReport eigenvalue_criterion_check(double c, int count = 3, double tolerance = 1e-10);

}  // namespace green3
