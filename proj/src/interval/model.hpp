#pragma once

#include <vector>

#include "common/types.hpp"
#include "geometry/traces.hpp"

namespace green3 {

/// Two intervals Omega+ = (0, 1) and Omega- = (1, 2) joined at x = 1, with
/// T = -d^2/dx^2 + c on each side (c+ on Omega+, c- on Omega-), Dirichlet
/// conditions built in at x = 0 and x = 2, and the boundary maps
///   Gamma0+ f = f(1-),  Gamma1+ f = -f'(1-),
///   Gamma0- f = f(1+),  Gamma1- f = +f'(1+).
/// All kernels below are closed forms in k = sqrt(z - c) (Im k >= 0); z is
/// any complex number, real z included.
class IntervalTripleModel {
public:
    IntervalTripleModel(double c_plus, double c_minus);

    double c(Side side) const { return side == Side::Plus ? c_plus_ : c_minus_; }
    cplx k(Side side, cplx z) const;

    /// m(z) = -k cot k. Throws Singularity at a Dirichlet eigenvalue (n pi)^2 + c
    /// of the side.
    cplx scalar_weyl(Side side, cplx z) const;

    /// (gamma(z) 1)(x): the solution of (T - z) f = 0 on the side with
    /// Gamma0 f = 1; zero for x off the side.
    cplx gamma(Side side, cplx z, double x) const;

    /// Resolvent kernels of the decoupled realizations: Dirichlet at x = 1 on
    /// either side (A0+-), Neumann at x = 1 on Omega- (A1-). Zero unless x and
    /// y lie on the same side.
    cplx dirichlet_kernel(Side side, cplx z, double x, double y) const;
    cplx neumann_minus_kernel(cplx z, double x, double y) const;

    /// Kernel of (A - z)^{-1}, A the coupled operator on (0, 2) (C^1 matching
    /// at x = 1), and its y-derivative at y = 1 for x != 1.
    cplx coupled_kernel(cplx z, double x, double y) const;
    cplx coupled_kernel_dy_at_interface(cplx z, double x) const;

    /// The first count roots of m+(l) + m-(l) on the real line, found by
    /// bisection between consecutive poles (n pi)^2 + c+-. These are the
    /// eigenvalues of A outside the Dirichlet spectrum sigma(A0).
    std::vector<double> coupled_eigenvalues(int count) const;

    /// Sorted Dirichlet spectrum sigma(A0) = {(n pi)^2 + c+-} below limit.
    std::vector<double> decoupled_spectrum(double limit) const;

    /// Distance-like measures used by the precondition checks.
    double dirichlet_pole_distance(Side side, cplx z) const;  // |sin k / k|
    double neumann_pole_distance(cplx z) const;               // |cos k-|

private:
    double c_plus_;
    double c_minus_;
};

/// sin(k x) / k, continuous at k = 0.
cplx sin_over(cplx k, double x);

}  // namespace green3
