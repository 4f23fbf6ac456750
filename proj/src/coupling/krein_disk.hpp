#pragma once

#include "common/report.hpp"
#include "common/types.hpp"

namespace green3 {

/// Fourier mode m of A = -Delta + c on the plane split by the unit circle.
/// Every operator in the Krein-type formulas acts on mode m as a scalar or as
/// an integral kernel in the radial variable (measure s ds):
///   full-plane resolvent  G(r, s)  = (i pi / 2) J_m(k r<) H_m(k r>),  k = sqrt(z - c),
///   gamma_+ phi = J_m(k r)/J_m(k) phi,  gamma_- phi = H_m(k r)/H_m(k) phi,
///   M_+ = -k J_m'(k)/J_m(k),  M_- = k H_m'(k)/H_m(k).
class DiskModeModel {
public:
    /// Throws Precondition when z - c lies in [0, inf) (spectrum of A and of the
    /// decoupled Dirichlet/Neumann realizations), naming a Dirichlet eigenvalue
    /// of the interior disk when z hits one. Real z below c is admissible.
    DiskModeModel(cplx z, int m, double c);

    cplx k() const { return k_; }
    cplx m_plus() const { return m_plus_; }
    cplx m_minus() const { return m_minus_; }

    /// Kernels; r and s are radii, the block is chosen from r < 1 or r > 1.
    cplx full_plane(double r, double s) const;
    cplx dirichlet_plus(double r, double s) const;   // zero unless r, s < 1
    cplx dirichlet_minus(double r, double s) const;  // zero unless r, s > 1
    cplx neumann_minus(double r, double s) const;    // zero unless r, s > 1
    cplx gamma_plus(double r) const;
    cplx gamma_minus(double r) const;
    /// Kernels of gamma_+-(conj z)^*: f -> int conj(gamma(conj z)(s)) f(s) s ds.
    cplx gamma_plus_adjoint(double s) const;
    cplx gamma_minus_adjoint(double s) const;

    /// Right-hand side of the Krein formula
    /// (A0 - z)^{-1} - gamma(z) (M+ + M-)^{-1} gamma(conj z)^*.
    cplx krein_kernel(double r, double s) const;
    /// Right-hand side of the mixed formula with A0+ (+) A1-:
    /// (A0+ (+) A1- - z)^{-1} + gamma_hat(z) Sigma(z) gamma_hat(conj z)^*.
    cplx mixed_kernel(double r, double s) const;
    /// R_D- - R_N- - gamma_- M_-^{-1} gamma_-^* (exterior block).
    cplx res01_difference(double r, double s) const;

private:
    cplx z_;
    int m_;
    double c_;
    cplx k_;
    cplx j1_, jp1_, h1_, hp1_;  // J_m, J_m', H_m, H_m' at k
    cplx m_plus_, m_minus_;
    cplx j(double r) const;
    cplx h(double r) const;
};

/// Relative residuals over radius pairs (r, s) in all four blocks.
struct KreinModeResult {
    double krein = 0.0;
    double mixed = 0.0;
    double res01 = 0.0;
};

/// Relative residuals of the three identities in mode m at z.
KreinModeResult disk_mode_residuals(cplx z, int m, double c);

/// Scalar residual of the Krein formula in mode m (relative to the kernel scale).
double krein_resolvent_disk_mode(cplx z, int m, double c);

/// Scalar residual of the mixed Dirichlet/Neumann formula in mode m.
double mixed_resolvent_disk_mode(cplx z, int m, double c);

/// Report over modes 0..max_mode for every z.
ResidualReport krein_disk_report(const std::vector<cplx>& zs, int max_mode, double c,
                                 double tolerance = 1e-10);

}  // namespace green3
