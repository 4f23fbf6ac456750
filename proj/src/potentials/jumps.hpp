#pragma once

#include <vector>

#include "common/report.hpp"
#include "geometry/curve.hpp"
#include "geometry/traces.hpp"
#include "specfun/spectral_point.hpp"

namespace green3 {

/// Node samples of exp(i m t) for m = -max_mode..max_mode.
std::vector<CVector> fourier_densities(const QuadratureGrid& grid, int max_mode);

/// One-sided boundary limits of S phi, grad S phi and D phi, taken by offset
/// evaluation and extrapolation.
struct LayerLimits {
    CVector single_plus;
    CVector single_minus;
    CVector normal_single_plus;   // tau_N^+ S phi
    CVector normal_single_minus;  // tau_N^- S phi, with n- = -n+
    CVector double_plus;
    CVector double_minus;
};

std::vector<LayerLimits> layer_potential_limits(const InterfaceCurve& curve,
                                                const QuadratureGrid& grid,
                                                const SpectralPoint& z,
                                                const std::vector<CVector>& densities,
                                                const OffsetOptions& offsets = {});

/// Sup-norm residuals over the densities of
///   tau_D^+- S phi - S phi,
///   tau_N^+ S phi - (1/2 - Kstar) phi,  tau_N^- S phi - (1/2 + Kstar) phi,
///   tau_D^+ D phi - (1/2 + K) phi,      tau_D^- D phi - (-1/2 + K) phi.
ResidualReport jump_relation_residuals(const InterfaceCurve& curve, const QuadratureGrid& grid,
                                       const SpectralPoint& z,
                                       const std::vector<CVector>& densities,
                                       double tolerance = 1e-6,
                                       const OffsetOptions& offsets = {});

/// Jump residuals at N for Fourier modes |m| <= max_mode, together with the
/// discrepancy between the N- and 2N-node operator images S phi, K phi,
/// Kstar phi on the common nodes.
ResidualReport jump_relation_self_convergence(const CurveSpec& spec, int n, const SpectralPoint& z,
                                              int max_mode, double tolerance = 1e-5,
                                              const OffsetOptions& offsets = {});

}  // namespace green3
