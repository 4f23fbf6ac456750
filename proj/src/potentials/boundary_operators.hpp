#pragma once

#include <string>

#include "common/types.hpp"
#include "geometry/curve.hpp"
#include "specfun/spectral_point.hpp"

namespace green3 {

enum class OperatorLabel { S, K, Kstar, MPlus, MMinus, Custom };

const char* to_string(OperatorLabel label);

/// Dense Nystrom matrix acting on node samples.
struct BoundaryOperator {
    OperatorLabel label = OperatorLabel::Custom;
    cplx z{};
    CMatrix matrix;

    CVector apply(const CVector& phi) const { return matrix * phi; }
    int size() const { return static_cast<int>(matrix.rows()); }
};

/// Conventions, with E the fundamental solution and n = n+:
///   (S phi)(x)     = int E(x - y) phi(y) ds_y
///   (K phi)(x)     = P.V. int n(y) . (grad E)(x - y) phi(y) ds_y
///   (Kstar phi)(x) = P.V. int n(x) . (grad E)(y - x) phi(y) ds_y
/// so that tau_D^+ D = 1/2 + K, tau_D^- D = -1/2 + K,
/// tau_N^+ S = 1/2 - Kstar and tau_N^- S = 1/2 + Kstar.
struct LayerOperators {
    CMatrix S;
    CMatrix K;
    CMatrix Kstar;
};

struct AssemblyRequest {
    bool single = true;
    bool double_layer = true;
    bool adjoint = true;
};

/// Assembles the requested operators in one pass over the node pairs. The
/// logarithmic singularities of S, K and Kstar are split off and integrated by
/// Kress's trigonometric weights; at z = 0 the Laplace kernels are used.
LayerOperators assemble_layer_operators(const QuadratureGrid& grid, const SpectralPoint& z,
                                        AssemblyRequest request = {});

BoundaryOperator assemble_single_layer(const QuadratureGrid& grid, const SpectralPoint& z);
BoundaryOperator assemble_double_layer(const QuadratureGrid& grid, const SpectralPoint& z);
BoundaryOperator assemble_adjoint_double_layer(const QuadratureGrid& grid, const SpectralPoint& z);

/// Kress weights R_d, d = 0..N-1, for the kernel ln(4 sin^2((t - tau)/2)).
RVector kress_weights(int n);

/// Adjoint of a node-space matrix with respect to the arc-length weights:
/// W^{-1} A^H W.
CMatrix quadrature_adjoint(const CMatrix& a, const RVector& weights);

}  // namespace green3
