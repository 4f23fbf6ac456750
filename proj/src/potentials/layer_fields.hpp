#pragma once

#include <span>
#include <vector>

#include "common/quadrature.hpp"
#include "common/types.hpp"
#include "geometry/curve.hpp"
#include "geometry/trig_density.hpp"
#include "specfun/spectral_point.hpp"

namespace green3 {

/// Smallest distance from the curve at which the plain trapezoidal field
/// evaluation is inside its accuracy regime: 5 (2 pi / N).
inline double field_distance_limit(const QuadratureGrid& grid) { return 5.0 * grid.weight; }

/// Single layer potential S_z phi at off-boundary points (trapezoid rule).
/// Throws AccuracyRegime for points closer than field_distance_limit.
CVector eval_single_layer_field(const InterfaceCurve& curve, const QuadratureGrid& grid,
                                const SpectralPoint& z, const CVector& phi,
                                const std::vector<Vec2>& points);

/// Double layer potential D_z phi, kernel n(y) . (grad E)(x - y).
CVector eval_double_layer_field(const InterfaceCurve& curve, const QuadratureGrid& grid,
                                const SpectralPoint& z, const CVector& phi,
                                const std::vector<Vec2>& points);

/// Evaluates S phi, grad S phi and D phi for a family of densities at
/// arbitrary off-curve points. Far from the curve the trapezoid rule on the
/// nodes is used; near the curve the densities are continued by their
/// trigonometric interpolants and the parameter integral is done adaptively
/// with a breakpoint at the closest curve point.
class LayerFieldEvaluator {
public:
    /// Values per density in the output: S, dS/dx1, dS/dx2, D.
    static constexpr int kStride = 4;

    LayerFieldEvaluator(const InterfaceCurve& curve, const QuadratureGrid& grid,
                        const SpectralPoint& z, std::vector<CVector> densities);

    int density_count() const { return static_cast<int>(densities_.size()); }
    int output_size() const { return kStride * density_count(); }

    void evaluate(Vec2 x, std::span<cplx> out) const;
    void evaluate_direct(Vec2 x, std::span<cplx> out) const;
    void evaluate_close(Vec2 x, double foot_t, std::span<cplx> out) const;

    /// Distance below which evaluate() switches to the adaptive rule.
    double close_threshold() const { return close_threshold_; }

    void set_adaptive_options(const AdaptiveOptions& opts) { adaptive_ = opts; }

private:
    const InterfaceCurve& curve_;
    const QuadratureGrid& grid_;
    SpectralPoint z_;
    std::vector<CVector> densities_;
    std::vector<TrigDensity> continued_;
    double close_threshold_ = 0.0;
    AdaptiveOptions adaptive_;
};

}  // namespace green3
