#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "common/report.hpp"
#include "common/types.hpp"
#include "geometry/curve.hpp"
#include "geometry/traces.hpp"
#include "potentials/boundary_operators.hpp"
#include "potentials/layer_fields.hpp"
#include "specfun/spectral_point.hpp"

namespace green3 {

/// Dirichlet-to-Neumann map phi -> -tau_N^side (gamma_side(z) phi) on the nodes.
struct WeylMap {
    Side side = Side::Plus;
    cplx z{};
    CMatrix matrix;

    CVector apply(const CVector& phi) const { return matrix * phi; }
};

/// Throws Resonance unless sigma_min(S) >= 1e-12 ||S||; returns
/// (sigma_min, sigma_max).
std::pair<double, double> check_single_layer_resonance(const CMatrix& s, const SpectralPoint& z);

/// LU factorization of S(z) with the resonance guard
/// sigma_min(S) >= 1e-12 ||S||; throws Resonance otherwise.
class SingleLayerSolver {
public:
    SingleLayerSolver(const CMatrix& s, const SpectralPoint& z);
    CVector solve(const CVector& rhs) const { return lu_.solve(rhs); }
    CMatrix solve(const CMatrix& rhs) const { return lu_.solve(rhs); }
    double sigma_min() const { return sigma_min_; }
    double sigma_max() const { return sigma_max_; }

private:
    Eigen::PartialPivLU<CMatrix> lu_;
    double sigma_min_ = 0.0;
    double sigma_max_ = 0.0;
};

/// Solution operator of the Dirichlet problem (-Delta - z) f = 0 in
/// Omega_side, tau_D f = phi, realized as f = S_z psi with S(z) psi = phi.
/// On the exterior side the kernel's Im sqrt(z) > 0 selects the decaying
/// solution.
class GammaField {
public:
    GammaField(const InterfaceCurve& curve, const QuadratureGrid& grid, const SpectralPoint& z,
               Side side, const std::vector<CVector>& data);

    int count() const { return evaluator_->density_count(); }
    Side side() const { return side_; }
    const std::vector<CVector>& densities() const { return densities_; }

    /// Field values of every data vector at x (one value per data vector).
    void values(Vec2 x, std::span<cplx> out) const;
    /// Values and gradients: per data vector f, df/dx1, df/dx2.
    void values_and_gradients(Vec2 x, std::span<cplx> out) const;

private:
    const InterfaceCurve& curve_;
    Side side_;
    std::vector<CVector> densities_;
    std::unique_ptr<LayerFieldEvaluator> evaluator_;
};

/// Interior and exterior Dirichlet-to-Neumann maps,
///   M+ = -(1/2 - Kstar) S^{-1},   M- = -(1/2 + Kstar) S^{-1}.
WeylMap dtn_map(Side side, const QuadratureGrid& grid, const SpectralPoint& z);

/// Both maps from one assembly.
struct WeylPair {
    WeylMap plus;
    WeylMap minus;
};
WeylPair dtn_maps(const QuadratureGrid& grid, const SpectralPoint& z);

/// Eigenvalues of M on the Fourier vectors exp(i m t): the Rayleigh
/// quotients e_m^H W M e_m / e_m^H W e_m for m = 0..max_mode.
std::vector<cplx> mode_eigenvalues(const WeylMap& m, const QuadratureGrid& grid, int max_mode);

}  // namespace green3

namespace green3 {

/// Spectral accuracy of the discrete maps. On the unit disk the mode
/// eigenvalues are compared with M+ = -k J_m'(k)/J_m(k) and
/// M- = k H_m'(k)/H_m(k), k = sqrt(z), for m = 0..max_mode; the Steklov
/// proxy M+(-1e-6) on modes 1..4 is compared with -m. On every curve the
/// compression of W M to the modes |m| <= max_mode must be Hermitian at real z.
struct DtnReportOptions {
    double tolerance = 1e-8;
    double steklov_tolerance = 1e-3;
    double symmetry_tolerance = 1e-6;
};

ResidualReport dtn_report(const CurveSpec& spec, int n, const std::vector<cplx>& zs, int max_mode,
                          const DtnReportOptions& opts = {});

}  // namespace green3
