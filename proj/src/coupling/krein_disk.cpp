#include "coupling/krein_disk.hpp"

#include <cmath>
#include <sstream>

#include "common/error.hpp"
#include "specfun/bessel.hpp"
#include "specfun/spectral_point.hpp"

namespace green3 {

namespace {

constexpr double kRadii[] = {0.25, 0.6, 0.9, 1.15, 1.7, 2.6};

}  // namespace

DiskModeModel::DiskModeModel(cplx z, int m, double c) : z_(z), m_(m), c_(c) {
    if (m < 0) fail(ErrorCode::InvalidArgument, "disk mode: mode index must be nonnegative (modes m and -m coincide)");
    if (!(c > 0.0)) fail(ErrorCode::InvalidArgument, "disk mode: coupling shift c must be positive");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) fail(ErrorCode::InvalidArgument, "disk mode: z must be finite");
    const cplx w = z - c;
    k_ = sqrt_upper(w);
    if (w.imag() == 0.0 && w.real() >= 0.0) {
        std::ostringstream msg;
        msg << "z = " << z.real() << " lies in [c, inf), the spectrum of A and of the decoupled operators";
        if (w.real() > 0.0 && std::abs(bessel_j(m, k_)) < 1e-10) {
            msg << "; it is a Dirichlet eigenvalue of the interior disk in mode " << m;
        }
        fail(ErrorCode::Precondition, msg.str());
    }
    j1_ = bessel_j(m, k_);
    jp1_ = bessel_j_derivative(m, k_);
    h1_ = hankel1(m, k_);
    hp1_ = hankel1_derivative(m, k_);
    // Zeros of J_m are real, so off [0, inf) J_m(k) only vanishes through underflow.
    if (j1_ == cplx{} || !std::isfinite(std::abs(h1_))) {
        fail(ErrorCode::Range, "disk mode: J_m(k) or H_m(k) out of floating-point range");
    }
    m_plus_ = -k_ * jp1_ / j1_;
    m_minus_ = k_ * hp1_ / h1_;
    if (std::abs(m_plus_ + m_minus_) < 1e-14 * (std::abs(m_plus_) + std::abs(m_minus_))) {
        fail(ErrorCode::Precondition, "disk mode: M+ + M- vanishes, z is an eigenvalue of A");
    }
}

cplx DiskModeModel::j(double r) const { return bessel_j(m_, k_ * r); }
cplx DiskModeModel::h(double r) const { return hankel1(m_, k_ * r); }

cplx DiskModeModel::full_plane(double r, double s) const {
    const double lo = std::min(r, s), hi = std::max(r, s);
    return 0.5 * I * pi * j(lo) * h(hi);
}

cplx DiskModeModel::dirichlet_plus(double r, double s) const {
    if (r >= 1.0 || s >= 1.0) return 0.0;
    const double lo = std::min(r, s), hi = std::max(r, s);
    return 0.5 * I * pi * j(lo) * (h(hi) - h1_ * j(hi) / j1_);
}

cplx DiskModeModel::dirichlet_minus(double r, double s) const {
    if (r <= 1.0 || s <= 1.0) return 0.0;
    const double lo = std::min(r, s), hi = std::max(r, s);
    return 0.5 * I * pi * (j(lo) - j1_ * h(lo) / h1_) * h(hi);
}

cplx DiskModeModel::neumann_minus(double r, double s) const {
    if (r <= 1.0 || s <= 1.0) return 0.0;
    const double lo = std::min(r, s), hi = std::max(r, s);
    return 0.5 * I * pi * (j(lo) - jp1_ * h(lo) / hp1_) * h(hi);
}

cplx DiskModeModel::gamma_plus(double r) const { return r < 1.0 ? j(r) / j1_ : 0.0; }
cplx DiskModeModel::gamma_minus(double r) const { return r > 1.0 ? h(r) / h1_ : 0.0; }

// conj(J_m(k' s)/J_m(k')) with k' = sqrt(conj z - c) = -conj(k) equals
// J_m(k s)/J_m(k); the same reflection holds for H_m, so the adjoint kernels
// at conj z coincide with the gamma kernels at z.
cplx DiskModeModel::gamma_plus_adjoint(double s) const { return gamma_plus(s); }
cplx DiskModeModel::gamma_minus_adjoint(double s) const { return gamma_minus(s); }

cplx DiskModeModel::krein_kernel(double r, double s) const {
    const cplx gr = r < 1.0 ? gamma_plus(r) : gamma_minus(r);
    const cplx gs = s < 1.0 ? gamma_plus_adjoint(s) : gamma_minus_adjoint(s);
    return dirichlet_plus(r, s) + dirichlet_minus(r, s) - gr * gs / (m_plus_ + m_minus_);
}

cplx DiskModeModel::mixed_kernel(double r, double s) const {
    // gamma_hat = diag(gamma_+, gamma_- M_-^{-1}),
    // gamma_hat(conj z)^* = diag(gamma_+^*, M_-^{-1} gamma_-^*),
    // Sigma = -[[M_+, 1], [1, -1/M_-]]^{-1}.
    const cplx a = m_plus_, b = 1.0, cc = 1.0, d = -1.0 / m_minus_;
    const cplx det = a * d - b * cc;
    const cplx sigma[2][2] = {{-d / det, b / det}, {cc / det, -a / det}};
    const int row = r < 1.0 ? 0 : 1;
    const int col = s < 1.0 ? 0 : 1;
    const cplx left = row == 0 ? gamma_plus(r) : gamma_minus(r) / m_minus_;
    const cplx right = col == 0 ? gamma_plus_adjoint(s) : gamma_minus_adjoint(s) / m_minus_;
    return dirichlet_plus(r, s) + neumann_minus(r, s) + left * sigma[row][col] * right;
}

cplx DiskModeModel::res01_difference(double r, double s) const {
    return dirichlet_minus(r, s) - neumann_minus(r, s) - gamma_minus(r) * gamma_minus_adjoint(s) / m_minus_;
}

KreinModeResult disk_mode_residuals(cplx z, int m, double c) {
    const DiskModeModel model(z, m, c);
    double scale = 0.0, dk = 0.0, dm = 0.0, scale_ext = 0.0, d01 = 0.0;
    for (double r : kRadii) {
        for (double s : kRadii) {
            const cplx g = model.full_plane(r, s);
            scale = std::max(scale, std::abs(g));
            dk = std::max(dk, std::abs(g - model.krein_kernel(r, s)));
            dm = std::max(dm, std::abs(g - model.mixed_kernel(r, s)));
            if (r > 1.0 && s > 1.0) {
                scale_ext = std::max(scale_ext, std::abs(model.dirichlet_minus(r, s)));
                d01 = std::max(d01, std::abs(model.res01_difference(r, s)));
            }
        }
    }
    return {dk / scale, dm / scale, d01 / std::max(scale_ext, scale)};
}

double krein_resolvent_disk_mode(cplx z, int m, double c) {
    return disk_mode_residuals(z, m, c).krein;
}

double mixed_resolvent_disk_mode(cplx z, int m, double c) {
    const auto r = disk_mode_residuals(z, m, c);
    return std::max(r.mixed, r.res01);
}

ResidualReport krein_disk_report(const std::vector<cplx>& zs, int max_mode, double c, double tolerance) {
    ResidualReport rep;
    rep.check = "krein";
    double k = 0.0, mx = 0.0, r01 = 0.0;
    Json per = Json::array();
    for (cplx zv : zs) {
        for (int m = 0; m <= max_mode; ++m) {
            const auto r = disk_mode_residuals(zv, m, c);
            k = std::max(k, r.krein);
            mx = std::max(mx, r.mixed);
            r01 = std::max(r01, r.res01);
            per.push_back({{"z", {zv.real(), zv.imag()}}, {"mode", m}, {"krein", r.krein},
                           {"mixed", r.mixed}, {"res01", r.res01}});
        }
    }
    rep.add("krein_formula", k, tolerance);
    rep.add("mixed_formula", mx, tolerance);
    rep.add("res01", r01, tolerance);
    rep.details["modes"] = per;
    rep.finalize();
    return rep;
}

}  // namespace green3
