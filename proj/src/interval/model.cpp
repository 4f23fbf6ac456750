#include "interval/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "common/error.hpp"
#include "specfun/spectral_point.hpp"

namespace green3 {

cplx sin_over(cplx k, double x) {
    const cplx kx = k * x;
    if (std::abs(kx) < 1e-4) {
        const cplx q = kx * kx;
        return x * (1.0 - q / 6.0 * (1.0 - q / 20.0 * (1.0 - q / 42.0)));
    }
    return std::sin(kx) / k;
}

IntervalTripleModel::IntervalTripleModel(double c_plus, double c_minus) : c_plus_(c_plus), c_minus_(c_minus) {
    if (!(c_plus >= 0.0) || !(c_minus >= 0.0) || !std::isfinite(c_plus) || !std::isfinite(c_minus)) {
        fail(ErrorCode::InvalidArgument, "interval model: potentials c+ and c- must be finite and >= 0");
    }
}

cplx IntervalTripleModel::k(Side side, cplx z) const { return sqrt_upper(z - c(side)); }

double IntervalTripleModel::dirichlet_pole_distance(Side side, cplx z) const {
    return std::abs(sin_over(k(side, z), 1.0));
}

double IntervalTripleModel::neumann_pole_distance(cplx z) const { return std::abs(std::cos(k(Side::Minus, z))); }

cplx IntervalTripleModel::scalar_weyl(Side side, cplx z) const {
    const cplx kk = k(side, z);
    const cplx s = sin_over(kk, 1.0);
    if (std::abs(s) < 1e-13 * std::max(1.0, std::abs(std::cos(kk)))) {
        std::ostringstream msg;
        msg << "scalar_weyl: z = " << z << " is a Dirichlet eigenvalue of the "
            << to_string(side) << " interval, m has a pole";
        fail(ErrorCode::Singularity, msg.str());
    }
    return -std::cos(kk) / s;
}

cplx IntervalTripleModel::gamma(Side side, cplx z, double x) const {
    const cplx kk = k(side, z);
    if (side == Side::Plus) return x <= 1.0 ? sin_over(kk, x) / sin_over(kk, 1.0) : 0.0;
    return x >= 1.0 ? sin_over(kk, 2.0 - x) / sin_over(kk, 1.0) : 0.0;
}

cplx IntervalTripleModel::dirichlet_kernel(Side side, cplx z, double x, double y) const {
    const double lo = std::min(x, y), hi = std::max(x, y);
    const cplx kk = k(side, z);
    if (side == Side::Plus) {
        if (hi > 1.0) return 0.0;
        return sin_over(kk, lo) * sin_over(kk, 1.0 - hi) / sin_over(kk, 1.0);
    }
    if (lo < 1.0) return 0.0;
    return sin_over(kk, lo - 1.0) * sin_over(kk, 2.0 - hi) / sin_over(kk, 1.0);
}

cplx IntervalTripleModel::neumann_minus_kernel(cplx z, double x, double y) const {
    const double lo = std::min(x, y), hi = std::max(x, y);
    if (lo < 1.0) return 0.0;
    const cplx kk = k(Side::Minus, z);
    return std::cos(kk * (lo - 1.0)) * sin_over(kk, 2.0 - hi) / std::cos(kk);
}

namespace {

// Solutions of the coupled equation vanishing at x = 0 (left) and at x = 2
// (right), continued C^1 across x = 1.
struct CoupledBasis {
    cplx kp, km;
    cplx left(double x) const {
        if (x <= 1.0) return sin_over(kp, x);
        return sin_over(kp, 1.0) * std::cos(km * (x - 1.0)) + std::cos(kp) * sin_over(km, x - 1.0);
    }
    cplx right(double x) const {
        if (x >= 1.0) return sin_over(km, 2.0 - x);
        return sin_over(km, 1.0) * std::cos(kp * (1.0 - x)) + std::cos(km) * sin_over(kp, 1.0 - x);
    }
    // -W = -(left right' - left' right), evaluated at x = 1.
    cplx minus_wronskian() const { return sin_over(kp, 1.0) * std::cos(km) + std::cos(kp) * sin_over(km, 1.0); }
};

}  // namespace

cplx IntervalTripleModel::coupled_kernel(cplx z, double x, double y) const {
    const CoupledBasis b{k(Side::Plus, z), k(Side::Minus, z)};
    const double lo = std::min(x, y), hi = std::max(x, y);
    return b.left(lo) * b.right(hi) / b.minus_wronskian();
}

cplx IntervalTripleModel::coupled_kernel_dy_at_interface(cplx z, double x) const {
    const CoupledBasis b{k(Side::Plus, z), k(Side::Minus, z)};
    // left'(1) = cos k+, right'(1) = -cos k-.
    if (x < 1.0) return b.left(x) * (-std::cos(b.km)) / b.minus_wronskian();
    return std::cos(b.kp) * b.right(x) / b.minus_wronskian();
}

std::vector<double> IntervalTripleModel::decoupled_spectrum(double limit) const {
    std::vector<double> out;
    for (double c0 : {c_plus_, c_minus_}) {
        for (int n = 1;; ++n) {
            const double v = n * n * pi * pi + c0;
            if (v >= limit) break;
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> IntervalTripleModel::coupled_eigenvalues(int count) const {
    if (count < 0) fail(ErrorCode::InvalidArgument, "coupled_eigenvalues: count must be >= 0");
    // m+ + m- increases between poles, from -inf just right of a pole to +inf
    // just left of the next one, so every gap holds exactly one root.
    auto f = [&](double l) {
        const cplx v = -std::cos(k(Side::Plus, l)) / sin_over(k(Side::Plus, l), 1.0) -
                       std::cos(k(Side::Minus, l)) / sin_over(k(Side::Minus, l), 1.0);
        return v.real();
    };
    // Each gap below the (count + 1)-th pole of one side holds a root, so
    // count + 1 poles per side are enough.
    std::vector<double> poles;
    for (int n = 1; n <= count + 1; ++n) {
        poles.push_back(n * n * pi * pi + c_plus_);
        poles.push_back(n * n * pi * pi + c_minus_);
    }
    std::sort(poles.begin(), poles.end());
    poles.erase(std::unique(poles.begin(), poles.end(),
                            [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, a); }),
                poles.end());

    std::vector<double> roots;
    double lo = std::min(c_plus_, c_minus_);
    for (double pole : poles) {
        if (static_cast<int>(roots.size()) == count) break;
        const double delta = 1e-9 * std::max(1.0, pole);
        double a = roots.empty() && lo < poles.front() ? lo : lo + delta;
        double b = pole - delta;
        lo = pole;
        if (!(a < b)) continue;
        double fa = f(a), fb = f(b);
        if (fa > 0.0 && fb > 0.0) continue;  // no sign change: the gap below the first pole can be empty
        if (!(fa <= 0.0 && fb >= 0.0)) {
            std::ostringstream msg;
            msg << "coupled_eigenvalues: bracketing failed on [" << a << ", " << b << "]";
            fail(ErrorCode::Evaluation, msg.str());
        }
        for (int it = 0; it < 200 && b - a > 4e-16 * b; ++it) {
            const double mid = 0.5 * (a + b);
            (f(mid) < 0.0 ? a : b) = mid;
        }
        roots.push_back(0.5 * (a + b));
    }
    return roots;
}

}  // namespace green3
