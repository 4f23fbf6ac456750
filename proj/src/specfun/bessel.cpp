#include "specfun/bessel.hpp"

#include <cmath>
#include <sstream>

#include "common/error.hpp"

namespace green3 {

namespace {

constexpr double kEuler = 0.577215664901532860606512090082402;
constexpr double kOverflowRadius = 700.0;
constexpr double kSeriesEps = 1e-17;

void check_argument(cplx w, const char* who) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        fail(ErrorCode::InvalidArgument, std::string(who) + ": non-finite argument");
    }
    if (std::abs(w) >= kOverflowRadius) {
        std::ostringstream msg;
        msg << who << ": |w| = " << std::abs(w) << " exceeds the overflow guard " << kOverflowRadius;
        fail(ErrorCode::Range, msg.str());
    }
}

void check_hankel_argument(cplx w) {
    check_argument(w, "hankel1");
    if (w == cplx{}) fail(ErrorCode::Singularity, "hankel1: logarithmic/power singularity at w = 0");
    if (w.imag() < 0.0) fail(ErrorCode::InvalidArgument, "hankel1: requires Im(w) >= 0");
}

// Power series of J_order; accurate for |w| <= kSeriesRadius.
cplx j_series(int order, cplx w) {
    const cplx half = 0.5 * w;
    cplx term{1.0, 0.0};
    for (int i = 1; i <= order; ++i) term *= half / static_cast<double>(i);
    const cplx q = -half * half;
    cplx sum = term;
    for (int k = 1; k < 300; ++k) {
        term *= q / static_cast<double>(k * (k + order));
        sum += term;
        if (std::abs(term) <= kSeriesEps * std::abs(sum)) break;
        if (sum == cplx{}) break;
    }
    return sum;
}

// J_0..J_max by Miller's backward recurrence normalized with the
// Jacobi-Anger sum exp(-+ i w) = J_0 + 2 sum (-+i)^n J_n; the sign is chosen
// so the normalization target is the dominant exponential.
std::vector<cplx> j_miller(int max_order, cplx w) {
    const double scale_ref = std::max(static_cast<double>(max_order), std::abs(w));
    int start = static_cast<int>(scale_ref + 30.0 + std::sqrt(40.0 * scale_ref));
    start += start % 2;
    const bool upper = w.imag() >= 0.0;
    const cplx unit = upper ? cplx{0.0, -1.0} : cplx{0.0, 1.0};

    std::vector<cplx> values(max_order + 1);
    cplx next{0.0, 0.0};
    cplx current{1e-30, 0.0};
    cplx sum{0.0, 0.0};
    // phase = unit^n, tracked incrementally from n = start downwards.
    cplx phase = std::pow(unit, start);
    const cplx unit_inv = 1.0 / unit;
    for (int n = start; n >= 1; --n) {
        if (n <= max_order) values[n] = current;
        sum += 2.0 * phase * current;
        const cplx prev = (2.0 * n / w) * current - next;
        next = current;
        current = prev;
        phase *= unit_inv;
        if (std::abs(current) > 1e200) {
            constexpr double shrink = 1e-200;
            current *= shrink;
            next *= shrink;
            sum *= shrink;
            for (int k = std::max(n, 1); k <= max_order; ++k) values[k] *= shrink;
        }
    }
    values[0] = current;
    sum += current;
    const cplx target = upper ? std::exp(-I * w) : std::exp(I * w);
    const cplx factor = target / sum;
    for (auto& v : values) v *= factor;
    return values;
}

// Modified Bessel K_0, K_1 at x (Re x >= 0, |x| >= 2) by Steed's continued
// fraction CF2 (Temme's normalization).
void k01_continued_fraction(cplx x, cplx& k0, cplx& k1) {
    const cplx xi = 1.0 / x;
    cplx b = 2.0 * (1.0 + x);
    cplx d = 1.0 / b;
    cplx h = d;
    cplx delh = d;
    cplx q1{0.0, 0.0};
    cplx q2{1.0, 0.0};
    const double a1 = 0.25;
    cplx q{a1, 0.0};
    cplx c{a1, 0.0};
    double a = -a1;
    cplx s = 1.0 + q * delh;
    int i = 1;
    for (; i < 100000; ++i) {
        a -= 2.0 * i;
        c = -a * c / (i + 1.0);
        const cplx qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const cplx dels = q * delh;
        s += dels;
        if (std::abs(dels) < 1e-17 * std::abs(s)) break;
    }
    if (i >= 100000) fail(ErrorCode::Evaluation, "hankel1: continued fraction failed to converge");
    h = a1 * h;
    k0 = std::sqrt(pi / (2.0 * x)) * std::exp(-x) / s;
    k1 = k0 * (x + 0.5 - h) * xi;
}

bool use_series_for_hankel(cplx w) {
    // Inside the series disk the J + iY combination cancels like exp(2 Im w);
    // beyond Im w = 2 the continued fraction is used instead.
    return std::abs(w) <= kSeriesRadius && w.imag() < 2.0;
}

// Orders 0 and 1 of J and H^(1) by series (J, Y) for small |w|.
LowOrderBessel low_order_series(cplx w) {
    const cplx half = 0.5 * w;
    const cplx q = -half * half;
    const cplx log_term = std::log(half) + kEuler;

    cplx t0{1.0, 0.0};     // J_0 series term
    cplx t1 = half;        // J_1 series term
    cplx j0 = t0;
    cplx j1 = t1;
    cplx y0_sum{0.0, 0.0};  // sum_{k>=1} H_k t0_k
    cplx y1_sum = t1;       // sum_{k>=0} (H_k + H_{k+1}) t1_k, k = 0 term is t1
    double harmonic = 0.0;  // H_k
    for (int k = 1; k < 300; ++k) {
        t0 *= q / static_cast<double>(k * k);
        t1 *= q / static_cast<double>(k * (k + 1));
        harmonic += 1.0 / k;
        const double h_next = harmonic + 1.0 / (k + 1);
        j0 += t0;
        j1 += t1;
        y0_sum += harmonic * t0;
        y1_sum += (harmonic + h_next) * t1;
        const double mag = std::abs(t0) + std::abs(t1);
        if (mag * (harmonic + h_next + 1.0) <= kSeriesEps * (std::abs(j0) + std::abs(j1))) break;
    }
    const cplx y0 = (2.0 / pi) * (log_term * j0 - y0_sum);
    const cplx y1 = -2.0 / (pi * w) + (2.0 / pi) * log_term * j1 - y1_sum / pi;
    return {j0, j1, j0 + I * y0, j1 + I * y1};
}

void hankel01(cplx w, cplx& h0, cplx& h1) {
    if (use_series_for_hankel(w)) {
        const auto v = low_order_series(w);
        h0 = v.h0;
        h1 = v.h1;
        return;
    }
    cplx k0, k1;
    k01_continued_fraction(-I * w, k0, k1);
    // H^(1)_nu(w) = 2 / (pi i^(nu+1)) K_nu(-i w)
    h0 = (2.0 / (pi * I)) * k0;
    h1 = -(2.0 / pi) * k1;
}

}  // namespace

std::vector<cplx> bessel_j_sequence(int max_order, cplx w) {
    if (max_order < 0) fail(ErrorCode::InvalidArgument, "bessel_j: order must be nonnegative");
    check_argument(w, "bessel_j");
    if (std::abs(w) <= kSeriesRadius) {
        std::vector<cplx> values(max_order + 1);
        for (int m = 0; m <= max_order; ++m) values[m] = j_series(m, w);
        return values;
    }
    return j_miller(max_order, w);
}

cplx bessel_j(int order, cplx w) {
    if (order < 0) fail(ErrorCode::InvalidArgument, "bessel_j: order must be nonnegative");
    check_argument(w, "bessel_j");
    if (std::abs(w) <= kSeriesRadius) return j_series(order, w);
    return j_miller(order, w)[order];
}

std::vector<cplx> hankel1_sequence(int max_order, cplx w) {
    if (max_order < 0) fail(ErrorCode::InvalidArgument, "hankel1: order must be nonnegative");
    check_hankel_argument(w);
    std::vector<cplx> values(std::max(max_order, 1) + 1);
    hankel01(w, values[0], values[1]);
    for (int m = 1; m < max_order; ++m) {
        values[m + 1] = (2.0 * m / w) * values[m] - values[m - 1];
    }
    values.resize(max_order + 1);
    return values;
}

cplx hankel1(int order, cplx w) { return hankel1_sequence(order, w)[order]; }

cplx bessel_j_derivative(int order, cplx w) {
    if (order == 0) return -bessel_j(1, w);
    const auto j = bessel_j_sequence(order, w);
    if (w == cplx{}) return order == 1 ? cplx{0.5, 0.0} : cplx{};
    return j[order - 1] - (static_cast<double>(order) / w) * j[order];
}

cplx hankel1_derivative(int order, cplx w) {
    const auto h = hankel1_sequence(std::max(order, 1), w);
    if (order == 0) return -h[1];
    return h[order - 1] - (static_cast<double>(order) / w) * h[order];
}

LowOrderBessel low_order_bessel(cplx w) {
    check_hankel_argument(w);
    if (use_series_for_hankel(w)) return low_order_series(w);
    LowOrderBessel out{};
    hankel01(w, out.h0, out.h1);
    if (std::abs(w) <= kSeriesRadius) {
        out.j0 = j_series(0, w);
        out.j1 = j_series(1, w);
    } else {
        const auto j = j_miller(1, w);
        out.j0 = j[0];
        out.j1 = j[1];
    }
    return out;
}

}  // namespace green3
