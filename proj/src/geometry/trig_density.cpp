#include "geometry/trig_density.hpp"

#include <cmath>

namespace green3 {

TrigDensity TrigDensity::from_samples(const CVector& samples, double drop_tol) {
    const int n = static_cast<int>(samples.size());
    std::vector<std::pair<int, cplx>> all;
    all.reserve(n);
    double largest = 0.0;
    for (int m = -n / 2; m <= n / 2; ++m) {
        if (n % 2 == 0 && m == -n / 2) continue;
        cplx c{};
        for (int j = 0; j < n; ++j) {
            c += samples[j] * std::polar(1.0, -2.0 * pi * static_cast<double>(m) * j / n);
        }
        c /= static_cast<double>(n);
        all.emplace_back(m, c);
        largest = std::max(largest, std::abs(c));
    }
    TrigDensity out;
    for (auto [m, c] : all) {
        if (largest == 0.0 || std::abs(c) <= drop_tol * largest) continue;
        if (n % 2 == 0 && m == n / 2) {
            // Split the Nyquist coefficient so the interpolant is real for real data.
            out.terms_.emplace_back(-m, 0.5 * c);
            out.terms_.emplace_back(m, 0.5 * c);
        } else {
            out.terms_.emplace_back(m, c);
        }
    }
    return out;
}

TrigDensity TrigDensity::mode(int m, cplx coeff) {
    TrigDensity out;
    out.terms_.emplace_back(m, coeff);
    return out;
}

cplx TrigDensity::operator()(double t) const {
    cplx sum{};
    for (const auto& [m, c] : terms_) sum += c * std::polar(1.0, m * t);
    return sum;
}

CVector TrigDensity::sample(int n) const {
    CVector out(n);
    for (int j = 0; j < n; ++j) out[j] = (*this)(2 * pi * j / n);
    return out;
}

}  // namespace green3
