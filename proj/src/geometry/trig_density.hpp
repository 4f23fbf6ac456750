#pragma once

#include <utility>
#include <vector>

#include "common/types.hpp"

namespace green3 {

/// Sparse trigonometric polynomial phi(t) = sum_m c_m exp(i m t); the
/// continuous extension of a density given by node samples.
class TrigDensity {
public:
    TrigDensity() = default;

    /// Interpolant of equispaced samples phi(2 pi j / N). Coefficients below
    /// drop_tol times the largest one are discarded.
    static TrigDensity from_samples(const CVector& samples, double drop_tol = 1e-14);
    static TrigDensity mode(int m, cplx coeff = 1.0);

    cplx operator()(double t) const;
    /// Samples at t_j = 2 pi j / n.
    CVector sample(int n) const;

    const std::vector<std::pair<int, cplx>>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

private:
    std::vector<std::pair<int, cplx>> terms_;
};

}  // namespace green3
