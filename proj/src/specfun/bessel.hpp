#pragma once

#include <vector>

#include "common/types.hpp"

namespace green3 {

/// Bessel function J_order(w) of integer order and complex argument.
/// Power series for |w| <= 12, normalized Miller recurrence beyond.
/// Throws Range for |w| >= 700.
cplx bessel_j(int order, cplx w);

/// Hankel function of the first kind H^(1)_order(w) for Im(w) >= 0, w != 0.
cplx hankel1(int order, cplx w);

/// J_0..J_max_order at w.
std::vector<cplx> bessel_j_sequence(int max_order, cplx w);

/// H^(1)_0..H^(1)_max_order at w, by forward recurrence from orders 0 and 1.
std::vector<cplx> hankel1_sequence(int max_order, cplx w);

cplx bessel_j_derivative(int order, cplx w);
cplx hankel1_derivative(int order, cplx w);

/// Orders 0 and 1 of J and H^(1) at a single argument; the hot path of the
/// layer-potential kernels.
struct LowOrderBessel {
    cplx j0, j1, h0, h1;
};
LowOrderBessel low_order_bessel(cplx w);

/// Switch-over radius between power series and large-argument evaluation.
inline constexpr double kSeriesRadius = 12.0;

}  // namespace green3
