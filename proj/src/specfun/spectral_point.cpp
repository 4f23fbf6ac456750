#include "specfun/spectral_point.hpp"

#include <cmath>
#include <sstream>

#include "common/error.hpp"

namespace green3 {

cplx sqrt_upper(cplx w) {
    // Normalize -0.0 so std::sqrt lands on the upper half plane for w < 0.
    cplx root = std::sqrt(cplx{w.real(), w.imag() == 0.0 ? 0.0 : w.imag()});
    if (root.imag() < 0.0) root = -root;
    return root;
}

SpectralPoint::SpectralPoint(cplx z) : z_(z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        fail(ErrorCode::InvalidArgument, "spectral point must be finite");
    }
    if (z.imag() == 0.0 && z.real() > 0.0) {
        std::ostringstream msg;
        msg << "spectral point z = " << z.real()
            << " lies on the cut [0, inf); perturb it off the real axis";
        fail(ErrorCode::InvalidArgument, msg.str());
    }
    sqrt_z_ = sqrt_upper(z);
}

}  // namespace green3
