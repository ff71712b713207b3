#include "gabor/types.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace gabor {

namespace detail {

void require_finite(const cvec& values, const char* what) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag())) {
            throw NonFiniteError(std::string(what) + " contains a non-finite value at position " +
                                 std::to_string(i));
        }
    }
}

}  // namespace detail

ComplexSignal::ComplexSignal(cvec samples) : samples_(std::move(samples)) {
    if (samples_.empty()) {
        throw DimensionError("signal must contain at least one sample");
    }
    detail::require_finite(samples_, "signal");
}

Lattice::Lattice(std::size_t L, std::size_t a, std::size_t M) : L_(L), a_(a), M_(M) {
    if (L == 0 || a == 0 || M == 0) {
        throw DimensionError("lattice parameters must be positive");
    }
    if (L % a != 0) {
        throw DivisibilityError("time step a=" + std::to_string(a) + " does not divide L=" +
                                std::to_string(L));
    }
    if (L % M != 0) {
        throw DivisibilityError("channel count M=" + std::to_string(M) + " does not divide L=" +
                                std::to_string(L));
    }
}

Lattice make_lattice(std::size_t L, std::size_t a, std::size_t M) { return Lattice(L, a, M); }

Window::Window(cvec values, WindowRole role) : values_(std::move(values)), role_(role) {
    if (values_.empty()) {
        throw DimensionError("window must contain at least one sample");
    }
    detail::require_finite(values_, "window");
}

TFCoefficients::TFCoefficients(std::size_t channels, std::size_t shifts)
    : channels_(channels), shifts_(shifts), data_(channels * shifts, cplx(0.0, 0.0)) {
    if (channels == 0 || shifts == 0) {
        throw DimensionError("coefficient grid dimensions must be positive");
    }
}

TFCoefficients::TFCoefficients(std::size_t channels, std::size_t shifts, cvec data)
    : channels_(channels), shifts_(shifts), data_(std::move(data)) {
    if (channels == 0 || shifts == 0) {
        throw DimensionError("coefficient grid dimensions must be positive");
    }
    if (data_.size() != channels * shifts) {
        throw DimensionError("coefficient grid data size " + std::to_string(data_.size()) +
                             " does not match " + std::to_string(channels) + "x" +
                             std::to_string(shifts));
    }
    detail::require_finite(data_, "coefficient grid");
}

}  // namespace gabor
