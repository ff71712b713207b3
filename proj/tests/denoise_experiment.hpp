#pragma once

// The seeded chirp-denoising experiment shared by the unit tests and the
// acceptance suite: a Gaussian-enveloped linear chirp on the (256, 8, 32)
// lattice, analyzed with the dual of a Gaussian pulse, masked to the top
// 5% coefficient cells of the clean reference, white noise added.

#include <cstdint>

#include "gabor/core.hpp"
#include "gabor/dual.hpp"
#include "gabor/random.hpp"
#include "gabor/tvfilter.hpp"
#include "gabor/waveform.hpp"

namespace denoise {

struct Setup {
    gabor::Lattice lat = gabor::make_lattice(256, 8, 32);
    gabor::Window p;
    gabor::Window gamma;
    gabor::ComplexSignal clean;
    gabor::ComplexSignal noisy;
    gabor::TFMask mask;

    explicit Setup(std::uint64_t seed)
        : p(gabor::gaussian_pulse(lat, {1.0, 6.0})),
          gamma(gabor::most_orthogonal_like_dual(p, lat)),
          clean(gabor::gaussian_chirplet(256, 128.0, 32.0, 6.0 / 32.0, 2.0 / 32.0)),
          noisy(clean),
          mask(gabor::threshold_mask(gabor::dgt(clean, gamma, lat), 0.05)) {
        gabor::cvec samples = clean.samples();
        const gabor::cvec noise = gabor::complex_gaussian_vector(256, seed);
        for (std::size_t l = 0; l < samples.size(); ++l) {
            samples[l] += 0.2 * noise[l];
        }
        noisy = gabor::ComplexSignal(samples);
    }
};

inline double mse(const gabor::ComplexSignal& a, const gabor::ComplexSignal& b) {
    double acc = 0.0;
    for (std::size_t l = 0; l < a.length(); ++l) {
        acc += std::norm(a[l] - b[l]);
    }
    return acc / static_cast<double>(a.length());
}

}  // namespace denoise
