#include "gabor/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gabor/core.hpp"

namespace gabor {

Window gaussian_pulse(const Lattice& lat, const GaussianParams& params) {
    if (params.amplitude <= 0.0 || params.sigma <= 0.0) {
        throw ConfigurationError("gaussian pulse needs positive amplitude and sigma");
    }
    const std::size_t L = lat.L();
    const double half = static_cast<double>(L) / 2.0;
    const double denom = 2.0 * params.sigma * params.sigma;

    // f(d) = sum_j exp(-(d + j*L)^2 / (2 sigma^2)), wraps added until a
    // copy's peak contribution drops below 1e-17.
    const auto periodized = [&](double d) {
        double sum = std::exp(-d * d / denom);
        for (int j = 1;; ++j) {
            const double lo = d - static_cast<double>(j) * static_cast<double>(L);
            const double hi = d + static_cast<double>(j) * static_cast<double>(L);
            sum += std::exp(-lo * lo / denom) + std::exp(-hi * hi / denom);
            const double wrap_peak = std::exp(-(static_cast<double>(j) * L - half) *
                                              (static_cast<double>(j) * L - half) / denom);
            if (wrap_peak < 1e-17) {
                break;
            }
        }
        return sum;
    };

    cvec values(L);
    if (L % 2 == 0) {
        // evaluate one half and mirror it, so p[L/2 + d] == p[L/2 - d]
        // holds bit for bit
        const std::size_t center = L / 2;
        std::vector<double> folded(center + 1);
        for (std::size_t d = 0; d <= center; ++d) {
            folded[d] = periodized(static_cast<double>(d));
        }
        for (std::size_t l = 0; l < L; ++l) {
            const std::size_t d = l >= center ? l - center : center - l;
            values[l] = cplx(params.amplitude * folded[d], 0.0);
        }
    } else {
        // odd lengths center between samples; evaluate the sum directly
        for (std::size_t l = 0; l < L; ++l) {
            values[l] = cplx(params.amplitude * periodized(static_cast<double>(l) - half), 0.0);
        }
    }
    return Window(std::move(values));
}

Window rectangular_pulse(std::size_t length, std::size_t ones) {
    if (length == 0 || ones == 0 || ones > length) {
        throw DimensionError("rectangular pulse needs 0 < ones <= length");
    }
    cvec values(length, cplx(0.0, 0.0));
    std::fill(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(ones), cplx(1.0, 0.0));
    return Window(std::move(values));
}

ComplexSignal modulate(const SymbolGrid& symbols, const Window& p, const Lattice& lat) {
    if (lat.density() > 1.0) {
        throw UnsupportedLatticeError("lattice density " + std::to_string(lat.density()) +
                                      " > 1 cannot carry separable symbols");
    }
    return idgt(symbols, p, lat);
}

SymbolGrid demodulate(const ComplexSignal& s, const Window& gamma, const Lattice& lat) {
    return dgt(s, gamma, lat);
}

double ofdm_equivalence_deviation(const SymbolGrid& symbols, const Lattice& lat) {
    if (!lat.critical()) {
        throw ConfigurationError("OFDM reduction requires a critical lattice (M = a)");
    }
    if (symbols.channels() != lat.M() || symbols.shifts() != lat.N()) {
        throw DimensionError("symbol grid " + std::to_string(symbols.channels()) + "x" +
                             std::to_string(symbols.shifts()) + " does not match lattice " +
                             std::to_string(lat.M()) + "x" + std::to_string(lat.N()));
    }
    const std::size_t L = lat.L();
    const std::size_t M = lat.M();
    const Window rect = rectangular_pulse(L, lat.a());
    const ComplexSignal via_atoms = modulate(symbols, rect, lat);

    // Independent route: per-block unnormalized inverse DFT.
    cvec blockwise(L, cplx(0.0, 0.0));
    for (std::size_t n = 0; n < lat.N(); ++n) {
        for (std::size_t offset = 0; offset < M; ++offset) {
            cplx acc(0.0, 0.0);
            for (std::size_t k = 0; k < M; ++k) {
                const double angle = 2.0 * M_PI * static_cast<double>((k * offset) % M) /
                                     static_cast<double>(M);
                acc += symbols.at(k, n) * cplx(std::cos(angle), std::sin(angle));
            }
            blockwise[n * M + offset] = acc;
        }
    }

    double deviation = 0.0;
    for (std::size_t l = 0; l < L; ++l) {
        deviation = std::max(deviation, std::abs(via_atoms[l] - blockwise[l]));
    }
    return deviation;
}

}  // namespace gabor
