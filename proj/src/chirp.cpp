#include "gabor/chirp.hpp"

#include <cmath>
#include <string>

namespace gabor {

namespace {

// exp(-2*pi*i*t/N) for t = 0..N-1; quadratic phases are reduced mod N
// before lookup.
cvec twiddle_table(std::size_t n) {
    cvec table(n);
    for (std::size_t t = 0; t < n; ++t) {
        const double angle = -2.0 * M_PI * static_cast<double>(t) / static_cast<double>(n);
        table[t] = cplx(std::cos(angle), std::sin(angle));
    }
    return table;
}

}  // namespace

DCFTGrid::DCFTGrid(std::size_t n) : n_(n), data_(n * n, cplx(0.0, 0.0)) {
    if (n == 0) {
        throw DimensionError("transform grid dimension must be positive");
    }
}

ComplexSignal make_chirp(std::size_t n, const ChirpParams& params) {
    if (n == 0) {
        throw DimensionError("chirp length must be positive");
    }
    const cvec tw = twiddle_table(n);
    cvec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t phase = (params.l0 % n * (i * i % n) + params.k0 % n * i) % n;
        out[i] = params.amplitude * std::conj(tw[phase]);
    }
    return ComplexSignal(std::move(out));
}

DCFTGrid dcft(const ComplexSignal& s) {
    const std::size_t n = s.length();
    const cvec tw = twiddle_table(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    DCFTGrid grid(n);
    cvec rate_modulated(n);
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t i = 0; i < n; ++i) {
            rate_modulated[i] = s[i] * tw[(l * (i * i % n)) % n];
        }
        for (std::size_t k = 0; k < n; ++k) {
            cplx acc(0.0, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                acc += rate_modulated[i] * tw[(k * i) % n];
            }
            grid.at(k, l) = scale * acc;
        }
    }
    return grid;
}

ChirpParams estimate_chirp_params(const ComplexSignal& s) {
    double energy = 0.0;
    for (std::size_t i = 0; i < s.length(); ++i) {
        energy += std::norm(s[i]);
    }
    if (energy == 0.0) {
        throw DegenerateInputError("cannot estimate chirp parameters of the zero signal");
    }
    const DCFTGrid grid = dcft(s);
    const std::size_t n = grid.n();
    ChirpParams best;
    double best_mag = -1.0;
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t k = 0; k < n; ++k) {
            const double mag = std::abs(grid.at(k, l));
            if (mag > best_mag) {
                best_mag = mag;
                best.k0 = k;
                best.l0 = l;
            }
        }
    }
    best.amplitude = grid.at(best.k0, best.l0) / std::sqrt(static_cast<double>(n));
    return best;
}

}  // namespace gabor
