#pragma once

#include "gabor/types.hpp"

namespace gabor {

// Transmit symbols on the lattice grid; same shape as TFCoefficients.
using SymbolGrid = TFCoefficients;

// Parameters of the pulse amplitude * exp(-t^2 / (2*sigma^2)).
struct GaussianParams {
    double amplitude = 1.0;
    double sigma = 1.0;  // width in samples
};

// Periodized sampled Gaussian centered at L/2. Wraps are summed until an
// added copy's peak contribution drops below 1e-17, and the result is
// mirrored so p[L/2 + d] == p[L/2 - d] holds exactly.
Window gaussian_pulse(const Lattice& lat, const GaussianParams& params);

// Rectangular pulse: ones on [0, len), zeros elsewhere. Anchored at 0 so
// critical-lattice blocks line up with plain per-block inverse DFTs.
Window rectangular_pulse(std::size_t length, std::size_t ones);

// Synthesis of the transmit signal: every symbol rides one Gabor atom of
// the pulse p,
//
//   s[l] = sum_{m,n} S[m][n] * p[(l - n*a) mod L] * exp(+2*pi*i*m*l/M)
//
// Requires density <= 1; single-row grids (M = 1) reduce to plain pulse-
// train transmission, the rectangular pulse at critical sampling reduces
// to OFDM without cyclic prefix, and a general pulse gives GFDM.
ComplexSignal modulate(const SymbolGrid& symbols, const Window& p, const Lattice& lat);

// Symbol detection: the transform with the analysis window gamma. When
// s came from modulate(c, p) and (p, gamma) is a dual pair, recovers c
// to rounding.
SymbolGrid demodulate(const ComplexSignal& s, const Window& gamma, const Lattice& lat);

// Max-norm gap between modulate(symbols, rect, lat) at critical sampling
// and the blockwise unnormalized inverse DFT
//
//   block n, offset l': sum_k S[k][n] * exp(+2*pi*i*k*l'/M)
//
// computed independently. Expected 0: the two are the same formula.
double ofdm_equivalence_deviation(const SymbolGrid& symbols, const Lattice& lat);

}  // namespace gabor
