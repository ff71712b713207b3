#pragma once

#include "gabor/types.hpp"

namespace gabor {

// Time-shifted, frequency-modulated copy of the prototype w:
//
//   atom[l] = w[(l - n*a) mod L] * exp(+2*pi*i*m*l/M)
//
// the elementary tile placed at lattice position (n, m). Shifts are
// circular.
ComplexSignal gabor_atom(const Window& w, const Lattice& lat, std::size_t n, std::size_t m);

// Forward transform: inner products of s with the analysis atoms of gamma,
//
//   c[m][n] = sum_l s[l] * conj(gamma[(l - n*a) mod L]) * exp(-2*pi*i*m*l/M)
//
// The short-time Fourier transform is the dense special case a = 1, M = L.
TFCoefficients dgt(const ComplexSignal& s, const Window& gamma, const Lattice& lat);

// Expansion: superposition of synthesis atoms of p weighted by c,
//
//   s[l] = sum_{m,n} c[m][n] * p[(l - n*a) mod L] * exp(+2*pi*i*m*l/M)
//
// Adjoint of dgt taken with the same window.
ComplexSignal idgt(const TFCoefficients& c, const Window& p, const Lattice& lat);

// Biorthogonality check on the adjoint lattice (time steps M, frequency
// steps L/a). Evaluates
//
//   (M/a) * sum_l gamma[l] * conj(p[(l - q*M) mod L]) * exp(-2*pi*i*r*l/a)
//
// for q = 0..L/M-1, r = 0..a-1 and returns the largest absolute deviation
// from delta(q)delta(r). Zero (to rounding) exactly when (p, gamma) is a
// synthesis/analysis dual pair, i.e. idgt of dgt is the identity.
// Requires a reconstructing lattice (a <= M).
double wexler_raz_residual(const Window& p, const Window& gamma, const Lattice& lat);

// Numerical rank of the (M*N) x L analysis map s -> dgt(s, w, lat),
// from singular values with threshold 1e-10 * sigma_max * max(M*N, L).
// Rank L certifies the atom family spans, so a dual window exists.
std::size_t analysis_matrix_rank(const Window& w, const Lattice& lat);

// Time-bandwidth product dt * dw: dt is the RMS time width about the
// energy centroid (sample units), dw the RMS angular-frequency width of
// the length-L spectrum with frequencies mapped to (-pi, pi]. With this
// convention the continuum lower bound is 1/2, attained by a well-
// sampled, well-contained Gaussian. Moments are plain (non-circular)
// sums on the given grid, so a discrete impulse legitimately scores
// below 1/2.
double uncertainty_product(const ComplexSignal& s);

}  // namespace gabor
