#pragma once

#include <cstdint>
#include <vector>

#include "gabor/types.hpp"

namespace gabor {

// Binary or soft coefficient mask; M x N real grid with entries in [0, 1].
class TFMask {
  public:
    TFMask(std::size_t channels, std::size_t shifts, std::vector<double> data);

    static TFMask ones(std::size_t channels, std::size_t shifts);
    static TFMask zeros(std::size_t channels, std::size_t shifts);

    std::size_t channels() const { return channels_; }
    std::size_t shifts() const { return shifts_; }
    double at(std::size_t m, std::size_t n) const { return data_[m * shifts_ + n]; }
    const std::vector<double>& data() const { return data_; }

  private:
    std::size_t channels_;
    std::size_t shifts_;
    std::vector<double> data_;
};

// Binary mask keeping the ceil(keep_fraction * M * N) largest-magnitude
// cells of the reference grid. Ties resolve by flat index, so the result
// is deterministic.
TFMask threshold_mask(const TFCoefficients& reference, double keep_fraction = 0.05);

struct FilterReport {
    ComplexSignal filtered;
    std::size_t iterations = 0;
    std::vector<double> residual_history;  // per-iteration relative change
    bool converged = false;                // false when max_iter was hit first
};

// One filtering pass in the coefficient domain:
//
//   T(s) = idgt(mask .* dgt(s, gamma), p)
//
// Requires (p, gamma) to be a dual pair to 1e-8; with an all-ones mask
// the pass is then the identity.
ComplexSignal apply_mask_step(const ComplexSignal& s, const TFMask& mask, const Window& p,
                              const Window& gamma, const Lattice& lat);

// Iterates T to a fixed point. The input is filtered once up front; each
// counted iteration then applies T again and records the relative change
// ||s_{k+1} - s_k|| / max(||s_k||, eps) between consecutive filtered
// iterates, stopping below tol or after max_iter iterations.
FilterReport iterative_tv_filter(const ComplexSignal& s, const TFMask& mask, const Window& p,
                                 const Window& gamma, const Lattice& lat, double tol = 1e-6,
                                 std::size_t max_iter = 100);

// Peak-signal-over-mean-noise power ratio in the coefficient domain:
//
//   max_{m,n} |dgt(clean)|^2 / mean_{m,n} |dgt(noise)|^2
double tf_peak_snr(const ComplexSignal& clean, const ComplexSignal& noise, const Window& gamma,
                   const Lattice& lat);

// Time-domain analogue: max_l |clean[l]|^2 / mean_l |noise[l]|^2.
double time_peak_snr(const ComplexSignal& clean, const ComplexSignal& noise);

// Ratio of the two: how much the transform raises the peak SNR.
double tf_snr_gain(const ComplexSignal& clean, const ComplexSignal& noise, const Window& gamma,
                   const Lattice& lat);

// Unit-amplitude linear chirp whose instantaneous frequency sweeps
// nu_start -> nu_end (cycles per sample) across the block.
ComplexSignal linear_chirp(std::size_t length, double nu_start, double nu_end);

// Gaussian-enveloped linear chirp: envelope exp(-(l-center)^2/(2 env_sigma^2)),
// instantaneous frequency nu_center +- nu_sweep/2 over the central
// +-2 env_sigma of the envelope.
ComplexSignal gaussian_chirplet(std::size_t length, double center, double env_sigma,
                                double nu_center, double nu_sweep);

struct RateGain {
    std::size_t rate = 0;
    double mean_gain = 0.0;
};

// Sampling-rate experiment: a fixed one-unit-long chirp (4 -> 20 cycles
// per unit) is sampled at each rate R (so L = R), unit-variance white
// noise is added, and the coefficient-domain peak-SNR gain over the time
// domain is measured on a dense lattice (a ~ R/32 rounded to a divisor,
// M = L/4) with a Gaussian analysis window of width R/16 samples.
// Returns the per-rate gain averaged over `trials` noise draws; trial t
// of rate index i uses seed + i*trials + t.
std::vector<RateGain> snr_growth_experiment(const std::vector<std::size_t>& rates,
                                            std::size_t trials, std::uint64_t seed);

}  // namespace gabor
