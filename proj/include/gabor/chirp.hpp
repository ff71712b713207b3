#pragma once

#include "gabor/types.hpp"

namespace gabor {

// Frequency and rate indices of a modular linear chirp, both taken
// modulo the signal length.
struct ChirpParams {
    std::size_t k0 = 0;      // frequency index
    std::size_t l0 = 0;      // chirp-rate index
    cplx amplitude = cplx(1.0, 0.0);
};

// N x N transform grid indexed (k, l) = (frequency, chirp rate).
class DCFTGrid {
  public:
    explicit DCFTGrid(std::size_t n);

    std::size_t n() const { return n_; }
    cplx& at(std::size_t k, std::size_t l) { return data_[k * n_ + l]; }
    const cplx& at(std::size_t k, std::size_t l) const { return data_[k * n_ + l]; }
    const cvec& data() const { return data_; }

  private:
    std::size_t n_;
    cvec data_;
};

// s[n] = amplitude * exp(+2*pi*i*(l0*n^2 + k0*n)/N)
ComplexSignal make_chirp(std::size_t n, const ChirpParams& params);

// Chirp-Fourier transform, matching frequency and linear chirp rate:
//
//   X[k][l] = (1/sqrt(N)) * sum_n s[n] * exp(-2*pi*i*(l*n^2 + k*n)/N)
//
// Row l = 0 is the unitary DFT. For prime N and a unit chirp (k0, l0):
// |X[k0][l0]| = sqrt(N), the rest of row l0 vanishes, and every
// mismatched-rate magnitude is exactly 1 (Gauss sums); composite lengths
// lose this flat sidelobe behavior.
DCFTGrid dcft(const ComplexSignal& s);

// Largest-magnitude cell of the transform grid; ties resolve to the
// smallest rate index, then the smallest frequency index. The amplitude
// estimate is X[k][l]/sqrt(N).
ChirpParams estimate_chirp_params(const ComplexSignal& s);

}  // namespace gabor
