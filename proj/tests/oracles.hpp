#pragma once

// Brute-force reference implementations used only for cross-checking.
// Everything here evaluates the defining sums literally, term by term,
// independent of the folded production paths.

#include <cmath>
#include <complex>
#include <vector>

#include "gabor/random.hpp"
#include "gabor/types.hpp"

namespace oracle {

using gabor::cplx;
using gabor::cvec;

inline cplx unit_phase(double turns) {
    const double angle = 2.0 * M_PI * turns;
    return cplx(std::cos(angle), std::sin(angle));
}

// c[m][n] = sum_l s[l] conj(g[(l - n a) mod L]) e^{-2 pi i m l / M}
inline gabor::TFCoefficients dgt_direct(const gabor::ComplexSignal& s, const gabor::Window& g,
                                        const gabor::Lattice& lat) {
    const std::size_t L = lat.L();
    gabor::TFCoefficients c(lat.M(), lat.N());
    for (std::size_t m = 0; m < lat.M(); ++m) {
        for (std::size_t n = 0; n < lat.N(); ++n) {
            cplx acc(0.0, 0.0);
            for (std::size_t l = 0; l < L; ++l) {
                const std::size_t shifted = (l + L - (n * lat.a()) % L) % L;
                acc += s[l] * std::conj(g[shifted]) *
                       unit_phase(-static_cast<double>((m * l) % lat.M()) /
                                  static_cast<double>(lat.M()));
            }
            c.at(m, n) = acc;
        }
    }
    return c;
}

// s[l] = sum_{m,n} c[m][n] g[(l - n a) mod L] e^{+2 pi i m l / M}
inline gabor::ComplexSignal idgt_direct(const gabor::TFCoefficients& c, const gabor::Window& g,
                                        const gabor::Lattice& lat) {
    const std::size_t L = lat.L();
    cvec out(L, cplx(0.0, 0.0));
    for (std::size_t l = 0; l < L; ++l) {
        cplx acc(0.0, 0.0);
        for (std::size_t m = 0; m < lat.M(); ++m) {
            for (std::size_t n = 0; n < lat.N(); ++n) {
                const std::size_t shifted = (l + L - (n * lat.a()) % L) % L;
                acc += c.at(m, n) * g[shifted] *
                       unit_phase(static_cast<double>((m * l) % lat.M()) /
                                  static_cast<double>(lat.M()));
            }
        }
        out[l] = acc;
    }
    return gabor::ComplexSignal(out);
}

// Plain length-L DFT, no normalization.
inline cvec dft_direct(const cvec& x) {
    const std::size_t L = x.size();
    cvec out(L, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < L; ++k) {
        cplx acc(0.0, 0.0);
        for (std::size_t l = 0; l < L; ++l) {
            acc += x[l] * unit_phase(-static_cast<double>((k * l) % L) / static_cast<double>(L));
        }
        out[k] = acc;
    }
    return out;
}

inline double linf_diff(const cvec& a, const cvec& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

inline double l2(const cvec& a) {
    double acc = 0.0;
    for (const auto& z : a) {
        acc += std::norm(z);
    }
    return std::sqrt(acc);
}

inline cvec random_cvec(std::size_t n, std::uint64_t seed) {
    return gabor::complex_gaussian_vector(n, seed);
}

}  // namespace oracle
