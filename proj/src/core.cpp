#include "gabor/core.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <string>

namespace gabor {

namespace {

// exp(-2*pi*i*t/M) for t = 0..M-1. Arguments are reduced modulo M before
// lookup, so large m*l products cost no accuracy.
cvec twiddle_table(std::size_t M) {
    cvec table(M);
    for (std::size_t t = 0; t < M; ++t) {
        const double angle = -2.0 * M_PI * static_cast<double>(t) / static_cast<double>(M);
        table[t] = cplx(std::cos(angle), std::sin(angle));
    }
    return table;
}

void check_lengths(std::size_t signal_len, std::size_t window_len, const Lattice& lat) {
    if (signal_len != lat.L()) {
        throw DimensionError("signal length " + std::to_string(signal_len) +
                             " does not match lattice L=" + std::to_string(lat.L()));
    }
    if (window_len != lat.L()) {
        throw DimensionError("window length " + std::to_string(window_len) +
                             " does not match lattice L=" + std::to_string(lat.L()));
    }
}

}  // namespace

ComplexSignal gabor_atom(const Window& w, const Lattice& lat, std::size_t n, std::size_t m) {
    if (w.length() != lat.L()) {
        throw DimensionError("window length " + std::to_string(w.length()) +
                             " does not match lattice L=" + std::to_string(lat.L()));
    }
    if (n >= lat.N()) {
        throw IndexError("time index " + std::to_string(n) + " outside 0.." +
                         std::to_string(lat.N() - 1));
    }
    if (m >= lat.M()) {
        throw IndexError("channel index " + std::to_string(m) + " outside 0.." +
                         std::to_string(lat.M() - 1));
    }
    const std::size_t L = lat.L();
    const std::size_t M = lat.M();
    const std::size_t shift = (n * lat.a()) % L;
    const cvec tw = twiddle_table(M);
    cvec atom(L);
    for (std::size_t l = 0; l < L; ++l) {
        // synthesis kernel exp(+...) = conj of the analysis twiddle
        atom[l] = w.values()[(l + L - shift) % L] * std::conj(tw[(m * l) % M]);
    }
    return ComplexSignal(std::move(atom));
}

TFCoefficients dgt(const ComplexSignal& s, const Window& gamma, const Lattice& lat) {
    check_lengths(s.length(), gamma.length(), lat);
    const std::size_t L = lat.L();
    const std::size_t M = lat.M();
    const std::size_t N = lat.N();
    const std::size_t a = lat.a();
    const cvec tw = twiddle_table(M);

    // Per shift: window the signal, fold onto M residues (the kernel only
    // depends on l mod M), then one length-M DFT. O(N*(L + M^2)) instead
    // of the O(L*M*N) triple sum.
    TFCoefficients c(M, N);
    cvec folded(M);
    for (std::size_t n = 0; n < N; ++n) {
        const std::size_t shift = (n * a) % L;
        std::fill(folded.begin(), folded.end(), cplx(0.0, 0.0));
        for (std::size_t l = 0; l < L; ++l) {
            folded[l % M] += s[l] * std::conj(gamma.values()[(l + L - shift) % L]);
        }
        for (std::size_t m = 0; m < M; ++m) {
            cplx acc(0.0, 0.0);
            for (std::size_t j = 0; j < M; ++j) {
                acc += folded[j] * tw[(m * j) % M];
            }
            c.at(m, n) = acc;
        }
    }
    return c;
}

ComplexSignal idgt(const TFCoefficients& c, const Window& p, const Lattice& lat) {
    if (c.channels() != lat.M() || c.shifts() != lat.N()) {
        throw DimensionError("coefficient grid " + std::to_string(c.channels()) + "x" +
                             std::to_string(c.shifts()) + " does not match lattice " +
                             std::to_string(lat.M()) + "x" + std::to_string(lat.N()));
    }
    if (p.length() != lat.L()) {
        throw DimensionError("window length " + std::to_string(p.length()) +
                             " does not match lattice L=" + std::to_string(lat.L()));
    }
    const std::size_t L = lat.L();
    const std::size_t M = lat.M();
    const std::size_t N = lat.N();
    const std::size_t a = lat.a();
    const cvec tw = twiddle_table(M);

    cvec out(L, cplx(0.0, 0.0));
    cvec modsum(M);
    for (std::size_t n = 0; n < N; ++n) {
        // modsum[j] = sum_m c[m][n] * exp(+2*pi*i*m*j/M), j = l mod M
        for (std::size_t j = 0; j < M; ++j) {
            cplx acc(0.0, 0.0);
            for (std::size_t m = 0; m < M; ++m) {
                acc += c.at(m, n) * std::conj(tw[(m * j) % M]);
            }
            modsum[j] = acc;
        }
        const std::size_t shift = (n * a) % L;
        for (std::size_t l = 0; l < L; ++l) {
            out[l] += p.values()[(l + L - shift) % L] * modsum[l % M];
        }
    }
    return ComplexSignal(std::move(out));
}

double wexler_raz_residual(const Window& p, const Window& gamma, const Lattice& lat) {
    check_lengths(p.length(), gamma.length(), lat);
    if (!lat.reconstructing()) {
        throw UnsupportedLatticeError("lattice density " + std::to_string(lat.density()) +
                                      " > 1 has no dual pairs");
    }
    const std::size_t L = lat.L();
    const std::size_t M = lat.M();
    const std::size_t a = lat.a();
    const double scale = static_cast<double>(M) / static_cast<double>(a);
    const cvec tw = twiddle_table(a);

    double residual = 0.0;
    for (std::size_t q = 0; q < L / M; ++q) {
        const std::size_t shift = (q * M) % L;
        for (std::size_t r = 0; r < a; ++r) {
            cplx acc(0.0, 0.0);
            for (std::size_t l = 0; l < L; ++l) {
                acc += gamma.values()[l] * std::conj(p.values()[(l + L - shift) % L]) *
                       tw[(r * l) % a];
            }
            acc *= scale;
            const cplx target = (q == 0 && r == 0) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
            residual = std::max(residual, std::abs(acc - target));
        }
    }
    return residual;
}

std::size_t analysis_matrix_rank(const Window& w, const Lattice& lat) {
    if (w.length() != lat.L()) {
        throw DimensionError("window length " + std::to_string(w.length()) +
                             " does not match lattice L=" + std::to_string(lat.L()));
    }
    const std::size_t L = lat.L();
    const std::size_t M = lat.M();
    const std::size_t N = lat.N();
    const std::size_t a = lat.a();
    const cvec tw = twiddle_table(M);

    // Row (m*N + n) holds the analysis functional for cell (m, n).
    Eigen::MatrixXcd analysis(M * N, L);
    for (std::size_t m = 0; m < M; ++m) {
        for (std::size_t n = 0; n < N; ++n) {
            const std::size_t shift = (n * a) % L;
            for (std::size_t l = 0; l < L; ++l) {
                analysis(static_cast<Eigen::Index>(m * N + n), static_cast<Eigen::Index>(l)) =
                    std::conj(w.values()[(l + L - shift) % L]) * tw[(m * l) % M];
            }
        }
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(analysis);
    const auto& sigma = svd.singularValues();
    if (sigma.size() == 0 || sigma(0) == 0.0) {
        return 0;
    }
    const double cutoff = 1e-10 * sigma(0) * static_cast<double>(std::max(M * N, L));
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > cutoff) {
            ++rank;
        }
    }
    return rank;
}

double uncertainty_product(const ComplexSignal& s) {
    const std::size_t L = s.length();
    double energy = 0.0;
    for (std::size_t l = 0; l < L; ++l) {
        energy += std::norm(s[l]);
    }
    if (energy == 0.0) {
        throw DegenerateInputError("uncertainty product of the zero signal is undefined");
    }

    double t_mean = 0.0;
    for (std::size_t l = 0; l < L; ++l) {
        t_mean += static_cast<double>(l) * std::norm(s[l]);
    }
    t_mean /= energy;
    double t_var = 0.0;
    for (std::size_t l = 0; l < L; ++l) {
        const double d = static_cast<double>(l) - t_mean;
        t_var += d * d * std::norm(s[l]);
    }
    t_var /= energy;

    // Length-L spectrum by direct DFT; k*l reduced modulo L keeps the
    // twiddle arguments small.
    const cvec tw = twiddle_table(L);
    std::vector<double> spec_power(L);
    double spec_energy = 0.0;
    for (std::size_t k = 0; k < L; ++k) {
        cplx acc(0.0, 0.0);
        for (std::size_t l = 0; l < L; ++l) {
            acc += s[l] * tw[(k * l) % L];
        }
        spec_power[k] = std::norm(acc);
        spec_energy += spec_power[k];
    }

    // Bin k maps to angular frequency 2*pi*k/L folded into (-pi, pi].
    std::vector<double> omega(L);
    for (std::size_t k = 0; k < L; ++k) {
        const double signed_k = (2 * k <= L) ? static_cast<double>(k)
                                             : static_cast<double>(k) - static_cast<double>(L);
        omega[k] = 2.0 * M_PI * signed_k / static_cast<double>(L);
    }
    double w_mean = 0.0;
    for (std::size_t k = 0; k < L; ++k) {
        w_mean += omega[k] * spec_power[k];
    }
    w_mean /= spec_energy;
    double w_var = 0.0;
    for (std::size_t k = 0; k < L; ++k) {
        const double d = omega[k] - w_mean;
        w_var += d * d * spec_power[k];
    }
    w_var /= spec_energy;

    return std::sqrt(t_var) * std::sqrt(w_var);
}

}  // namespace gabor
