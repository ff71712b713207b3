#include "gabor/tvfilter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "gabor/core.hpp"
#include "gabor/random.hpp"
#include "gabor/waveform.hpp"

namespace gabor {

namespace {

constexpr double kPairTolerance = 1e-8;
constexpr double kNormFloor = 1e-300;

double l2_norm(const cvec& v) {
    double acc = 0.0;
    for (const auto& z : v) {
        acc += std::norm(z);
    }
    return std::sqrt(acc);
}

void check_mask_dims(const TFMask& mask, const Lattice& lat) {
    if (mask.channels() != lat.M() || mask.shifts() != lat.N()) {
        throw DimensionError("mask " + std::to_string(mask.channels()) + "x" +
                             std::to_string(mask.shifts()) + " does not match lattice " +
                             std::to_string(lat.M()) + "x" + std::to_string(lat.N()));
    }
}

void check_dual_pair(const Window& p, const Window& gamma, const Lattice& lat) {
    const double residual = wexler_raz_residual(p, gamma, lat);
    if (!(residual < kPairTolerance)) {
        throw InvalidPairError("windows are not a dual pair: biorthogonality residual " +
                               std::to_string(residual));
    }
}

// One pass without revalidating the pair.
ComplexSignal mask_step(const ComplexSignal& s, const TFMask& mask, const Window& p,
                        const Window& gamma, const Lattice& lat) {
    TFCoefficients c = dgt(s, gamma, lat);
    for (std::size_t m = 0; m < c.channels(); ++m) {
        for (std::size_t n = 0; n < c.shifts(); ++n) {
            c.at(m, n) *= mask.at(m, n);
        }
    }
    return idgt(c, p, lat);
}

}  // namespace

TFMask::TFMask(std::size_t channels, std::size_t shifts, std::vector<double> data)
    : channels_(channels), shifts_(shifts), data_(std::move(data)) {
    if (channels == 0 || shifts == 0) {
        throw DimensionError("mask dimensions must be positive");
    }
    if (data_.size() != channels * shifts) {
        throw DimensionError("mask data size " + std::to_string(data_.size()) +
                             " does not match " + std::to_string(channels) + "x" +
                             std::to_string(shifts));
    }
    for (double v : data_) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw ConfigurationError("mask entries must lie in [0, 1]");
        }
    }
}

TFMask TFMask::ones(std::size_t channels, std::size_t shifts) {
    return TFMask(channels, shifts, std::vector<double>(channels * shifts, 1.0));
}

TFMask TFMask::zeros(std::size_t channels, std::size_t shifts) {
    return TFMask(channels, shifts, std::vector<double>(channels * shifts, 0.0));
}

TFMask threshold_mask(const TFCoefficients& reference, double keep_fraction) {
    if (!(keep_fraction > 0.0 && keep_fraction <= 1.0)) {
        throw ConfigurationError("keep fraction must lie in (0, 1]");
    }
    const std::size_t cells = reference.size();
    const std::size_t keep = std::min(
        cells, static_cast<std::size_t>(std::ceil(keep_fraction * static_cast<double>(cells))));
    std::vector<std::size_t> order(cells);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
        return std::abs(reference.data()[lhs]) > std::abs(reference.data()[rhs]);
    });
    std::vector<double> data(cells, 0.0);
    for (std::size_t i = 0; i < keep; ++i) {
        data[order[i]] = 1.0;
    }
    return TFMask(reference.channels(), reference.shifts(), std::move(data));
}

ComplexSignal apply_mask_step(const ComplexSignal& s, const TFMask& mask, const Window& p,
                              const Window& gamma, const Lattice& lat) {
    check_mask_dims(mask, lat);
    check_dual_pair(p, gamma, lat);
    return mask_step(s, mask, p, gamma, lat);
}

FilterReport iterative_tv_filter(const ComplexSignal& s, const TFMask& mask, const Window& p,
                                 const Window& gamma, const Lattice& lat, double tol,
                                 std::size_t max_iter) {
    if (!(tol > 0.0)) {
        throw ConfigurationError("tolerance must be positive");
    }
    if (max_iter == 0) {
        throw ConfigurationError("max_iter must be positive");
    }
    check_mask_dims(mask, lat);
    check_dual_pair(p, gamma, lat);

    // The input is filtered once up front; each counted iteration then
    // measures the relative change between consecutive filtered iterates.
    ComplexSignal current = mask_step(s, mask, p, gamma, lat);
    FilterReport report{current, 0, {}, false};
    for (std::size_t k = 0; k < max_iter; ++k) {
        ComplexSignal next = mask_step(current, mask, p, gamma, lat);
        cvec diff(next.samples());
        for (std::size_t l = 0; l < diff.size(); ++l) {
            diff[l] -= current[l];
        }
        const double rel = l2_norm(diff) / std::max(l2_norm(current.samples()), kNormFloor);
        report.residual_history.push_back(rel);
        current = std::move(next);
        if (rel < tol) {
            report.converged = true;
            break;
        }
    }
    report.iterations = report.residual_history.size();
    report.filtered = std::move(current);
    return report;
}

double tf_peak_snr(const ComplexSignal& clean, const ComplexSignal& noise, const Window& gamma,
                   const Lattice& lat) {
    const TFCoefficients cn = dgt(noise, gamma, lat);
    double noise_mean = 0.0;
    for (const auto& z : cn.data()) {
        noise_mean += std::norm(z);
    }
    if (noise_mean == 0.0) {
        throw DegenerateInputError("noise signal is identically zero");
    }
    noise_mean /= static_cast<double>(cn.size());

    const TFCoefficients cs = dgt(clean, gamma, lat);
    double peak = 0.0;
    for (const auto& z : cs.data()) {
        peak = std::max(peak, std::norm(z));
    }
    return peak / noise_mean;
}

double time_peak_snr(const ComplexSignal& clean, const ComplexSignal& noise) {
    double noise_mean = 0.0;
    for (std::size_t l = 0; l < noise.length(); ++l) {
        noise_mean += std::norm(noise[l]);
    }
    if (noise_mean == 0.0) {
        throw DegenerateInputError("noise signal is identically zero");
    }
    noise_mean /= static_cast<double>(noise.length());
    double peak = 0.0;
    for (std::size_t l = 0; l < clean.length(); ++l) {
        peak = std::max(peak, std::norm(clean[l]));
    }
    return peak / noise_mean;
}

double tf_snr_gain(const ComplexSignal& clean, const ComplexSignal& noise, const Window& gamma,
                   const Lattice& lat) {
    return tf_peak_snr(clean, noise, gamma, lat) / time_peak_snr(clean, noise);
}

ComplexSignal linear_chirp(std::size_t length, double nu_start, double nu_end) {
    if (length == 0) {
        throw DimensionError("chirp length must be positive");
    }
    cvec out(length);
    const double rate = (nu_end - nu_start) / static_cast<double>(length);
    for (std::size_t l = 0; l < length; ++l) {
        const double t = static_cast<double>(l);
        const double phase = 2.0 * M_PI * (nu_start * t + 0.5 * rate * t * t);
        out[l] = cplx(std::cos(phase), std::sin(phase));
    }
    return ComplexSignal(std::move(out));
}

ComplexSignal gaussian_chirplet(std::size_t length, double center, double env_sigma,
                                double nu_center, double nu_sweep) {
    if (length == 0) {
        throw DimensionError("chirplet length must be positive");
    }
    if (!(env_sigma > 0.0)) {
        throw ConfigurationError("envelope sigma must be positive");
    }
    const double rate = nu_sweep / (4.0 * env_sigma);
    cvec out(length);
    for (std::size_t l = 0; l < length; ++l) {
        const double t = static_cast<double>(l) - center;
        const double envelope = std::exp(-t * t / (2.0 * env_sigma * env_sigma));
        const double phase = 2.0 * M_PI * (nu_center * t + 0.5 * rate * t * t);
        out[l] = envelope * cplx(std::cos(phase), std::sin(phase));
    }
    return ComplexSignal(std::move(out));
}

std::vector<RateGain> snr_growth_experiment(const std::vector<std::size_t>& rates,
                                            std::size_t trials, std::uint64_t seed) {
    if (rates.empty()) {
        throw ConfigurationError("need at least one sampling rate");
    }
    for (std::size_t i = 1; i < rates.size(); ++i) {
        if (rates[i] <= rates[i - 1]) {
            throw ConfigurationError("rates must be strictly increasing");
        }
    }
    if (trials == 0) {
        throw ConfigurationError("need at least one trial");
    }

    std::vector<RateGain> out;
    out.reserve(rates.size());
    for (std::size_t i = 0; i < rates.size(); ++i) {
        const std::size_t rate = rates[i];
        if (rate < 4 || rate % 4 != 0) {
            throw ConfigurationError("rate " + std::to_string(rate) +
                                     " admits no lattice with M = L/4");
        }
        const std::size_t L = rate;  // one unit of time per block

        // a ~ rate/32, rounded to the nearest divisor of L (ties downward).
        const std::size_t wanted = std::max<std::size_t>(1, (rate + 16) / 32);
        std::size_t a = 1;
        for (std::size_t d = 1; d <= L; ++d) {
            if (L % d != 0) {
                continue;
            }
            const auto dist = [&](std::size_t x) {
                return x > wanted ? x - wanted : wanted - x;
            };
            if (dist(d) < dist(a)) {
                a = d;
            }
        }
        const Lattice lat(L, a, L / 4);

        const ComplexSignal clean =
            linear_chirp(L, 4.0 / static_cast<double>(rate), 20.0 / static_cast<double>(rate));
        const Window gamma = gaussian_pulse(lat, {1.0, static_cast<double>(rate) / 16.0});

        double total = 0.0;
        for (std::size_t t = 0; t < trials; ++t) {
            const ComplexSignal noise(
                complex_gaussian_vector(L, seed + static_cast<std::uint64_t>(i * trials + t)));
            total += tf_snr_gain(clean, noise, gamma, lat);
        }
        out.push_back({rate, total / static_cast<double>(trials)});
    }
    return out;
}

}  // namespace gabor
