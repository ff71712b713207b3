#include "gabor/random.hpp"

#include <cmath>

namespace gabor {

namespace {
constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
constexpr std::uint64_t kIncrement = 1442695040888963407ULL;
constexpr double kTwoPow53 = 9007199254740992.0;  // 2^53
}  // namespace

std::uint64_t Lcg64::next_u64() {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
}

double Lcg64::uniform() {
    // Top 53 bits, shifted into (0, 1].
    return (static_cast<double>(next_u64() >> 11) + 1.0) / kTwoPow53;
}

double Lcg64::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

cplx Lcg64::complex_gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    return cplx(radius * std::cos(angle), radius * std::sin(angle)) / std::sqrt(2.0);
}

cvec complex_gaussian_vector(std::size_t length, std::uint64_t seed) {
    Lcg64 gen(seed);
    cvec out(length);
    for (auto& z : out) {
        z = gen.complex_gaussian();
    }
    return out;
}

}  // namespace gabor
