#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "gabor/errors.hpp"

namespace gabor {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

namespace detail {
void require_finite(const cvec& values, const char* what);
}

// Finite-length complex time-domain sequence. Length is fixed at
// construction; all samples are finite.
class ComplexSignal {
  public:
    explicit ComplexSignal(cvec samples);

    std::size_t length() const { return samples_.size(); }
    const cplx& operator[](std::size_t l) const { return samples_[l]; }
    const cvec& samples() const { return samples_; }

  private:
    cvec samples_;
};

// Time-frequency sampling grid: signal length L, time step a, channel
// count M. Requires a | L and M | L. The derived quantities:
//   N = L/a      time shifts
//   density a/M  the discrete time-bandwidth product of one cell
// A lattice with density <= 1 supports perfect reconstruction; denser
// lattices are constructible for analysis-only use.
class Lattice {
  public:
    Lattice(std::size_t L, std::size_t a, std::size_t M);

    std::size_t L() const { return L_; }
    std::size_t a() const { return a_; }
    std::size_t M() const { return M_; }
    std::size_t N() const { return L_ / a_; }

    double density() const { return static_cast<double>(a_) / static_cast<double>(M_); }
    bool reconstructing() const { return a_ <= M_; }
    bool critical() const { return a_ == M_; }
    bool oversampled() const { return M_ > a_; }

  private:
    std::size_t L_;
    std::size_t a_;
    std::size_t M_;
};

Lattice make_lattice(std::size_t L, std::size_t a, std::size_t M);

enum class WindowRole { synthesis, analysis };

// Length-L prototype pulse. Used either as the synthesis pulse p or the
// analysis window gamma; the role tag is informational.
class Window {
  public:
    explicit Window(cvec values, WindowRole role = WindowRole::synthesis);

    std::size_t length() const { return values_.size(); }
    const cplx& operator[](std::size_t l) const { return values_[l]; }
    const cvec& values() const { return values_; }
    WindowRole role() const { return role_; }

  private:
    cvec values_;
    WindowRole role_;
};

// M x N coefficient grid; m indexes frequency channels (rows), n indexes
// time shifts (columns). Stored row-major.
class TFCoefficients {
  public:
    TFCoefficients(std::size_t channels, std::size_t shifts);
    TFCoefficients(std::size_t channels, std::size_t shifts, cvec data);

    std::size_t channels() const { return channels_; }
    std::size_t shifts() const { return shifts_; }
    std::size_t size() const { return data_.size(); }

    cplx& at(std::size_t m, std::size_t n) { return data_[m * shifts_ + n]; }
    const cplx& at(std::size_t m, std::size_t n) const { return data_[m * shifts_ + n]; }

    cvec& data() { return data_; }
    const cvec& data() const { return data_; }

  private:
    std::size_t channels_;
    std::size_t shifts_;
    cvec data_;
};

}  // namespace gabor
