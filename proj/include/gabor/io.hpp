#pragma once

#include <string>
#include <vector>

#include "gabor/types.hpp"

namespace gabor {

// Signal files are line-oriented text: an optional "# signal L=<n>"
// header, then one "re,im" pair per line. Values are written with 17
// significant digits, so a write/read round trip is bit-exact.
ComplexSignal read_signal(const std::string& path);
void write_signal(const std::string& path, const ComplexSignal& s);

// Grid files carry a required "# grid M=<m> N=<n>" header followed by
// M lines of N comma-separated "re:im" cells. Masks use the same
// container with zero imaginary parts and entries in [0, 1].
TFCoefficients read_grid(const std::string& path);
void write_grid(const std::string& path, const TFCoefficients& grid);

// Plain portable graymap (P2): header "P2", width N, height M,
// maxval 255; pixel = round(255 * (|value| / maxmag)^gamma_correction).
// An all-zero grid maps to all-zero pixels.
void write_grid_image(const std::string& path, const std::vector<std::vector<double>>& magnitudes,
                      double gamma_correction = 1.0);

}  // namespace gabor
