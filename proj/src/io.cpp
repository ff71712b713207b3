#include "gabor/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gabor {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Parses a complete double, rejecting trailing junk.
bool parse_double(const std::string& text, double& out) {
    const char* begin = text.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    if (end == begin) {
        return false;
    }
    while (*end == ' ' || *end == '\t') {
        ++end;
    }
    return *end == '\0' && std::isfinite(out);
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        return "";
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(const std::string& path, std::size_t line, const std::string& what) {
    throw IoError(path + ": line " + std::to_string(line) + ": " + what);
}

cplx parse_pair(const std::string& path, std::size_t line_no, const std::string& text,
                char separator) {
    const auto sep = text.find(separator);
    if (sep == std::string::npos) {
        fail(path, line_no, "expected 're" + std::string(1, separator) + "im', got '" + text + "'");
    }
    double re = 0.0;
    double im = 0.0;
    if (!parse_double(trim(text.substr(0, sep)), re) ||
        !parse_double(trim(text.substr(sep + 1)), im)) {
        fail(path, line_no, "malformed number in '" + text + "'");
    }
    return cplx(re, im);
}

}  // namespace

ComplexSignal read_signal(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError(path + ": cannot open for reading");
    }
    std::string line;
    std::size_t line_no = 0;
    std::size_t declared = 0;
    bool have_header = false;
    cvec samples;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trim(line);
        if (body.empty()) {
            continue;
        }
        if (body[0] == '#') {
            unsigned long long n = 0;
            if (std::sscanf(body.c_str(), "# signal L=%llu", &n) == 1) {
                declared = static_cast<std::size_t>(n);
                have_header = true;
            }
            continue;
        }
        if (have_header && samples.size() == declared) {
            fail(path, line_no, "more data lines than the declared L=" + std::to_string(declared));
        }
        samples.push_back(parse_pair(path, line_no, body, ','));
    }
    if (have_header && samples.size() < declared) {
        fail(path, std::max<std::size_t>(line_no, 1),
             "expected " + std::to_string(declared) + " samples, found " +
                 std::to_string(samples.size()));
    }
    if (samples.empty()) {
        throw IoError(path + ": no samples");
    }
    return ComplexSignal(std::move(samples));
}

void write_signal(const std::string& path, const ComplexSignal& s) {
    std::ofstream out(path);
    if (!out) {
        throw IoError(path + ": cannot open for writing");
    }
    out << "# signal L=" << s.length() << "\n";
    for (std::size_t l = 0; l < s.length(); ++l) {
        out << format_double(s[l].real()) << "," << format_double(s[l].imag()) << "\n";
    }
    if (!out) {
        throw IoError(path + ": write failed");
    }
}

TFCoefficients read_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError(path + ": cannot open for reading");
    }
    std::string line;
    std::size_t line_no = 0;
    std::size_t channels = 0;
    std::size_t shifts = 0;
    bool have_header = false;
    cvec data;
    std::size_t rows_read = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trim(line);
        if (body.empty()) {
            continue;
        }
        if (body[0] == '#') {
            unsigned long long m = 0;
            unsigned long long n = 0;
            if (std::sscanf(body.c_str(), "# grid M=%llu N=%llu", &m, &n) == 2) {
                channels = static_cast<std::size_t>(m);
                shifts = static_cast<std::size_t>(n);
                have_header = true;
            }
            continue;
        }
        if (!have_header) {
            fail(path, line_no, "missing '# grid M=<m> N=<n>' header");
        }
        if (rows_read == channels) {
            fail(path, line_no, "more rows than the declared M=" + std::to_string(channels));
        }
        std::stringstream cells(body);
        std::string cell;
        std::size_t cols = 0;
        while (std::getline(cells, cell, ',')) {
            data.push_back(parse_pair(path, line_no, trim(cell), ':'));
            ++cols;
        }
        if (cols != shifts) {
            fail(path, line_no,
                 "expected " + std::to_string(shifts) + " cells, found " + std::to_string(cols));
        }
        ++rows_read;
    }
    if (!have_header) {
        throw IoError(path + ": missing '# grid M=<m> N=<n>' header");
    }
    if (rows_read != channels) {
        fail(path, std::max<std::size_t>(line_no, 1),
             "expected " + std::to_string(channels) + " rows, found " + std::to_string(rows_read));
    }
    return TFCoefficients(channels, shifts, std::move(data));
}

void write_grid(const std::string& path, const TFCoefficients& grid) {
    std::ofstream out(path);
    if (!out) {
        throw IoError(path + ": cannot open for writing");
    }
    out << "# grid M=" << grid.channels() << " N=" << grid.shifts() << "\n";
    for (std::size_t m = 0; m < grid.channels(); ++m) {
        for (std::size_t n = 0; n < grid.shifts(); ++n) {
            if (n != 0) {
                out << ",";
            }
            const cplx& z = grid.at(m, n);
            out << format_double(z.real()) << ":" << format_double(z.imag());
        }
        out << "\n";
    }
    if (!out) {
        throw IoError(path + ": write failed");
    }
}

void write_grid_image(const std::string& path, const std::vector<std::vector<double>>& magnitudes,
                      double gamma_correction) {
    if (magnitudes.empty() || magnitudes.front().empty()) {
        throw DimensionError("image grid must be nonempty");
    }
    const std::size_t height = magnitudes.size();
    const std::size_t width = magnitudes.front().size();
    double max_mag = 0.0;
    for (const auto& row : magnitudes) {
        if (row.size() != width) {
            throw DimensionError("image grid rows have inconsistent lengths");
        }
        for (double v : row) {
            max_mag = std::max(max_mag, std::abs(v));
        }
    }
    std::ofstream out(path);
    if (!out) {
        throw IoError(path + ": cannot open for writing");
    }
    out << "P2\n" << width << " " << height << "\n255\n";
    for (const auto& row : magnitudes) {
        for (std::size_t c = 0; c < width; ++c) {
            if (c != 0) {
                out << " ";
            }
            long pixel = 0;
            if (max_mag > 0.0) {
                pixel = std::lround(255.0 * std::pow(std::abs(row[c]) / max_mag, gamma_correction));
            }
            out << pixel;
        }
        out << "\n";
    }
    if (!out) {
        throw IoError(path + ": write failed");
    }
}

}  // namespace gabor
