#include <doctest.h>

#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gabor/chirp.hpp"
#include "gabor/cli_app.hpp"
#include "gabor/core.hpp"
#include "gabor/dual.hpp"
#include "gabor/io.hpp"
#include "oracles.hpp"

using gabor::cplx;
using gabor::cvec;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("gabor_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(std::initializer_list<std::string> args) {
    return gabor::cli::run(std::vector<std::string>(args));
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("usage errors exit nonzero, help exits zero") {
    CHECK(run({"frobnicate"}) != 0);
    CHECK(run({}) != 0);
    CHECK(run({"dgt"}) != 0);                              // missing required options
    CHECK(run({"dgt", "--a", "0"}) != 0);                  // zero is not a positive step
    CHECK(run({"gen", "--L", "x", "--kind", "delta", "--out", "f"}) != 0);
    CHECK(run({"--help"}) == 0);
    CHECK(run({"dgt", "--help"}) == 0);
    CHECK(run({"dual", "--help"}) == 0);
}

TEST_CASE("missing input files exit nonzero") {
    TempDir dir;
    CHECK(run({"dgt", "--in", dir.file("absent.sig"), "--a", "2", "--M", "2", "--window",
               "rect:2", "--out", dir.file("c.tfg")}) != 0);
    CHECK(run({"uncertainty", "--in", dir.file("absent.sig")}) != 0);
}

TEST_CASE("transform round trip through files") {
    TempDir dir;
    // random signal -> dual window -> dgt -> idgt -> original signal
    REQUIRE(run({"gen", "--L", "48", "--kind", "noise", "--seed", "9", "--out",
                 dir.file("s.sig")}) == 0);
    REQUIRE(run({"gen", "--L", "48", "--kind", "gauss:6", "--out", dir.file("p.sig")}) == 0);
    REQUIRE(run({"dual", "--L", "48", "--a", "4", "--M", "8", "--window",
                 "file:" + dir.file("p.sig"), "--method", "mostorth", "--out",
                 dir.file("gamma.sig")}) == 0);
    REQUIRE(run({"dgt", "--in", dir.file("s.sig"), "--a", "4", "--M", "8", "--window",
                 "file:" + dir.file("gamma.sig"), "--out", dir.file("c.tfg")}) == 0);
    REQUIRE(run({"idgt", "--in", dir.file("c.tfg"), "--a", "4", "--window",
                 "file:" + dir.file("p.sig"), "--out", dir.file("rt.sig")}) == 0);

    const auto original = gabor::read_signal(dir.file("s.sig"));
    const auto recovered = gabor::read_signal(dir.file("rt.sig"));
    CHECK(oracle::linf_diff(original.samples(), recovered.samples()) < 1e-10);
}

TEST_CASE("scalar verbs write parseable results") {
    TempDir dir;
    REQUIRE(run({"wrcheck", "--L", "4", "--a", "2", "--M", "2", "--synthesis", "rect:2",
                 "--analysis", "rect:2", "--out", dir.file("r.txt")}) == 0);
    const std::string residual = slurp(dir.file("r.txt"));
    CHECK(residual.find("residual = 1") != std::string::npos);  // known analytic value 1.0

    REQUIRE(run({"rank", "--L", "4", "--a", "2", "--M", "2", "--window", "rect:2", "--out",
                 dir.file("k.txt")}) == 0);
    CHECK(slurp(dir.file("k.txt")) == "rank = 4\n");

    REQUIRE(run({"gen", "--L", "1024", "--kind", "gauss:64", "--out", dir.file("g.sig")}) == 0);
    REQUIRE(run({"uncertainty", "--in", dir.file("g.sig"), "--out", dir.file("u.txt")}) == 0);
    const std::string product = slurp(dir.file("u.txt"));
    double value = 0.0;
    REQUIRE(std::sscanf(product.c_str(), "product = %lf", &value) == 1);
    CHECK(value == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("modulate, demodulate and the multicarrier check") {
    TempDir dir;
    // build a symbol grid by analyzing a random signal, transmit, receive
    REQUIRE(run({"gen", "--L", "64", "--kind", "noise", "--seed", "4", "--out",
                 dir.file("x.sig")}) == 0);
    REQUIRE(run({"dual", "--L", "64", "--a", "8", "--M", "8", "--window", "rect:8", "--out",
                 dir.file("gamma.sig")}) == 0);
    REQUIRE(run({"demodulate", "--in", dir.file("x.sig"), "--a", "8", "--M", "8", "--window",
                 "file:" + dir.file("gamma.sig"), "--out", dir.file("sym.tfg")}) == 0);
    REQUIRE(run({"modulate", "--in", dir.file("sym.tfg"), "--a", "8", "--window", "rect:8",
                 "--out", dir.file("tx.sig")}) == 0);
    const auto x = gabor::read_signal(dir.file("x.sig"));
    const auto tx = gabor::read_signal(dir.file("tx.sig"));
    CHECK(oracle::linf_diff(x.samples(), tx.samples()) < 1e-10);

    REQUIRE(run({"ofdm-check", "--in", dir.file("sym.tfg"), "--a", "8", "--out",
                 dir.file("dev.txt")}) == 0);
    double deviation = 1.0;
    REQUIRE(std::sscanf(slurp(dir.file("dev.txt")).c_str(), "deviation = %lf", &deviation) == 1);
    CHECK(deviation < 1e-12);
}

TEST_CASE("filter verb applies a mask file") {
    TempDir dir;
    REQUIRE(run({"gen", "--L", "4", "--kind", "noise", "--seed", "2", "--out",
                 dir.file("s.sig")}) == 0);
    // all-ones mask: identity
    gabor::TFCoefficients ones(2, 2, cvec(4, cplx(1, 0)));
    gabor::write_grid(dir.file("mask.tfg"), ones);
    REQUIRE(run({"filter", "--in", dir.file("s.sig"), "--a", "2", "--M", "2", "--synthesis",
                 "rect:2", "--analysis", "file:" + dir.file("gamma.sig"), "--mask",
                 dir.file("mask.tfg"), "--out", dir.file("f.sig"), "--report",
                 dir.file("rep.txt")}) != 0);  // gamma.sig does not exist yet
    REQUIRE(run({"dual", "--L", "4", "--a", "2", "--M", "2", "--window", "rect:2", "--out",
                 dir.file("gamma.sig")}) == 0);
    REQUIRE(run({"filter", "--in", dir.file("s.sig"), "--a", "2", "--M", "2", "--synthesis",
                 "rect:2", "--analysis", "file:" + dir.file("gamma.sig"), "--mask",
                 dir.file("mask.tfg"), "--out", dir.file("f.sig"), "--report",
                 dir.file("rep.txt")}) == 0);
    const auto in_sig = gabor::read_signal(dir.file("s.sig"));
    const auto out_sig = gabor::read_signal(dir.file("f.sig"));
    CHECK(oracle::linf_diff(in_sig.samples(), out_sig.samples()) < 1e-12);
    CHECK(slurp(dir.file("rep.txt")).find("converged = yes") != std::string::npos);

    REQUIRE(run({"filter", "--in", dir.file("s.sig"), "--a", "2", "--M", "2", "--synthesis",
                 "rect:2", "--analysis", "file:" + dir.file("gamma.sig"), "--mask",
                 dir.file("mask.tfg"), "--single-pass", "--out", dir.file("once.sig")}) == 0);
    const auto once = gabor::read_signal(dir.file("once.sig"));
    CHECK(oracle::linf_diff(in_sig.samples(), once.samples()) < 1e-12);
}

TEST_CASE("identical seeds produce byte-identical outputs") {
    TempDir dir;
    for (int round = 0; round < 2; ++round) {
        const std::string tag = std::to_string(round);
        REQUIRE(run({"gen", "--L", "256", "--kind", "noise", "--seed", "5", "--out",
                     dir.file("n" + tag + ".sig")}) == 0);
        REQUIRE(run({"snr-experiment", "--rates", "64,128", "--trials", "3", "--seed", "12",
                     "--out", dir.file("snr" + tag + ".txt")}) == 0);
    }
    CHECK(slurp(dir.file("n0.sig")) == slurp(dir.file("n1.sig")));
    CHECK(slurp(dir.file("snr0.txt")) == slurp(dir.file("snr1.txt")));
    CHECK(!slurp(dir.file("snr0.txt")).empty());
}

TEST_CASE("transform image of a prime-length chirp has a single hot pixel") {
    TempDir dir;
    REQUIRE(run({"gen", "--L", "31", "--kind", "chirp:7:11", "--out", dir.file("c.sig")}) == 0);
    REQUIRE(run({"dcft", "--in", dir.file("c.sig"), "--out", dir.file("c.tfg"), "--image",
                 dir.file("c.pgm")}) == 0);

    std::ifstream in(dir.file("c.pgm"));
    std::string magic;
    std::size_t width = 0, height = 0, maxval = 0;
    in >> magic >> width >> height >> maxval;
    CHECK(magic == "P2");
    CHECK(width == 31);
    CHECK(height == 31);
    CHECK(maxval == 255);
    std::size_t hot = 0;
    std::size_t hot_row = 0, hot_col = 0;
    for (std::size_t r = 0; r < height; ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            int pixel = -1;
            in >> pixel;
            REQUIRE(pixel >= 0);
            REQUIRE(pixel <= 255);
            if (pixel == 255) {
                ++hot;
                hot_row = r;
                hot_col = c;
            }
        }
    }
    CHECK(hot == 1);
    CHECK(hot_row == 7);   // frequency index k0
    CHECK(hot_col == 11);  // rate index l0

    REQUIRE(run({"chirp-estimate", "--in", dir.file("c.sig"), "--out", dir.file("est.txt")}) == 0);
    const std::string est = slurp(dir.file("est.txt"));
    CHECK(est.find("k0 = 7") != std::string::npos);
    CHECK(est.find("l0 = 11") != std::string::npos);
}

TEST_CASE("gen atom matches the library atom") {
    TempDir dir;
    REQUIRE(run({"gen", "--L", "4", "--kind", "atom:1:1", "--window", "rect:2", "--a", "2",
                 "--M", "2", "--out", dir.file("a.sig")}) == 0);
    const auto atom = gabor::read_signal(dir.file("a.sig"));
    CHECK(oracle::linf_diff(atom.samples(), cvec{0, 0, 1, -1}) < 1e-15);
}
