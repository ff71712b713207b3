#include <doctest.h>

#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <sstream>

#include "gabor/io.hpp"
#include "gabor/random.hpp"
#include "oracles.hpp"

using gabor::cplx;
using gabor::cvec;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("gabor_io_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

}  // namespace

TEST_CASE("signal files") {
    TempDir dir;

    SUBCASE("documented format") {
        spit(dir.file("s.sig"), "# signal L=2\n1.0,0.0\n2.0,0.0\n");
        const auto s = gabor::read_signal(dir.file("s.sig"));
        REQUIRE(s.length() == 2);
        CHECK(s[0] == cplx(1, 0));
        CHECK(s[1] == cplx(2, 0));
    }
    SUBCASE("headerless files read to end of file") {
        spit(dir.file("s.sig"), "1,0\n0,-1\n");
        CHECK(gabor::read_signal(dir.file("s.sig")).length() == 2);
    }
    SUBCASE("write/read round trip is bit-exact") {
        const gabor::ComplexSignal s(oracle::random_cvec(1000, 17));
        gabor::write_signal(dir.file("rt.sig"), s);
        const auto back = gabor::read_signal(dir.file("rt.sig"));
        REQUIRE(back.length() == s.length());
        for (std::size_t l = 0; l < s.length(); ++l) {
            CHECK(back[l].real() == s[l].real());
            CHECK(back[l].imag() == s[l].imag());
        }
    }
    SUBCASE("short files name the failing line") {
        spit(dir.file("bad.sig"), "# signal L=3\n1,0\n2,0\n");
        try {
            gabor::read_signal(dir.file("bad.sig"));
            FAIL("expected IoError");
        } catch (const gabor::IoError& e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }
    SUBCASE("malformed numbers name the failing line") {
        spit(dir.file("bad2.sig"), "1,0\nnope,0\n");
        try {
            gabor::read_signal(dir.file("bad2.sig"));
            FAIL("expected IoError");
        } catch (const gabor::IoError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SUBCASE("missing files and empty files are errors") {
        CHECK_THROWS_AS(gabor::read_signal(dir.file("absent.sig")), gabor::IoError);
        spit(dir.file("empty.sig"), "");
        CHECK_THROWS_AS(gabor::read_signal(dir.file("empty.sig")), gabor::IoError);
    }
}

TEST_CASE("grid files") {
    TempDir dir;

    SUBCASE("round trip") {
        gabor::TFCoefficients grid(3, 4, oracle::random_cvec(12, 23));
        gabor::write_grid(dir.file("g.tfg"), grid);
        const auto back = gabor::read_grid(dir.file("g.tfg"));
        REQUIRE(back.channels() == 3);
        REQUIRE(back.shifts() == 4);
        for (std::size_t i = 0; i < 12; ++i) {
            CHECK(back.data()[i].real() == grid.data()[i].real());
            CHECK(back.data()[i].imag() == grid.data()[i].imag());
        }
    }
    SUBCASE("header is mandatory") {
        spit(dir.file("noheader.tfg"), "1:0,2:0\n");
        CHECK_THROWS_AS(gabor::read_grid(dir.file("noheader.tfg")), gabor::IoError);
    }
    SUBCASE("cell counts must match the header") {
        spit(dir.file("short.tfg"), "# grid M=2 N=2\n1:0,2:0\n3:0\n");
        try {
            gabor::read_grid(dir.file("short.tfg"));
            FAIL("expected IoError");
        } catch (const gabor::IoError& e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }
    SUBCASE("row counts must match the header") {
        spit(dir.file("rows.tfg"), "# grid M=3 N=2\n1:0,2:0\n3:0,4:0\n");
        CHECK_THROWS_AS(gabor::read_grid(dir.file("rows.tfg")), gabor::IoError);
    }
}

TEST_CASE("graymap export") {
    TempDir dir;

    SUBCASE("documented 2x2 example") {
        gabor::write_grid_image(dir.file("i.pgm"), {{1.0, 0.0}, {0.0, 1.0}}, 1.0);
        CHECK(slurp(dir.file("i.pgm")) == "P2\n2 2\n255\n255 0\n0 255\n");
    }
    SUBCASE("all-zero grids produce all-zero pixels") {
        gabor::write_grid_image(dir.file("z.pgm"), {{0.0, 0.0}, {0.0, 0.0}}, 1.0);
        CHECK(slurp(dir.file("z.pgm")) == "P2\n2 2\n255\n0 0\n0 0\n");
    }
    SUBCASE("gamma correction brightens midrange values") {
        gabor::write_grid_image(dir.file("g.pgm"), {{1.0, 0.25}}, 0.5);
        CHECK(slurp(dir.file("g.pgm")) == "P2\n2 1\n255\n255 128\n");  // sqrt(0.25) = 0.5
    }
    SUBCASE("unwritable paths raise output errors") {
        CHECK_THROWS_AS(
            gabor::write_grid_image(dir.file("no/such/dir/i.pgm"), {{1.0}}, 1.0),
            gabor::IoError);
    }
}
