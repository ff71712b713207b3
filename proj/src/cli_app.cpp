#include "gabor/cli_app.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "gabor/chirp.hpp"
#include "gabor/core.hpp"
#include "gabor/dual.hpp"
#include "gabor/io.hpp"
#include "gabor/random.hpp"
#include "gabor/tvfilter.hpp"
#include "gabor/waveform.hpp"

namespace gabor::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, sep)) {
        parts.push_back(part);
    }
    return parts;
}

double parse_real(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v)) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception&) {
        throw ConfigurationError("malformed " + what + ": '" + text + "'");
    }
}

std::size_t parse_count(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used != text.size() || v < 0) {
            throw std::invalid_argument(text);
        }
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ConfigurationError("malformed " + what + ": '" + text + "'");
    }
}

// Window specifiers: rect:<len>, gauss:<sigma>, delta, file:<path>.
Window load_window(const std::string& spec, const Lattice& lat) {
    const auto parts = split(spec, ':');
    if (parts.empty()) {
        throw ConfigurationError("empty window specifier");
    }
    if (parts[0] == "rect" && parts.size() == 2) {
        return rectangular_pulse(lat.L(), parse_count(parts[1], "rect length"));
    }
    if (parts[0] == "gauss" && parts.size() == 2) {
        return gaussian_pulse(lat, {1.0, parse_real(parts[1], "gauss sigma")});
    }
    if (parts[0] == "delta" && parts.size() == 1) {
        cvec values(lat.L(), cplx(0.0, 0.0));
        values[0] = cplx(1.0, 0.0);
        return Window(std::move(values));
    }
    if (parts[0] == "file" && parts.size() >= 2) {
        // paths may contain ':'
        const std::string path = spec.substr(5);
        const ComplexSignal s = read_signal(path);
        if (s.length() != lat.L()) {
            throw DimensionError("window file length " + std::to_string(s.length()) +
                                 " does not match lattice L=" + std::to_string(lat.L()));
        }
        return Window(s.samples());
    }
    throw ConfigurationError("unknown window specifier '" + spec +
                             "' (expected rect:<len>, gauss:<sigma>, delta, file:<path>)");
}

void emit_lines(const std::optional<std::string>& out_path, const std::vector<std::string>& lines) {
    if (out_path) {
        std::ofstream out(*out_path);
        if (!out) {
            throw IoError(*out_path + ": cannot open for writing");
        }
        for (const auto& line : lines) {
            out << line << "\n";
        }
        if (!out) {
            throw IoError(*out_path + ": write failed");
        }
    } else {
        for (const auto& line : lines) {
            std::cout << line << "\n";
        }
    }
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::vector<double>> grid_magnitudes(const TFCoefficients& grid) {
    std::vector<std::vector<double>> mags(grid.channels(), std::vector<double>(grid.shifts()));
    for (std::size_t m = 0; m < grid.channels(); ++m) {
        for (std::size_t n = 0; n < grid.shifts(); ++n) {
            mags[m][n] = std::abs(grid.at(m, n));
        }
    }
    return mags;
}

std::vector<std::vector<double>> dcft_magnitudes(const DCFTGrid& grid) {
    std::vector<std::vector<double>> mags(grid.n(), std::vector<double>(grid.n()));
    for (std::size_t k = 0; k < grid.n(); ++k) {
        for (std::size_t l = 0; l < grid.n(); ++l) {
            mags[k][l] = std::abs(grid.at(k, l));
        }
    }
    return mags;
}

TFMask load_mask(const std::string& path) {
    const TFCoefficients grid = read_grid(path);
    std::vector<double> data(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const cplx& z = grid.data()[i];
        if (z.imag() != 0.0) {
            throw ConfigurationError(path + ": mask entries must be real");
        }
        data[i] = z.real();
    }
    return TFMask(grid.channels(), grid.shifts(), std::move(data));
}

struct LatticeArgs {
    std::size_t a = 0;
    std::size_t M = 0;
};

void add_lattice_options(CLI::App* cmd, LatticeArgs& args, bool with_channels = true) {
    cmd->add_option("--a", args.a, "time step in samples")
        ->required()
        ->check(CLI::PositiveNumber);
    if (with_channels) {
        cmd->add_option("--M", args.M, "number of frequency channels")
            ->required()
            ->check(CLI::PositiveNumber);
    }
}

int dispatch(const std::vector<std::string>& argv) {
    CLI::App app{"finite discrete Gabor analysis, dual windows, chirp transforms", "gabor"};
    app.require_subcommand(1);

    // ---- gen ----------------------------------------------------------
    struct {
        std::size_t L = 0;
        std::string kind;
        std::string out;
        std::string window;
        std::size_t a = 1;
        std::size_t M = 1;
        std::uint64_t seed = 0;
        double amplitude = 1.0;
    } gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a signal or window file");
    gen_cmd->add_option("--L", gen.L, "signal length")->required()->check(CLI::PositiveNumber);
    gen_cmd
        ->add_option("--kind", gen.kind,
                     "rect:<len> | gauss:<sigma> | delta | chirp:<k0>:<l0> | sweep:<nu0>:<nu1> | "
                     "noise | atom:<n>:<m>")
        ->required();
    gen_cmd->add_option("--out", gen.out, "output signal file")->required();
    gen_cmd->add_option("--window", gen.window, "prototype window (atom kind only)");
    gen_cmd->add_option("--a", gen.a, "time step (atom kind only)");
    gen_cmd->add_option("--M", gen.M, "channel count (atom kind only)");
    gen_cmd->add_option("--seed", gen.seed, "noise seed (noise kind only)");
    gen_cmd->add_option("--amplitude", gen.amplitude, "scale factor (chirp kind only)");
    gen_cmd->callback([&] {
        const auto parts = split(gen.kind, ':');
        const Lattice unit(gen.L, 1, 1);
        if (parts[0] == "noise") {
            write_signal(gen.out, ComplexSignal(complex_gaussian_vector(gen.L, gen.seed)));
        } else if (parts[0] == "chirp" && parts.size() == 3) {
            ChirpParams params;
            params.k0 = parse_count(parts[1], "chirp k0");
            params.l0 = parse_count(parts[2], "chirp l0");
            params.amplitude = cplx(gen.amplitude, 0.0);
            write_signal(gen.out, make_chirp(gen.L, params));
        } else if (parts[0] == "sweep" && parts.size() == 3) {
            write_signal(gen.out, linear_chirp(gen.L, parse_real(parts[1], "sweep start"),
                                               parse_real(parts[2], "sweep end")));
        } else if (parts[0] == "atom" && parts.size() == 3) {
            if (gen.window.empty()) {
                throw ConfigurationError("atom kind needs --window, --a and --M");
            }
            const Lattice lat(gen.L, gen.a, gen.M);
            write_signal(gen.out,
                         gabor_atom(load_window(gen.window, lat), lat,
                                    parse_count(parts[1], "atom n"), parse_count(parts[2], "atom m")));
        } else {
            write_signal(gen.out, ComplexSignal(load_window(gen.kind, unit).values()));
        }
    });

    // ---- dgt ----------------------------------------------------------
    struct {
        std::string in;
        std::string window;
        std::string out;
        std::string image;
        LatticeArgs lat;
        double gamma_correction = 1.0;
    } fwd;
    auto* dgt_cmd = app.add_subcommand("dgt", "forward transform: signal -> coefficient grid");
    dgt_cmd->add_option("--in", fwd.in, "input signal file")->required();
    add_lattice_options(dgt_cmd, fwd.lat);
    dgt_cmd->add_option("--window", fwd.window, "analysis window specifier")->required();
    dgt_cmd->add_option("--out", fwd.out, "output grid file")->required();
    dgt_cmd->add_option("--image", fwd.image, "optional magnitude graymap (P2)");
    dgt_cmd->add_option("--gamma-correction", fwd.gamma_correction, "image gamma exponent");
    dgt_cmd->callback([&] {
        const ComplexSignal s = read_signal(fwd.in);
        const Lattice lat(s.length(), fwd.lat.a, fwd.lat.M);
        const TFCoefficients c = dgt(s, load_window(fwd.window, lat), lat);
        write_grid(fwd.out, c);
        if (!fwd.image.empty()) {
            write_grid_image(fwd.image, grid_magnitudes(c), fwd.gamma_correction);
        }
    });

    // ---- idgt ---------------------------------------------------------
    struct {
        std::string in;
        std::string window;
        std::string out;
        std::size_t a = 0;
    } inv;
    auto* idgt_cmd = app.add_subcommand("idgt", "expansion: coefficient grid -> signal");
    idgt_cmd->add_option("--in", inv.in, "input grid file")->required();
    idgt_cmd->add_option("--a", inv.a, "time step in samples")
        ->required()
        ->check(CLI::PositiveNumber);
    idgt_cmd->add_option("--window", inv.window, "synthesis window specifier")->required();
    idgt_cmd->add_option("--out", inv.out, "output signal file")->required();
    idgt_cmd->callback([&] {
        const TFCoefficients c = read_grid(inv.in);
        const Lattice lat(inv.a * c.shifts(), inv.a, c.channels());
        write_signal(inv.out, idgt(c, load_window(inv.window, lat), lat));
    });

    // ---- dual ---------------------------------------------------------
    struct {
        std::size_t L = 0;
        std::string window;
        std::string method = "minnorm";
        std::string op = "identity";
        std::string out;
        LatticeArgs lat;
    } dual_args;
    auto* dual_cmd = app.add_subcommand("dual", "solve for an analysis window dual to --window");
    dual_cmd->add_option("--L", dual_args.L, "signal length")
        ->required()
        ->check(CLI::PositiveNumber);
    add_lattice_options(dual_cmd, dual_args.lat);
    dual_cmd->add_option("--window", dual_args.window, "synthesis window specifier")->required();
    dual_cmd
        ->add_option("--method", dual_args.method,
                     "minnorm | mostorth | canonical | generalized")
        ->check(CLI::IsMember({"minnorm", "mostorth", "canonical", "generalized"}));
    dual_cmd->add_option("--operator", dual_args.op,
                         "generalized method: zero | identity | scale:<re>[:<im>] | file:<path>");
    dual_cmd->add_option("--out", dual_args.out, "output window file")->required();
    dual_cmd->callback([&] {
        const Lattice lat(dual_args.L, dual_args.lat.a, dual_args.lat.M);
        const Window p = load_window(dual_args.window, lat);
        Window gamma = [&] {
            if (dual_args.method == "minnorm") {
                return min_norm_dual(p, lat);
            }
            if (dual_args.method == "mostorth") {
                return most_orthogonal_like_dual(p, lat);
            }
            if (dual_args.method == "canonical") {
                return canonical_dual(p, lat);
            }
            const auto parts = split(dual_args.op, ':');
            if (parts[0] == "zero") {
                return generalized_dual(p, lat, LinearOperator::zero(lat.L()));
            }
            if (parts[0] == "identity") {
                return generalized_dual(p, lat, LinearOperator::identity(lat.L()));
            }
            if (parts[0] == "scale" && (parts.size() == 2 || parts.size() == 3)) {
                const double re = parse_real(parts[1], "operator scale");
                const double im =
                    parts.size() == 3 ? parse_real(parts[2], "operator scale") : 0.0;
                return generalized_dual(p, lat,
                                        LinearOperator::scaled_identity(lat.L(), cplx(re, im)));
            }
            if (parts[0] == "file" && parts.size() >= 2) {
                const TFCoefficients grid = read_grid(dual_args.op.substr(5));
                if (grid.channels() != lat.L() || grid.shifts() != lat.L()) {
                    throw DimensionError("operator grid must be LxL");
                }
                return generalized_dual(p, lat, LinearOperator(lat.L(), grid.data()));
            }
            throw ConfigurationError("unknown operator specifier '" + dual_args.op + "'");
        }();
        write_signal(dual_args.out, ComplexSignal(gamma.values()));
    });

    // ---- wrcheck ------------------------------------------------------
    struct {
        std::size_t L = 0;
        std::string synthesis;
        std::string analysis;
        std::optional<std::string> out;
        LatticeArgs lat;
    } wr;
    auto* wr_cmd = app.add_subcommand("wrcheck", "biorthogonality residual of a window pair");
    wr_cmd->add_option("--L", wr.L, "signal length")->required()->check(CLI::PositiveNumber);
    add_lattice_options(wr_cmd, wr.lat);
    wr_cmd->add_option("--synthesis", wr.synthesis, "synthesis window specifier")->required();
    wr_cmd->add_option("--analysis", wr.analysis, "analysis window specifier")->required();
    wr_cmd->add_option("--out", wr.out, "write the residual to a file instead of stdout");
    wr_cmd->callback([&] {
        const Lattice lat(wr.L, wr.lat.a, wr.lat.M);
        const double residual =
            wexler_raz_residual(load_window(wr.synthesis, lat), load_window(wr.analysis, lat), lat);
        emit_lines(wr.out, {"residual = " + format_value(residual)});
    });

    // ---- rank ---------------------------------------------------------
    struct {
        std::size_t L = 0;
        std::string window;
        std::optional<std::string> out;
        LatticeArgs lat;
    } rank_args;
    auto* rank_cmd = app.add_subcommand("rank", "numerical rank of the analysis map");
    rank_cmd->add_option("--L", rank_args.L, "signal length")
        ->required()
        ->check(CLI::PositiveNumber);
    add_lattice_options(rank_cmd, rank_args.lat);
    rank_cmd->add_option("--window", rank_args.window, "window specifier")->required();
    rank_cmd->add_option("--out", rank_args.out, "write the rank to a file instead of stdout");
    rank_cmd->callback([&] {
        const Lattice lat(rank_args.L, rank_args.lat.a, rank_args.lat.M);
        const std::size_t r = analysis_matrix_rank(load_window(rank_args.window, lat), lat);
        emit_lines(rank_args.out, {"rank = " + std::to_string(r)});
    });

    // ---- uncertainty ----------------------------------------------------
    struct {
        std::string in;
        std::optional<std::string> out;
    } unc;
    auto* unc_cmd = app.add_subcommand("uncertainty", "time-bandwidth product of a signal");
    unc_cmd->add_option("--in", unc.in, "input signal file")->required();
    unc_cmd->add_option("--out", unc.out, "write the product to a file instead of stdout");
    unc_cmd->callback([&] {
        const double product = uncertainty_product(read_signal(unc.in));
        emit_lines(unc.out, {"product = " + format_value(product)});
    });

    // ---- filter ---------------------------------------------------------
    struct {
        std::string in;
        std::string synthesis;
        std::string analysis;
        std::string mask;
        std::string out;
        std::optional<std::string> report;
        LatticeArgs lat;
        double tol = 1e-6;
        std::size_t max_iter = 100;
        bool single_pass = false;
    } filt;
    auto* filt_cmd = app.add_subcommand("filter", "iterative coefficient-domain masking");
    filt_cmd->add_option("--in", filt.in, "input signal file")->required();
    add_lattice_options(filt_cmd, filt.lat);
    filt_cmd->add_option("--synthesis", filt.synthesis, "synthesis window specifier")->required();
    filt_cmd->add_option("--analysis", filt.analysis, "analysis window specifier")->required();
    filt_cmd->add_option("--mask", filt.mask, "mask grid file (real entries in [0,1])")->required();
    filt_cmd->add_option("--tol", filt.tol, "relative-change stopping tolerance");
    filt_cmd->add_option("--max-iter", filt.max_iter, "iteration cap")->check(CLI::PositiveNumber);
    filt_cmd->add_flag("--single-pass", filt.single_pass,
                       "apply the mask step once instead of iterating");
    filt_cmd->add_option("--out", filt.out, "output signal file")->required();
    filt_cmd->add_option("--report", filt.report, "write iteration count and residual history");
    filt_cmd->callback([&] {
        const ComplexSignal s = read_signal(filt.in);
        const Lattice lat(s.length(), filt.lat.a, filt.lat.M);
        const TFMask mask = load_mask(filt.mask);
        const Window synthesis = load_window(filt.synthesis, lat);
        const Window analysis = load_window(filt.analysis, lat);
        if (filt.single_pass) {
            write_signal(filt.out, apply_mask_step(s, mask, synthesis, analysis, lat));
            return;
        }
        const FilterReport report =
            iterative_tv_filter(s, mask, synthesis, analysis, lat, filt.tol, filt.max_iter);
        write_signal(filt.out, report.filtered);
        if (filt.report) {
            std::vector<std::string> lines;
            lines.push_back("iterations = " + std::to_string(report.iterations));
            lines.push_back(std::string("converged = ") + (report.converged ? "yes" : "no"));
            for (double r : report.residual_history) {
                lines.push_back(format_value(r));
            }
            emit_lines(filt.report, lines);
        }
    });

    // ---- snr-experiment -------------------------------------------------
    struct {
        std::string rates;
        std::size_t trials = 20;
        std::uint64_t seed = 0;
        std::optional<std::string> out;
        std::string clean;
        std::string noise;
        std::string window;
        LatticeArgs lat;
    } snr;
    auto* snr_cmd = app.add_subcommand(
        "snr-experiment", "coefficient-domain SNR gain: rate sweep, or one --clean/--noise pair");
    snr_cmd->add_option("--rates", snr.rates, "comma-separated strictly increasing rates");
    snr_cmd->add_option("--trials", snr.trials, "noise draws per rate");
    snr_cmd->add_option("--seed", snr.seed, "base noise seed");
    snr_cmd->add_option("--clean", snr.clean, "clean signal file (single-pair mode)");
    snr_cmd->add_option("--noise", snr.noise, "noise signal file (single-pair mode)");
    snr_cmd->add_option("--window", snr.window, "analysis window (single-pair mode)");
    snr_cmd->add_option("--a", snr.lat.a, "time step (single-pair mode)");
    snr_cmd->add_option("--M", snr.lat.M, "channel count (single-pair mode)");
    snr_cmd->add_option("--out", snr.out, "write results to a file instead of stdout");
    snr_cmd->callback([&] {
        if (!snr.clean.empty() || !snr.noise.empty()) {
            if (snr.clean.empty() || snr.noise.empty() || snr.window.empty() || snr.lat.a == 0 ||
                snr.lat.M == 0) {
                throw ConfigurationError(
                    "single-pair mode needs --clean, --noise, --window, --a and --M");
            }
            const ComplexSignal clean = read_signal(snr.clean);
            const ComplexSignal noise = read_signal(snr.noise);
            const Lattice lat(clean.length(), snr.lat.a, snr.lat.M);
            const Window gamma = load_window(snr.window, lat);
            emit_lines(snr.out,
                       {"tf_snr = " + format_value(tf_peak_snr(clean, noise, gamma, lat)),
                        "time_snr = " + format_value(time_peak_snr(clean, noise)),
                        "gain = " + format_value(tf_snr_gain(clean, noise, gamma, lat))});
            return;
        }
        if (snr.rates.empty()) {
            throw ConfigurationError("need either --rates or --clean/--noise");
        }
        std::vector<std::size_t> rates;
        for (const auto& part : split(snr.rates, ',')) {
            rates.push_back(parse_count(part, "rate"));
        }
        std::vector<std::string> lines;
        for (const auto& entry : snr_growth_experiment(rates, snr.trials, snr.seed)) {
            lines.push_back(std::to_string(entry.rate) + " " + format_value(entry.mean_gain));
        }
        emit_lines(snr.out, lines);
    });

    // ---- dcft -----------------------------------------------------------
    struct {
        std::string in;
        std::string out;
        std::string image;
        double gamma_correction = 1.0;
    } dc;
    auto* dcft_cmd = app.add_subcommand("dcft", "chirp-Fourier transform: signal -> NxN grid");
    dcft_cmd->add_option("--in", dc.in, "input signal file")->required();
    dcft_cmd->add_option("--out", dc.out, "output grid file")->required();
    dcft_cmd->add_option("--image", dc.image, "optional magnitude graymap (P2)");
    dcft_cmd->add_option("--gamma-correction", dc.gamma_correction, "image gamma exponent");
    dcft_cmd->callback([&] {
        const ComplexSignal s = read_signal(dc.in);
        const DCFTGrid grid = dcft(s);
        write_grid(dc.out, TFCoefficients(grid.n(), grid.n(), grid.data()));
        if (!dc.image.empty()) {
            write_grid_image(dc.image, dcft_magnitudes(grid), dc.gamma_correction);
        }
    });

    // ---- chirp-estimate --------------------------------------------------
    struct {
        std::string in;
        std::optional<std::string> out;
    } est;
    auto* est_cmd = app.add_subcommand("chirp-estimate", "frequency/rate indices of the best chirp");
    est_cmd->add_option("--in", est.in, "input signal file")->required();
    est_cmd->add_option("--out", est.out, "write the estimate to a file instead of stdout");
    est_cmd->callback([&] {
        const ChirpParams params = estimate_chirp_params(read_signal(est.in));
        emit_lines(est.out, {"k0 = " + std::to_string(params.k0),
                             "l0 = " + std::to_string(params.l0),
                             "amplitude = " + format_value(params.amplitude.real()) + "," +
                                 format_value(params.amplitude.imag())});
    });

    // ---- modulate ---------------------------------------------------------
    struct {
        std::string in;
        std::string window;
        std::string out;
        std::size_t a = 0;
    } mod;
    auto* mod_cmd = app.add_subcommand("modulate", "symbol grid -> transmit signal");
    mod_cmd->add_option("--in", mod.in, "symbol grid file")->required();
    mod_cmd->add_option("--a", mod.a, "time step in samples")
        ->required()
        ->check(CLI::PositiveNumber);
    mod_cmd->add_option("--window", mod.window, "pulse specifier")->required();
    mod_cmd->add_option("--out", mod.out, "output signal file")->required();
    mod_cmd->callback([&] {
        const TFCoefficients symbols = read_grid(mod.in);
        const Lattice lat(mod.a * symbols.shifts(), mod.a, symbols.channels());
        write_signal(mod.out, modulate(symbols, load_window(mod.window, lat), lat));
    });

    // ---- demodulate ---------------------------------------------------------
    struct {
        std::string in;
        std::string window;
        std::string out;
        LatticeArgs lat;
    } demod;
    auto* demod_cmd = app.add_subcommand("demodulate", "received signal -> symbol grid");
    demod_cmd->add_option("--in", demod.in, "input signal file")->required();
    add_lattice_options(demod_cmd, demod.lat);
    demod_cmd->add_option("--window", demod.window, "analysis window specifier")->required();
    demod_cmd->add_option("--out", demod.out, "output grid file")->required();
    demod_cmd->callback([&] {
        const ComplexSignal s = read_signal(demod.in);
        const Lattice lat(s.length(), demod.lat.a, demod.lat.M);
        write_grid(demod.out, demodulate(s, load_window(demod.window, lat), lat));
    });

    // ---- ofdm-check ---------------------------------------------------------
    struct {
        std::string in;
        std::size_t a = 0;
        std::optional<std::string> out;
    } ofdm;
    auto* ofdm_cmd = app.add_subcommand(
        "ofdm-check", "gap between atom synthesis and blockwise inverse DFT at critical sampling");
    ofdm_cmd->add_option("--in", ofdm.in, "symbol grid file")->required();
    ofdm_cmd->add_option("--a", ofdm.a, "time step in samples")
        ->required()
        ->check(CLI::PositiveNumber);
    ofdm_cmd->add_option("--out", ofdm.out, "write the deviation to a file instead of stdout");
    ofdm_cmd->callback([&] {
        const TFCoefficients symbols = read_grid(ofdm.in);
        const Lattice lat(ofdm.a * symbols.shifts(), ofdm.a, symbols.channels());
        emit_lines(ofdm.out,
                   {"deviation = " + format_value(ofdm_equivalence_deviation(symbols, lat))});
    });

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& argv) {
    try {
        return dispatch(argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace gabor::cli
