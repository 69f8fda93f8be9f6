// rcx: one binary for building balls, spectrum utilities, complex generators,
// and the Ramanujan verifier. Exit codes: 0 success / Ramanujan, 1 pseudo
// only, 2 neither, 3 structural failure, 64 usage, 65 data error.
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcx/building.hpp"
#include "rcx/complexes.hpp"
#include "rcx/spectrum.hpp"
#include "rcx/svg.hpp"
#include "rcx/verifier.hpp"

using json = nlohmann::ordered_json;
using rcx::cd;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

void write_text(const std::string& path, const std::string& body) {
    if (path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << body;
}

std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_cd(cd z, int prec = 6) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.*g%+.*gi", prec, z.real(), prec, z.imag());
    return buf;
}

std::string fmt_tuple(const std::vector<cd>& lambda) {
    std::string s = "(";
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (i) s += ", ";
        s += fmt_cd(lambda[i]);
    }
    return s + ")";
}

// real roots print bare ("1.414"), complex ones as a+bi
std::string fmt_root(cd z) {
    char buf[80];
    if (std::abs(z.imag()) < 5e-4)
        std::snprintf(buf, sizeof buf, "%.3f", z.real());
    else
        std::snprintf(buf, sizeof buf, "%.3f%+.3fi", z.real(), z.imag());
    return buf;
}

const char* palette(int k) {
    static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                   "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
    return colors[(k - 1) % 8];
}

rcx::ColoredComplex load_input(const std::string& path, bool strict) {
    if (path == "-") return rcx::load_complex(std::cin, /*autocomplete=*/!strict);
    return rcx::load_complex_file(path, /*autocomplete=*/!strict);
}

// ---- build-ball -------------------------------------------------------------

int run_build_ball(int d, int q, const std::vector<int>& modulus, int radius, std::size_t cap,
                   const std::string& out) {
    rcx::Field F = modulus.empty() ? rcx::Field::with_q(q) : rcx::Field::with_q(q, modulus);
    rcx::BuildingParams bp{d, F};
    rcx::BuildingBall ball = rcx::build_ball(bp, radius, cap);

    json doc;
    doc["params"] = {{"d", d}, {"q", q}, {"radius", radius}};
    if (!modulus.empty()) doc["params"]["modulus"] = modulus;
    doc["vertex_count"] = ball.size();
    json verts = json::array();
    for (std::uint32_t v = 0; v < ball.size(); ++v) {
        json rep = json::array();
        for (int i = 0; i < d; ++i) {
            json row = json::array();
            for (int j = 0; j < d; ++j) row.push_back(rcx::to_string(ball.vertices[v].rep.at(i, j)));
            rep.push_back(std::move(row));
        }
        verts.push_back({{"index", v},
                         {"color", ball.color[v]},
                         {"type", ball.type[v]},
                         {"distance", ball.distance[v]},
                         {"rep", std::move(rep)}});
    }
    doc["vertices"] = std::move(verts);
    json edges;
    for (int k = 1; k < d; ++k) edges[std::to_string(k)] = ball.edges[k - 1];
    doc["edges"] = std::move(edges);

    write_text(out, doc.dump(2) + "\n");
    return 0;
}

// ---- curve ------------------------------------------------------------------

int run_curve(int d, double q, int k, int samples, const std::string& out,
              const std::string& svg) {
    auto pts = rcx::boundary_curve(d, q, k, samples);
    std::string csv = "theta,re,im\n";
    for (const auto& s : pts)
        csv += g17(s.theta) + "," + g17(s.value.real()) + "," + g17(s.value.imag()) + "\n";
    write_text(out, csv);
    if (!svg.empty()) {
        rcx::SvgPlot plot;
        std::vector<cd> line;
        line.reserve(pts.size() + 1);
        for (const auto& s : pts) line.push_back(s.value);
        line.push_back(pts.front().value);  // close the loop
        plot.polyline(std::move(line), palette(k));
        std::ostringstream o;
        plot.write(o);
        write_text(svg, o.str());
    }
    return 0;
}

// ---- bounds -----------------------------------------------------------------

int run_bounds(int d, double q, int t_index) {
    std::ostringstream o;
    o << "d=" << d << " q=" << q << "\n";
    for (int k = 1; k < d; ++k) {
        o << "k=" << k << ": degree " << rcx::gaussian_binomial(d, k, std::llround(q));
        try {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.6f", rcx::nontrivial_bound(d, q, k));
            o << ", bound " << buf << "\n";
        } catch (const std::domain_error& e) {
            o << ", bound n/a (" << e.what() << ")\n";
        }
    }
    o << "trivial tuples (t_index=" << t_index << "):\n";
    for (const auto& t : rcx::trivial_tuples(d, q, t_index))
        o << "  zeta " << fmt_cd(t.zeta) << ": " << fmt_tuple(t.lambda) << "\n";
    std::cout << o.str();
    return 0;
}

// ---- spectrum-check ---------------------------------------------------------

int run_spectrum_check(int d, double q, const std::vector<double>& vals, double tol) {
    std::vector<cd> lambda;
    if (int(vals.size()) == 2 * (d - 1)) {
        for (int k = 0; k < d - 1; ++k) lambda.emplace_back(vals[2 * k], vals[2 * k + 1]);
    } else if (int(vals.size()) == d - 1) {
        for (double v : vals) lambda.emplace_back(v, 0.0);
    } else {
        throw CLI::ValidationError("--lambda",
                                   "expected " + std::to_string(2 * (d - 1)) + " values (re,im per color) or " +
                                       std::to_string(d - 1) + " real values, got " +
                                       std::to_string(vals.size()));
    }
    rcx::SpectrumVerdict v = rcx::in_sd(d, q, lambda, tol);
    std::sort(v.roots.begin(), v.roots.end(), [](cd a, cd b) {
        if (std::abs(std::abs(a) - std::abs(b)) > 1e-12) return std::abs(a) > std::abs(b);
        if (std::abs(a.real() - b.real()) > 1e-12) return a.real() > b.real();
        return a.imag() < b.imag();
    });
    std::string roots;
    for (std::size_t i = 0; i < v.roots.size(); ++i) {
        if (i) roots += ", ";
        roots += fmt_root(v.roots[i]);
    }
    std::cout << (v.member ? "in S_" : "NOT in S_") << d << "; roots " << roots << "\n";
    return v.member ? 0 : 1;
}

// ---- gen --------------------------------------------------------------------

std::vector<rcx::PermGenerator> parse_perms_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open permutation file '" + path + "'");
    std::vector<rcx::PermGenerator> gens;
    std::string line;
    int lineno = 0;
    std::size_t m = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        rcx::PermGenerator g;
        if (!(ls >> g.color)) continue;  // blank line
        std::uint32_t img;
        while (ls >> img) g.image.push_back(img);
        if (g.image.empty())
            throw std::runtime_error("permutation file line " + std::to_string(lineno) +
                                     ": color with no image");
        if (m == 0) m = g.image.size();
        if (g.image.size() != m)
            throw std::runtime_error("permutation file line " + std::to_string(lineno) +
                                     ": image length " + std::to_string(g.image.size()) +
                                     " != " + std::to_string(m));
        gens.push_back(std::move(g));
    }
    if (gens.empty()) throw std::runtime_error("permutation file '" + path + "' has no generators");
    return gens;
}

std::vector<rcx::VoltageAssignment> parse_voltage_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open voltage file '" + path + "'");
    std::vector<rcx::VoltageAssignment> volts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        rcx::VoltageAssignment a;
        if (!(ls >> a.u)) continue;
        if (!(ls >> a.v >> a.w))
            throw std::runtime_error("voltage file line " + std::to_string(lineno) +
                                     ": expected 'u v w'");
        a.line = lineno;
        volts.push_back(a);
    }
    return volts;
}

int emit_complex(const rcx::ColoredComplex& X, const std::string& out) {
    std::ostringstream o;
    rcx::save_complex(o, X);
    write_text(out, o.str());
    return 0;
}

// ---- verify -----------------------------------------------------------------

struct FileResult {
    std::string summary;
    int exit_code = 3;
    std::optional<rcx::VerifierReport> report;
};

std::string verdict_string(int exit_code) {
    switch (exit_code) {
        case 0: return "Ramanujan";
        case 1: return "pseudo-Ramanujan only";
        case 2: return "not Ramanujan";
        default: return "structural failure";
    }
}

FileResult verify_one(const std::string& path, const rcx::VerifierOptions& opt) {
    FileResult r;
    std::ostringstream o;
    rcx::ColoredComplex X;
    try {
        X = load_input(path, opt.strict);
    } catch (const std::exception& e) {
        o << path << ": load failed: " << e.what() << "\n";
        r.summary = o.str();
        r.exit_code = 3;
        return r;
    }
    rcx::VerifierReport rep;
    try {
        rep = rcx::verify_complex(X, opt);
    } catch (const std::exception& e) {
        o << path << ": verification failed: " << e.what() << "\n";
        r.summary = o.str();
        r.exit_code = 3;
        return r;
    }

    o << path << ": d=" << rep.d << " q=" << rep.q << " n=" << rep.n << ", " << rep.tuples.size()
      << " spectral line(s)\n";
    o << "  structural: normal=" << (rep.normal ? "yes" : "no")
      << " commuting=" << (rep.pairwise_commuting ? "yes" : "no")
      << " adjoint_paired=" << (rep.adjoint_paired ? "yes" : "no")
      << "; components=" << rep.components << "\n";
    const std::size_t shown = std::min<std::size_t>(rep.tuples.size(), 12);
    for (std::size_t i = 0; i < shown; ++i) {
        const auto& t = rep.tuples[i];
        o << "  " << rcx::to_string(t.cls);
        if (t.cls == rcx::TupleClass::Trivial) o << " zeta=" << fmt_cd(t.zeta);
        char res[32];
        std::snprintf(res, sizeof res, "%.2e", t.residual);
        o << "  lambda=" << fmt_tuple(t.lambda) << "  x" << t.multiplicity << "  residual=" << res;
        if (rep.worst_offender && *rep.worst_offender == i) o << "  <- worst offender";
        o << "\n";
    }
    if (rep.tuples.size() > shown)
        o << "  ... " << (rep.tuples.size() - shown) << " more line(s)\n";
    for (const auto& n : rep.notes) o << "  note: " << n << "\n";
    o << "  verdict: " << verdict_string(rep.exit_code) << " (exit " << rep.exit_code << ")\n";

    r.summary = o.str();
    r.exit_code = rep.exit_code;
    r.report = std::move(rep);
    return r;
}

json report_to_json(const rcx::VerifierReport& rep) {
    json doc;
    doc["d"] = rep.d;
    doc["q"] = rep.q;
    doc["n"] = rep.n;
    doc["flags"] = {{"normal", rep.normal},
                    {"pairwise_commuting", rep.pairwise_commuting},
                    {"adjoint_paired", rep.adjoint_paired},
                    {"structural_ok", rep.structural_ok}};
    doc["components"] = rep.components;
    json tuples = json::array();
    for (const auto& t : rep.tuples) {
        json lam = json::array();
        for (cd z : t.lambda) lam.push_back({z.real(), z.imag()});
        json jt = {{"lambda", std::move(lam)},
                   {"multiplicity", t.multiplicity},
                   {"residual", t.residual},
                   {"class", rcx::to_string(t.cls)},
                   {"trivial_match", t.trivial_match},
                   {"in_sd", t.in_sd},
                   {"sd_deviation", t.sd_deviation},
                   {"in_sdk", t.in_sdk}};
        if (t.cls == rcx::TupleClass::Trivial) jt["zeta"] = {t.zeta.real(), t.zeta.imag()};
        tuples.push_back(std::move(jt));
    }
    doc["tuples"] = std::move(tuples);
    doc["ramanujan"] = rep.ramanujan;
    doc["pseudo_ramanujan"] = rep.pseudo_ramanujan;
    if (rep.worst_offender)
        doc["worst_offender"] = *rep.worst_offender;
    else
        doc["worst_offender"] = nullptr;
    doc["notes"] = rep.notes;
    doc["exit_code"] = rep.exit_code;
    return doc;
}

std::string report_to_csv(const rcx::VerifierReport& rep) {
    std::string csv;
    for (int k = 1; k < rep.d; ++k)
        csv += "re_" + std::to_string(k) + ",im_" + std::to_string(k) + ",";
    csv += "residual,class\n";
    for (const auto& t : rep.tuples)
        for (int rep_i = 0; rep_i < t.multiplicity; ++rep_i) {
            std::string row;
            for (cd z : t.lambda) row += g17(z.real()) + "," + g17(z.imag()) + ",";
            row += g17(t.residual) + "," + rcx::to_string(t.cls) + "\n";
            csv += row;
        }
    return csv;
}

std::string report_to_svg(const rcx::VerifierReport& rep) {
    rcx::SvgPlot plot;
    for (int k = 1; k < rep.d; ++k) {
        auto pts = rcx::boundary_curve(rep.d, double(rep.q), k, 720);
        std::vector<cd> line;
        line.reserve(pts.size() + 1);
        for (const auto& s : pts) line.push_back(s.value);
        line.push_back(pts.front().value);
        plot.polyline(std::move(line), palette(k));
    }
    for (const auto& t : rep.tuples)
        for (int k = 1; k < rep.d; ++k) plot.circle(t.lambda[k - 1], 3.0, palette(k));
    std::ostringstream o;
    plot.write(o);
    return o.str();
}

int run_verify(const std::vector<std::string>& files, const rcx::VerifierOptions& opt,
               const std::string& json_out, const std::string& csv_out,
               const std::string& svg_out) {
    std::vector<FileResult> results(files.size());
    if (files.size() == 1) {
        results[0] = verify_one(files[0], opt);
    } else {
        std::vector<std::future<FileResult>> futs;
        futs.reserve(files.size());
        for (const auto& f : files)
            futs.push_back(std::async(std::launch::async, verify_one, f, opt));
        for (std::size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
    }

    int exit_code = 0;
    for (const auto& r : results) {
        std::cout << r.summary;
        exit_code = std::max(exit_code, r.exit_code);
    }
    if (!results[0].report) return exit_code;  // machine outputs need a report
    const rcx::VerifierReport& rep = *results[0].report;
    if (!json_out.empty()) write_text(json_out, report_to_json(rep).dump(2) + "\n");
    if (!csv_out.empty()) write_text(csv_out, report_to_csv(rep));
    if (!svg_out.empty()) write_text(svg_out, report_to_svg(rep));
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "rcx - exact affine building balls, colored operator spectra, complex generators,\n"
        "and the Ramanujan verifier.\n\n"
        "Exit codes: 0 success/Ramanujan, 1 pseudo-Ramanujan only, 2 non-Ramanujan,\n"
        "3 structural failure, 64 usage error, 65 data error. RCX_THREADS caps\n"
        "data parallelism."};
    app.require_subcommand(1);
    app.fallthrough();

    double tol = 1e-6;
    std::uint64_t seed = 12345;
    std::size_t cap = 1000000;
    app.add_option("--tol", tol, "numeric tolerance for spectrum tests")->capture_default_str();
    app.add_option("--seed", seed, "seed for all randomized choices (reproducible runs)")
        ->capture_default_str();
    app.add_option("--cap", cap, "vertex cap for ball construction")->capture_default_str();

    // build-ball
    auto* sb = app.add_subcommand("build-ball", "construct a ball of the affine building");
    int bb_d = 0, bb_q = 0, bb_radius = 0;
    std::vector<int> bb_modulus;
    std::string bb_out = "-";
    sb->add_option("--d", bb_d, "matrix dimension d (vertices are lattice classes in F^d)")
        ->required()
        ->check(CLI::Range(2, 16));
    sb->add_option("--q", bb_q, "residue field size (prime power <= 256)")->required();
    sb->add_option("--modulus", bb_modulus,
                   "field modulus coefficients c0,c1,... (low degree first, monic irreducible)")
        ->delimiter(',');
    sb->add_option("--radius", bb_radius, "ball radius (distance = max elementary divisor gap)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sb->add_option("--out", bb_out, "output JSON path, '-' for stdout")->capture_default_str();

    // verify
    auto* sv = app.add_subcommand("verify", "classify complexes: Ramanujan / pseudo / neither");
    std::vector<std::string> v_files;
    int v_tindex = 1;
    bool v_strict = false, v_forensic = false;
    std::string v_json, v_csv, v_svg;
    sv->add_option("files", v_files, ".rcx files, '-' for stdin")->required();
    sv->add_option("--t-index", v_tindex,
                   "restrict trivial tuples to zeta^(d/t) = 1 (default: all zeta^d = 1)")
        ->check(CLI::PositiveNumber);
    sv->add_flag("--strict", v_strict, "reject files whose reverse closure is incomplete");
    sv->add_flag("--treat-trivial-as-nontrivial", v_forensic,
                 "forensic mode: classify trivial-looking tuples against the spectrum bounds too");
    sv->add_option("--json", v_json, "write the full report as JSON (single input only)");
    sv->add_option("--csv", v_csv,
                   "write the spectrum as CSV: re_k,im_k per color, residual, class "
                   "(single input only)");
    sv->add_option("--svg", v_svg,
                   "write an eigenvalue scatter over the spectrum boundary curves "
                   "(single input only)");

    // curve
    auto* sc = app.add_subcommand("curve", "sample the boundary curve of a one-color spectrum");
    int c_d = 0, c_k = 1, c_samples = 1024;
    double c_q = 0;
    std::string c_out = "-", c_svg;
    sc->add_option("--d", c_d, "dimension d")->required()->check(CLI::Range(2, 64));
    sc->add_option("--q", c_q, "thickness parameter q > 0")->required()
        ->check(CLI::PositiveNumber);
    sc->add_option("--k", c_k, "color k in 1..d-1")->capture_default_str();
    sc->add_option("--samples", c_samples, "sample count (>= 16)")->capture_default_str();
    sc->add_option("--out", c_out, "CSV path (columns theta,re,im), '-' for stdout")
        ->capture_default_str();
    sc->add_option("--svg", c_svg, "also draw the curve as SVG");

    // bounds
    auto* sound = app.add_subcommand("bounds", "per-color degrees, spectral bounds, trivial tuples");
    int b_d = 0, b_tindex = 1;
    double b_q = 0;
    sound->add_option("--d", b_d, "dimension d")->required()->check(CLI::Range(2, 64));
    sound->add_option("--q", b_q, "thickness parameter q > 0")->required()
        ->check(CLI::PositiveNumber);
    sound->add_option("--t-index", b_tindex, "trivial tuple index restriction")
        ->check(CLI::PositiveNumber);

    // spectrum-check
    auto* ss = app.add_subcommand("spectrum-check", "test one eigenvalue tuple for S_d membership");
    int s_d = 0;
    double s_q = 0;
    std::vector<double> s_lambda;
    ss->add_option("--d", s_d, "dimension d")->required()->check(CLI::Range(2, 64));
    ss->add_option("--q", s_q, "thickness parameter q > 0")->required()
        ->check(CLI::PositiveNumber);
    ss->add_option("--lambda", s_lambda,
                   "eigenvalue tuple: re1,im1,...,re_{d-1},im_{d-1}, or d-1 real values")
        ->required()
        ->delimiter(',');

    // gen
    auto* sg = app.add_subcommand("gen", "generate complexes in the rcx format");
    sg->require_subcommand(1);
    auto* sgc = sg->add_subcommand("complete", "complete graph K_m (d=2, q=m-2)");
    int gc_m = 0;
    std::string gc_out = "-";
    sgc->add_option("--m", gc_m, "vertex count (>= 3)")->required();
    sgc->add_option("--out", gc_out, "output path, '-' for stdout")->capture_default_str();

    auto* sgr = sg->add_subcommand("circulant", "circulant graph C_m(jumps) (d=2)");
    int gr_m = 0;
    std::vector<int> gr_jumps;
    std::string gr_out = "-";
    sgr->add_option("--m", gr_m, "vertex count")->required();
    sgr->add_option("--jumps", gr_jumps, "jump list j1,j2,... (each in 1..m/2)")
        ->required()
        ->delimiter(',');
    sgr->add_option("--out", gr_out, "output path, '-' for stdout")->capture_default_str();

    auto* sgy = sg->add_subcommand("cayley", "complex from colored permutation generators");
    int gy_d = 0;
    std::int64_t gy_q = 0;
    std::string gy_perms, gy_out = "-";
    sgy->add_option("--d", gy_d, "dimension d")->required()->check(CLI::Range(2, 64));
    sgy->add_option("--q", gy_q, "declared thickness parameter q")->required()
        ->check(CLI::PositiveNumber);
    sgy->add_option("--perms", gy_perms,
                    "file of generators, one per line: color then the image of 0..m-1")
        ->required();
    sgy->add_option("--out", gy_out, "output path, '-' for stdout")->capture_default_str();

    auto* sgv = sg->add_subcommand("cover", "Z_m voltage cover of a d=2 base complex");
    int gv_m = 0;
    std::string gv_base, gv_volt, gv_out = "-";
    sgv->add_option("--base", gv_base, "base .rcx file, '-' for stdin")->required();
    sgv->add_option("--m", gv_m, "cyclic group order m (>= 1)")->required()
        ->check(CLI::PositiveNumber);
    sgv->add_option("--voltages", gv_volt, "file of 'u v w' lines; unlisted edges get voltage 0");
    sgv->add_option("--out", gv_out, "output path, '-' for stdout")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message and usage hint
        return kExitUsage;
    }

    try {
        if (*sb) return run_build_ball(bb_d, bb_q, bb_modulus, bb_radius, cap, bb_out);
        if (*sv) {
            if (v_files.size() > 1 && (!v_json.empty() || !v_csv.empty() || !v_svg.empty())) {
                std::cerr << "verify: --json/--csv/--svg require a single input file\n";
                return kExitUsage;
            }
            rcx::VerifierOptions opt;
            opt.tol = tol;
            opt.seed = seed;
            opt.t_index = v_tindex;
            opt.strict = v_strict;
            opt.treat_trivial_as_nontrivial = v_forensic;
            return run_verify(v_files, opt, v_json, v_csv, v_svg);
        }
        if (*sc) return run_curve(c_d, c_q, c_k, c_samples, c_out, c_svg);
        if (*sound) return run_bounds(b_d, b_q, b_tindex);
        if (*ss) return run_spectrum_check(s_d, s_q, s_lambda, tol);
        if (*sgc) return emit_complex(rcx::gen_complete(gc_m), gc_out);
        if (*sgr) return emit_complex(rcx::gen_circulant(gr_m, gr_jumps), gr_out);
        if (*sgy) {
            auto gens = parse_perms_file(gy_perms);
            std::uint32_t m = std::uint32_t(gens[0].image.size());
            return emit_complex(rcx::gen_cayley(gy_d, gy_q, m, gens), gy_out);
        }
        if (*sgv) {
            rcx::ColoredComplex base = load_input(gv_base, /*strict=*/false);
            std::vector<rcx::VoltageAssignment> volts;
            if (!gv_volt.empty()) volts = parse_voltage_file(gv_volt);
            return emit_complex(rcx::gen_voltage_cover(base, gv_m, volts), gv_out);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;  // unreachable with require_subcommand(1)
}
