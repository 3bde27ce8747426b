#include "dslice/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "dslice/bowditch.hpp"
#include "dslice/complex_parse.hpp"
#include "dslice/pleating.hpp"
#include "dslice/png.hpp"
#include "dslice/raster.hpp"
#include "dslice/representations.hpp"

namespace dslice::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::pair<int, int> parse_resolution(const std::string& text) {
    static const std::regex re(R"((\d+)[xX](\d+))");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw UsageError("--res must look like NXxNY, got '" + text + "'");
    const int nx = std::stoi(m[1]);
    const int ny = std::stoi(m[2]);
    if (nx < 1 || ny < 1) throw UsageError("--res must be at least 1x1");
    return {nx, ny};
}

bool parse_switch(const std::string& text) {
    if (text == "on") return true;
    if (text == "off") return false;
    throw UsageError("expected on|off, got '" + text + "'");
}

std::array<std::string, 3> split_triple(const std::string& text) {
    std::array<std::string, 3> parts;
    std::size_t start = 0;
    for (int k = 0; k < 3; ++k) {
        const std::size_t end = text.find(';', start);
        if ((k < 2) == (end == std::string::npos)) throw UsageError("--triple needs three ';'-separated expressions");
        parts[static_cast<std::size_t>(k)] = text.substr(start, end == std::string::npos ? end : end - start);
        start = end + 1;
    }
    return parts;
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    os.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!os) throw std::runtime_error("failed writing '" + path + "'");
}

struct BowditchOptions {
    std::string slice = "diagonal";
    std::string triple;
    std::string plane = "x";
    std::optional<std::string> center;
    std::optional<double> width, height;
    std::string res = "256x256";
    long max_descent = 20000;
    long max_sink = 50000;
    std::string mu0 = "on";
    std::string out;
    std::string png;
    std::string data;
    long rays_max_q = 0;
    bool overlay = false;
    unsigned threads = 0;
};

int run_bowditch(const BowditchOptions& o, std::ostream& out) {
    GridSpec grid;
    grid.plane = parse_plane(o.plane);
    const bool zeta = grid.plane == Plane::ZetaPlane;
    grid.center = o.center ? parse_complex(*o.center) : (zeta ? cplx(0.0, 0.0) : cplx(0.5, 0.0));
    grid.width = o.width.value_or(zeta ? 8.0 : 12.0);
    grid.height = o.height.value_or(8.0);
    std::tie(grid.nx, grid.ny) = parse_resolution(o.res);
    grid.validate();

    std::optional<SliceKind> slice;
    if (o.slice == "custom") {
        if (o.triple.empty()) throw UsageError("--slice custom needs --triple \"a;b;c\"");
        const auto parts = split_triple(o.triple);
        slice = SliceKind::custom(parts[0], parts[1], parts[2]);
    } else {
        if (!o.triple.empty()) throw UsageError("--triple is only valid with --slice custom");
        slice = SliceKind::parse(o.slice);
    }

    BowditchParams params;
    params.max_descent_steps = o.max_descent;
    params.max_sink_edges = o.max_sink;
    params.enable_mu0_heuristic = parse_switch(o.mu0);
    params.validate();

    if (o.overlay && o.rays_max_q < 1) throw UsageError("--overlay needs --rays-max-q >= 1");
    if (o.overlay && zeta) throw UsageError("--overlay is only available in the x-plane");
    if (!o.png.empty() && !png_available()) throw UsageError("--png needs a build with libpng");

    const auto t0 = std::chrono::steady_clock::now();
    const VerdictMatrix m = scan(grid, *slice, params, o.threads);
    const double wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const VerdictCounts counts = count(m);

    Image img = render(m);
    if (o.overlay) overlay_rays(img, rays_batch(o.rays_max_q, {}, o.threads).rays, grid);
    if (!o.out.empty()) img.write_ppm(o.out);
    if (!o.png.empty()) write_png(img, o.png);
    if (!o.data.empty()) write_file(o.data, manifest_json(grid, *slice, params, counts, wall_ms));

    out << "in_set " << counts.in_set << ", indecisive " << counts.indecisive << ", not_in_set "
        << counts.not_in_set << ", not_applicable " << counts.not_applicable << "\n";
    return kExitOk;
}

struct RaysOptions {
    long max_q = 8;
    std::string pq;
    int samples = 400;
    bool riley = false;
    std::string out;
    unsigned threads = 0;
};

int run_rays(const RaysOptions& o, std::ostream& out) {
    RayOptions opts;
    opts.t_samples = o.samples;
    opts.validate();
    std::vector<RayPolyline> rays;
    auto add_pair = [&](RayPair pair) {
        const bool fuchsian = pair.upper.branch == Branch::Real;
        rays.push_back(std::move(pair.upper));
        if (!fuchsian) rays.push_back(std::move(pair.lower));
    };
    if (!o.pq.empty()) {
        const Rational r = parse_rational(o.pq);
        add_pair(o.riley ? trace_riley_ray(r, opts) : trace_ray(r, opts));
    } else if (o.riley) {
        if (o.max_q < 1) throw UsageError("--rays-max-q must be at least 1");
        for (const Rational& r : canonical_classes_up_to(o.max_q)) add_pair(trace_riley_ray(r, opts));
    } else {
        if (o.max_q < 1) throw UsageError("--rays-max-q must be at least 1");
        rays = rays_batch(o.max_q, opts, o.threads).rays;
    }

    std::ostringstream csv;
    write_rays_csv(csv, rays);
    if (o.out.empty()) out << csv.str();
    else write_file(o.out, csv.str());

    long stalled = 0;
    for (const auto& ray : rays) {
        if (!ray.stalled) continue;
        ++stalled;
        out << "stalled: " << ray.pq.str() << " " << to_string(ray.branch) << ": " << ray.stall_reason << "\n";
    }
    if (!o.out.empty()) out << rays.size() << " rays, " << stalled << " stalled\n";
    return kExitOk;
}

int run_verify(const std::string& zeta_text, double tol, std::ostream& out) {
    const cplx zeta = parse_complex(zeta_text);
    const GroupModel model = build(zeta);
    const IdentityReport report = verify_identities(model, tol);
    out << "zeta = " << zeta << ", x = " << model.x << "\n";
    if (model.fuchsian_degenerate) out << "note: |zeta| = sqrt(3)\n";
    if (model.a_elliptic) out << "note: tr A lies in [-2, 2]\n";
    const bool cosh_ok = cosh_sigma_check(model, 1e-8);
    out << report.str();
    out << (cosh_ok ? "pass" : "FAIL") << "  cosh sigma = -(2x - 1)/3\n";
    out << "ellipse exterior: " << (ellipse_exterior(model.x) ? "yes" : "no") << "\n";
    return report.all_passed() && cosh_ok ? kExitOk : kExitRuntime;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bowditch sets, trace polynomials and pleating rays on the diagonal slice"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    BowditchOptions bo;
    auto* bow = app.add_subcommand("bowditch", "Scan Bowditch membership over a grid and render a PPM image");
    bow->add_option("--slice", bo.slice, "diagonal | torus-zeta | riley | custom")
        ->check(CLI::IsMember({"diagonal", "torus-zeta", "riley", "custom"}))
        ->capture_default_str();
    bow->add_option("--triple", bo.triple, "Custom root triple \"a;b;c\" in the variable x (or z)");
    bow->add_option("--plane", bo.plane, "x | zeta")->check(CLI::IsMember({"x", "zeta"}))->capture_default_str();
    bow->add_option("--center", bo.center, "Window centre a+bi (x: 0.5, zeta: 0)");
    bow->add_option("--width", bo.width, "Window width (x: 12, zeta: 8)");
    bow->add_option("--height", bo.height, "Window height (8)");
    bow->add_option("--res", bo.res, "Resolution NXxNY")->capture_default_str();
    bow->add_option("--max-descent", bo.max_descent, "Descent step budget")->capture_default_str();
    bow->add_option("--max-sink", bo.max_sink, "Sink edge budget")->capture_default_str();
    bow->add_option("--mu0-heuristic", bo.mu0, "on | off")->check(CLI::IsMember({"on", "off"}))->capture_default_str();
    bow->add_option("--out", bo.out, "PPM output path");
    bow->add_option("--png", bo.png, "PNG output path (builds with libpng)");
    bow->add_option("--data", bo.data, "Run manifest JSON path");
    bow->add_option("--rays-max-q", bo.rays_max_q, "Largest denominator for --overlay");
    bow->add_flag("--overlay", bo.overlay, "Draw pleating rays over the image (x-plane)");
    bow->add_option("--threads", bo.threads, "Worker threads, 0 = all cores")->capture_default_str();

    RaysOptions ro;
    auto* rays = app.add_subcommand("rays", "Trace pleating rays and write CSV");
    rays->add_option("--rays-max-q", ro.max_q, "Largest denominator")->capture_default_str();
    rays->add_option("--pq", ro.pq, "Single ray p/q instead of a batch");
    rays->add_option("--samples", ro.samples, "Samples per ray")->capture_default_str();
    rays->add_flag("--riley", ro.riley, "Riley-slice traces from the root (sqrt(-x), 0, sqrt(x))");
    rays->add_option("--out,--data", ro.out, "CSV output path (stdout if omitted)");
    rays->add_option("--threads", ro.threads, "Worker threads, 0 = all cores")->capture_default_str();

    std::string pq;
    auto* poly = app.add_subcommand("poly", "Print the trace polynomial f_{p/q}");
    poly->add_option("--pq", pq, "Farey label p/q")->required();

    std::string zeta;
    double tol = 1e-10;
    auto* verify = app.add_subcommand("verify", "Check the matrix identities at a parameter zeta");
    verify->add_option("--zeta", zeta, "Parameter a+bi")->required();
    verify->add_option("--tol", tol, "Tolerance")->capture_default_str();

    std::vector<std::string> argv_storage{"dslice"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (bow->parsed()) return run_bowditch(bo, out);
        if (rays->parsed()) return run_rays(ro, out);
        if (poly->parsed()) {
            out << trace_polynomial(parse_rational(pq)).str() << "\n";
            return kExitOk;
        }
        return run_verify(zeta, tol, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FareyError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace dslice::cli
