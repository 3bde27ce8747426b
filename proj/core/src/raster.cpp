#include "dslice/raster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "dslice/representations.hpp"

namespace dslice {

std::string to_string(Plane p) { return p == Plane::XPlane ? "x" : "zeta"; }

Plane parse_plane(const std::string& text) {
    if (text == "x") return Plane::XPlane;
    if (text == "zeta") return Plane::ZetaPlane;
    throw std::invalid_argument("plane must be 'x' or 'zeta', got '" + text + "'");
}

void GridSpec::validate() const {
    if (nx < 1 || ny < 1) throw std::invalid_argument("grid resolution must be at least 1x1");
    if (!(width > 0.0) || !(height > 0.0)) throw std::invalid_argument("grid width and height must be positive");
}

cplx GridSpec::sample(int i, int j) const {
    const double re = center.real() + width * static_cast<double>(2 * i + 1 - nx) / (2.0 * nx);
    const double im = center.imag() + height * static_cast<double>(ny - 1 - 2 * j) / (2.0 * ny);
    return {re, im};
}

std::pair<double, double> GridSpec::locate(cplx z) const {
    const double px = (z.real() - center.real()) / width * nx + 0.5 * (nx - 1);
    const double py = (center.imag() - z.imag()) / height * ny + 0.5 * (ny - 1);
    return {px, py};
}

SliceKind SliceKind::custom(const std::string& a, const std::string& b, const std::string& c) {
    SliceKind s(Kind::Custom);
    s.exprs_ = {Expression(a), Expression(b), Expression(c)};
    return s;
}

SliceKind SliceKind::parse(const std::string& name) {
    if (name == "diagonal") return diagonal();
    if (name == "torus-zeta") return torus_zeta();
    if (name == "riley") return riley();
    throw std::invalid_argument("unknown slice '" + name + "' (diagonal, torus-zeta, riley, custom)");
}

std::string SliceKind::name() const {
    switch (kind_) {
        case Kind::Diagonal: return "diagonal";
        case Kind::TorusZeta: return "torus-zeta";
        case Kind::Riley: return "riley";
        case Kind::Custom: return "custom";
    }
    return "?";
}

Triple SliceKind::triple(cplx sample, Plane plane) const {
    const cplx zero{0.0, 0.0};
    switch (kind_) {
        case Kind::Custom: return {exprs_[0](sample), exprs_[1](sample), exprs_[2](sample)};
        case Kind::TorusZeta:
            if (plane == Plane::ZetaPlane) return torus_triple(sample);
            return {std::sqrt(2.0 - sample), zero, std::sqrt(sample + 1.0)};
        default: break;
    }
    const cplx x = plane == Plane::ZetaPlane ? zeta_to_x(sample) : sample;
    if (kind_ == Kind::Diagonal) return {x, x, x};
    return {std::sqrt(-x), zero, std::sqrt(x)};
}

Verdict classify(const Triple& root, const BowditchParams& params) {
    if (root[1] == cplx(0.0, 0.0)) return membership_quotient(root, params);
    return membership(root, params);
}

VerdictCounts count(const VerdictMatrix& m) {
    VerdictCounts c;
    for (const auto& v : m.cells) {
        switch (v.kind) {
            case VerdictKind::InSet: ++c.in_set; break;
            case VerdictKind::Indecisive: ++c.indecisive; break;
            case VerdictKind::NotInSet: ++c.not_in_set; break;
            case VerdictKind::NotApplicable: ++c.not_applicable; break;
        }
    }
    return c;
}

VerdictMatrix scan(const GridSpec& grid, const SliceKind& slice, const BowditchParams& params, unsigned threads) {
    grid.validate();
    params.validate();
    VerdictMatrix m;
    m.nx = grid.nx;
    m.ny = grid.ny;
    m.cells.resize(static_cast<std::size_t>(grid.nx) * static_cast<std::size_t>(grid.ny));

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(grid.ny));
    auto work = [&](unsigned w) {
        for (int j = static_cast<int>(w); j < grid.ny; j += static_cast<int>(threads)) {
            for (int i = 0; i < grid.nx; ++i) {
                const Triple t = slice.triple(grid.sample(i, j), grid.plane);
                m.cells[static_cast<std::size_t>(j) * static_cast<std::size_t>(grid.nx) + static_cast<std::size_t>(i)] =
                    classify(t, params);
            }
        }
    };
    if (threads == 1) {
        work(0);
        return m;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
    return m;
}

Rgb default_colormap(const Verdict& v) {
    if (v.kind != VerdictKind::InSet) return {0, 0, 0};
    const double g = 255.0 - 20.0 * std::log2(1.0 + static_cast<double>(v.sink_edges));
    const auto level = static_cast<std::uint8_t>(std::lround(std::clamp(g, 40.0, 255.0)));
    return {level, level, level};
}

Image::Image(int width, int height) : width_(width), height_(height) {
    if (width < 1 || height < 1) throw std::invalid_argument("image must be at least 1x1");
    rgb_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3, 0);
}

Rgb Image::pixel(int i, int j) const {
    const std::size_t k = (static_cast<std::size_t>(j) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(i)) * 3;
    return {rgb_[k], rgb_[k + 1], rgb_[k + 2]};
}

void Image::set_pixel(int i, int j, Rgb c) {
    if (i < 0 || j < 0 || i >= width_ || j >= height_) return;
    const std::size_t k = (static_cast<std::size_t>(j) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(i)) * 3;
    rgb_[k] = c[0];
    rgb_[k + 1] = c[1];
    rgb_[k + 2] = c[2];
}

std::string Image::to_ppm() const {
    std::string out = "P6\n" + std::to_string(width_) + " " + std::to_string(height_) + "\n255\n";
    out.append(reinterpret_cast<const char*>(rgb_.data()), rgb_.size());
    return out;
}

void Image::write_ppm(const std::string& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    const std::string data = to_ppm();
    os.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!os) throw std::runtime_error("failed writing '" + path + "'");
}

Image render(const VerdictMatrix& m, const std::function<Rgb(const Verdict&)>& colormap) {
    if (m.cells.empty()) throw std::invalid_argument("cannot render an empty verdict matrix");
    Image img(m.nx, m.ny);
    for (int j = 0; j < m.ny; ++j) {
        for (int i = 0; i < m.nx; ++i) img.set_pixel(i, j, colormap(m.at(i, j)));
    }
    return img;
}

namespace {

// Liang-Barsky clip of the segment (x0,y0)-(x1,y1) to [lo_x, hi_x] x [lo_y, hi_y].
bool clip(double& x0, double& y0, double& x1, double& y1, double lo_x, double hi_x, double lo_y, double hi_y) {
    const double dx = x1 - x0;
    const double dy = y1 - y0;
    double t0 = 0.0;
    double t1 = 1.0;
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {x0 - lo_x, hi_x - x0, y0 - lo_y, hi_y - y0};
    for (int k = 0; k < 4; ++k) {
        if (p[k] == 0.0) {
            if (q[k] < 0.0) return false;
            continue;
        }
        const double r = q[k] / p[k];
        if (p[k] < 0.0) t0 = std::max(t0, r);
        else t1 = std::min(t1, r);
        if (t0 > t1) return false;
    }
    const double ax = x0 + t0 * dx, ay = y0 + t0 * dy;
    x1 = x0 + t1 * dx;
    y1 = y0 + t1 * dy;
    x0 = ax;
    y0 = ay;
    return true;
}

void bresenham(Image& img, long x0, long y0, long x1, long y1, Rgb color) {
    const long dx = std::abs(x1 - x0);
    const long dy = -std::abs(y1 - y0);
    const long sx = x0 < x1 ? 1 : -1;
    const long sy = y0 < y1 ? 1 : -1;
    long err = dx + dy;
    for (;;) {
        img.set_pixel(static_cast<int>(x0), static_cast<int>(y0), color);
        if (x0 == x1 && y0 == y1) return;
        const long e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x0 += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y0 += sy;
        }
    }
}

}  // namespace

void overlay_rays(Image& image, const std::vector<RayPolyline>& rays, const GridSpec& grid, Rgb color) {
    if (grid.plane != Plane::XPlane) throw PlaneMismatchError("rays are x-plane data; grid is in the zeta-plane");
    if (image.width() != grid.nx || image.height() != grid.ny) {
        throw std::invalid_argument("image and grid sizes differ");
    }
    const double lo_x = -0.5, hi_x = grid.nx - 0.5, lo_y = -0.5, hi_y = grid.ny - 0.5;
    for (const auto& ray : rays) {
        for (std::size_t k = 1; k < ray.points.size(); ++k) {
            auto [x0, y0] = grid.locate(ray.points[k - 1]);
            auto [x1, y1] = grid.locate(ray.points[k]);
            if (!clip(x0, y0, x1, y1, lo_x, hi_x, lo_y, hi_y)) continue;
            auto to_pixel = [](double v, int n) {
                return std::clamp(std::lround(v), 0L, static_cast<long>(n - 1));
            };
            bresenham(image, to_pixel(x0, grid.nx), to_pixel(y0, grid.ny), to_pixel(x1, grid.nx),
                      to_pixel(y1, grid.ny), color);
        }
    }
}

void write_rays_csv(std::ostream& os, const std::vector<RayPolyline>& rays) {
    os << "p,q,branch,index,re_x,im_x,trace\n";
    char buf[128];
    auto row = [&](const RayPolyline& ray, long index, cplx x, double t) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g", x.real(), x.imag(), t);
        os << ray.pq.p() << ',' << ray.pq.q() << ',' << to_string(ray.branch) << ',' << index << ',' << buf << '\n';
    };
    for (const auto& ray : rays) {
        for (std::size_t k = 0; k < ray.points.size(); ++k) row(ray, static_cast<long>(k), ray.points[k], ray.trace_values[k]);
        if (ray.cusp) row(ray, -1, *ray.cusp, -2.0);
    }
}

std::string manifest_json(const GridSpec& grid, const SliceKind& slice, const BowditchParams& params,
                          const VerdictCounts& counts, double wall_ms) {
    nlohmann::ordered_json j;
    j["grid"] = {{"center", {grid.center.real(), grid.center.imag()}},
                 {"width", grid.width},
                 {"height", grid.height},
                 {"nx", grid.nx},
                 {"ny", grid.ny},
                 {"plane", to_string(grid.plane)}};
    j["slice"] = slice.name();
    j["budgets"] = {{"descent", params.max_descent_steps}, {"sink", params.max_sink_edges}};
    j["mu0_heuristic"] = params.enable_mu0_heuristic;
    j["counts"] = {{"in_set", counts.in_set},
                   {"indecisive", counts.indecisive},
                   {"not_in_set", counts.not_in_set},
                   {"not_applicable", counts.not_applicable}};
    j["wall_ms"] = wall_ms;
    return j.dump(2) + "\n";
}

}  // namespace dslice
