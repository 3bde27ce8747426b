#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dslice/bowditch.hpp"
#include "dslice/complex_parse.hpp"
#include "dslice/pleating.hpp"

namespace dslice {

enum class Plane { XPlane, ZetaPlane };

std::string to_string(Plane p);
Plane parse_plane(const std::string& text);

/// Pixel (i, j) samples the centre of its cell; row 0 is the top (largest
/// imaginary part). Windows symmetric about a line map mirror pixels to
/// exactly mirrored samples.
struct GridSpec {
    cplx center{0.0, 0.0};
    double width = 1.0;
    double height = 1.0;
    int nx = 1;
    int ny = 1;
    Plane plane = Plane::XPlane;

    void validate() const;
    [[nodiscard]] cplx sample(int i, int j) const;
    /// Continuous pixel coordinates of z; pixel centres are at integers.
    [[nodiscard]] std::pair<double, double> locate(cplx z) const;
};

class SliceKind {
public:
    enum class Kind { Diagonal, TorusZeta, Riley, Custom };

    static SliceKind diagonal() { return SliceKind(Kind::Diagonal); }
    static SliceKind torus_zeta() { return SliceKind(Kind::TorusZeta); }
    static SliceKind riley() { return SliceKind(Kind::Riley); }
    /// Expressions in the sample variable for the three root values.
    static SliceKind custom(const std::string& a, const std::string& b, const std::string& c);
    /// "diagonal", "torus-zeta", "riley"; custom slices need custom().
    static SliceKind parse(const std::string& name);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] std::string name() const;

    /// Root triple at a sample point of the given plane. In the ζ-plane the
    /// built-in slices are evaluated at x(ζ), except TorusZeta which uses the
    /// exact torus traces (tr A, 0, tr AB); custom expressions see the raw sample.
    [[nodiscard]] Triple triple(cplx sample, Plane plane) const;

private:
    explicit SliceKind(Kind k) : kind_(k) {}
    Kind kind_;
    std::vector<Expression> exprs_;
};

/// Quotient membership when the middle root value is exactly zero, plain membership otherwise.
Verdict classify(const Triple& root, const BowditchParams& params);

struct VerdictMatrix {
    int nx = 0;
    int ny = 0;
    std::vector<Verdict> cells;  // row-major, top row first

    [[nodiscard]] const Verdict& at(int i, int j) const {
        return cells[static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(i)];
    }
};

struct VerdictCounts {
    long in_set = 0;
    long indecisive = 0;
    long not_in_set = 0;
    long not_applicable = 0;
};

VerdictCounts count(const VerdictMatrix& m);

/// One verdict per pixel, computed on `threads` workers (0 = hardware
/// concurrency). The result does not depend on the worker count.
VerdictMatrix scan(const GridSpec& grid, const SliceKind& slice, const BowditchParams& params,
                   unsigned threads = 0);

using Rgb = std::array<std::uint8_t, 3>;

/// InSet: grey clamp(255 - 20 log2(1 + sink_edges), 40, 255); everything else black.
Rgb default_colormap(const Verdict& v);

class Image {
public:
    Image(int width, int height);

    [[nodiscard]] int width() const { return width_; }
    [[nodiscard]] int height() const { return height_; }
    [[nodiscard]] Rgb pixel(int i, int j) const;
    void set_pixel(int i, int j, Rgb c);
    [[nodiscard]] const std::vector<std::uint8_t>& bytes() const { return rgb_; }

    /// Binary PPM: "P6\n<w> <h>\n255\n" then RGB triples, top row first.
    [[nodiscard]] std::string to_ppm() const;
    void write_ppm(const std::string& path) const;

    friend bool operator==(const Image&, const Image&) = default;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> rgb_;
};

Image render(const VerdictMatrix& m, const std::function<Rgb(const Verdict&)>& colormap = default_colormap);

class PlaneMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr Rgb kRayColor{255, 0, 0};

/// Draws each polyline with 1-pixel segments, clipped to the window.
/// Rays live in the x-plane; other grids throw PlaneMismatchError.
void overlay_rays(Image& image, const std::vector<RayPolyline>& rays, const GridSpec& grid, Rgb color = kRayColor);

/// Header p,q,branch,index,re_x,im_x,trace; cusp rows have index -1.
void write_rays_csv(std::ostream& os, const std::vector<RayPolyline>& rays);

/// Run manifest as a JSON document.
std::string manifest_json(const GridSpec& grid, const SliceKind& slice, const BowditchParams& params,
                          const VerdictCounts& counts, double wall_ms);

}  // namespace dslice
