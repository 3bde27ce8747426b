#pragma once

// Trace polynomials f_{p/q} of the curves on the four-coned sphere, and
// pleating rays traced by continuation along f(x) = t, t real, from
// infinity down to the cusp f = -2.

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dslice/farey.hpp"
#include "dslice/poly.hpp"

namespace dslice {

using cplx = std::complex<double>;

/// S-tree label at r from the root (x, 2, 1 - x) on (0/1, 1/0, 1/1).
/// Any r is accepted; non-canonical r give the same polynomial as their class.
IntPoly trace_polynomial(const Rational& r);

struct PolyCheckReport {
    std::vector<std::string> failures;
    [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Degree and top-two-terms law (canonical r only), and the equalities
/// f_r = f_{r+2} = f_{-r} and f_r(x) = f_{r+1}(1 - x).
PolyCheckReport poly_symmetry_checks(const Rational& r);

struct TorusReport {
    cplx f;              // f_{p/q}(x(ζ))
    cplx g_matrix;       // trace of the A/B word
    cplx g_tree;         // Markoff label at p/q from (tr A, 0, tr AB)
    double relation_residual;  // |-f - (g² - 2)|
    double tree_matrix_residual;
    [[nodiscard]] bool ok(double tol_relation = 1e-8, double tol_tree = 1e-9) const {
        return relation_residual <= tol_relation && tree_matrix_residual <= tol_tree;
    }
};

TorusReport torus_consistency(const Rational& r, cplx zeta);

struct RayOptions {
    double r_start = 0.0;  // <= 0: max(10, 2(1 + max |coefficient|))
    int t_samples = 400;
    double newton_tol = 1e-12;
    int newton_max_iter = 50;
    int max_halvings = 8;
    /// Trace values forced into the schedule when they lie inside it.
    std::vector<double> anchors{-10.0};

    void validate() const;
};

enum class Branch { Upper, Lower, Real };

std::string to_string(Branch b);

struct RayPolyline {
    Rational pq;
    Branch branch = Branch::Upper;
    std::vector<cplx> points;
    std::vector<double> trace_values;
    std::optional<cplx> cusp;  // set once f = -2 was reached
    bool stalled = false;
    std::string stall_reason;
};

struct RayPair {
    RayPolyline upper;
    RayPolyline lower;
};

/// Both branches of P_{p/q} for canonical r, 0/1 <= r <= 1/1. The Fuchsian
/// rays 0/1 and 1/1 are real segments, returned twice with Branch::Real.
RayPair trace_ray(const Rational& r, const RayOptions& opts = {});

struct RayBatch {
    std::vector<RayPolyline> rays;  // sorted by (q, p), upper before lower; Fuchsian rays once
    long stalled = 0;
};

/// All canonical p/q with q <= max_q. `threads` = 0 picks hardware concurrency.
RayBatch rays_batch(long max_q, const RayOptions& opts = {}, unsigned threads = 0);

/// A complex function together with its derivative.
using TraceFunction = std::function<std::pair<cplx, cplx>(cplx)>;

/// Continuation of f(x) = t from x0 along a geometric schedule in (-2 - t)
/// ending at t = -2. Exposed for the Riley mode and for tests.
RayPolyline continue_ray(const TraceFunction& f, cplx x0, const Rational& pq, Branch branch,
                         const RayOptions& opts);

/// Riley mode: f(x) = -g(x)² where g is the Markoff label at r from the
/// numeric root (√-x, 0, √x), principal branches.
cplx riley_trace(const Rational& r, cplx x);

/// Riley ray for canonical r. The upper branch is traced in Im x > 0, where the
/// square roots are analytic; the lower branch is its reflection.
RayPair trace_riley_ray(const Rational& r, const RayOptions& opts = {});

/// Realness and monotonicity of a traced polyline, tol on |Im f| relative to max(1, |f|).
bool ray_invariants_hold(const RayPolyline& ray, const std::function<cplx(cplx)>& f, double tol = 1e-8);

}  // namespace dslice
