#include "dslice/pleating.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "dslice/representations.hpp"
#include "dslice/tracetree.hpp"

namespace dslice {

IntPoly trace_polynomial(const Rational& r) {
    const IntPoly x = IntPoly::x();
    const auto root = base_vertex(x, IntPoly(2), IntPoly(1) - x);
    return label_at(r, root, MoveRule::STree);
}

PolyCheckReport poly_symmetry_checks(const Rational& r) {
    if (r.is_infinite()) throw std::invalid_argument("poly_symmetry_checks needs q >= 1");
    PolyCheckReport report;
    const std::int64_t p = r.p();
    const std::int64_t q = r.q();
    const IntPoly f = trace_polynomial(r);

    if (p >= 0 && p <= q) {
        if (f.degree() != q) report.failures.push_back("degree of f_" + r.str() + " is not " + std::to_string(q));
        const std::int64_t sign = ((p - q - 1) % 2 == 0) ? 1 : -1;
        if (f.coefficient(static_cast<int>(q)) != sign) {
            report.failures.push_back("leading coefficient of f_" + r.str());
        }
        if (f.coefficient(static_cast<int>(q) - 1) != -sign * p) {
            report.failures.push_back("second coefficient of f_" + r.str());
        }
    }
    if (trace_polynomial(Rational(p + 2 * q, q)) != f) report.failures.push_back("f_r != f_{r+2} at " + r.str());
    if (trace_polynomial(r.negated()) != f) report.failures.push_back("f_r != f_{-r} at " + r.str());
    if (trace_polynomial(Rational(p + q, q)).reflected() != f) {
        report.failures.push_back("f_r(x) != f_{r+1}(1-x) at " + r.str());
    }
    return report;
}

TorusReport torus_consistency(const Rational& r, cplx zeta) {
    const GroupModel model = build(zeta);
    TorusReport rep;
    rep.f = trace_polynomial(r).evaluate(zeta_to_x(zeta));
    rep.g_matrix = matrix_trace_of_word(r, model);
    const auto t = torus_triple(zeta);
    rep.g_tree = label_at(r, base_vertex(t[0], t[1], t[2]), MoveRule::Markoff);
    rep.relation_residual = std::abs(-rep.f - (rep.g_matrix * rep.g_matrix - 2.0));
    rep.tree_matrix_residual = std::abs(rep.g_tree - rep.g_matrix);
    return rep;
}

void RayOptions::validate() const {
    if (t_samples < 2) throw std::invalid_argument("t_samples must be at least 2");
    if (!(newton_tol > 0.0)) throw std::invalid_argument("newton_tol must be positive");
    if (newton_max_iter < 1) throw std::invalid_argument("newton_max_iter must be at least 1");
    if (max_halvings < 0) throw std::invalid_argument("max_halvings must be nonnegative");
}

std::string to_string(Branch b) {
    switch (b) {
        case Branch::Upper: return "upper";
        case Branch::Lower: return "lower";
        case Branch::Real: return "real";
    }
    return "?";
}

namespace {

constexpr double kMinDerivative = 1e-12;
constexpr int kStagnantIterations = 3;
constexpr double kStagnantStep = 1e-9;

enum class NewtonStatus { Converged, SmallDerivative, NoConvergence };

NewtonStatus newton(const TraceFunction& f, cplx& x, double t, const RayOptions& opts) {
    const double tol = opts.newton_tol * std::max(1.0, std::abs(t));
    double previous = std::numeric_limits<double>::infinity();
    double last_step = std::numeric_limits<double>::infinity();
    int stagnant = 0;
    for (int it = 0; it < opts.newton_max_iter; ++it) {
        const auto [fx, dfx] = f(x);
        const cplx residual = fx - t;
        const double r = std::abs(residual);
        if (r <= tol) return NewtonStatus::Converged;
        // High-degree traces have a rounding floor above tol near the cusp;
        // accept once the residual stops shrinking and the steps are tiny.
        stagnant = r > 0.5 * previous ? stagnant + 1 : 0;
        if (stagnant >= kStagnantIterations && last_step <= kStagnantStep * std::max(1.0, std::abs(x))) {
            return NewtonStatus::Converged;
        }
        previous = r;
        if (std::abs(dfx) < kMinDerivative) return NewtonStatus::SmallDerivative;
        const cplx step = residual / dfx;
        x -= step;
        last_step = std::abs(step);
    }
    return std::abs(f(x).first - t) <= tol ? NewtonStatus::Converged : NewtonStatus::NoConvergence;
}

// Reach target t from (x, t_prev) with a tangent predictor, bisecting the step
// in t when Newton fails.
NewtonStatus advance(const TraceFunction& f, cplx& x, double t_prev, double t, int halvings_left,
                     const RayOptions& opts) {
    const cplx slope = f(x).second;
    if (std::abs(slope) < kMinDerivative) return NewtonStatus::SmallDerivative;
    cplx trial = x + (t - t_prev) / slope;
    NewtonStatus status = newton(f, trial, t, opts);
    if (status == NewtonStatus::Converged) {
        x = trial;
        return status;
    }
    if (halvings_left == 0) return status;
    const double mid = 0.5 * (t_prev + t);
    cplx y = x;
    status = advance(f, y, t_prev, mid, halvings_left - 1, opts);
    if (status != NewtonStatus::Converged) return status;
    status = advance(f, y, mid, t, halvings_left - 1, opts);
    if (status == NewtonStatus::Converged) x = y;
    return status;
}

std::vector<double> schedule(double t0, const RayOptions& opts) {
    // Geometric in s = -2 - t, from s0 down to s_end, then the cusp s = 0.
    const double s0 = -2.0 - t0;
    const double s_end = std::min(1e-6, s0);
    const int n = opts.t_samples - 1;
    std::vector<double> s;
    s.reserve(static_cast<std::size_t>(n) + opts.anchors.size());
    for (int k = 0; k < n; ++k) {
        const double frac = n == 1 ? 0.0 : static_cast<double>(k) / (n - 1);
        s.push_back(k == 0 ? s0 : s0 * std::pow(s_end / s0, frac));
    }
    for (double a : opts.anchors) {
        const double sa = -2.0 - a;
        if (sa < s0 && sa > 0.0) s.push_back(sa);
    }
    std::sort(s.begin(), s.end(), std::greater<>());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<double> t;
    t.reserve(s.size() + 1);
    for (double v : s) t.push_back(-2.0 - v);
    t.push_back(-2.0);
    return t;
}

double default_r_start(const IntPoly& f) {
    return std::max(10.0, 2.0 * (1.0 + static_cast<double>(f.max_abs_coefficient())));
}

TraceFunction poly_function(const IntPoly& f) {
    return [f, df = f.derivative()](cplx x) { return std::pair{f.evaluate(x), df.evaluate(x)}; };
}

}  // namespace

RayPolyline continue_ray(const TraceFunction& f, cplx x0, const Rational& pq, Branch branch,
                         const RayOptions& opts) {
    opts.validate();
    RayPolyline ray;
    ray.pq = pq;
    ray.branch = branch;
    auto stall = [&](std::string why) {
        ray.stalled = true;
        ray.stall_reason = std::move(why);
        return ray;
    };

    const double t0 = f(x0).first.real();
    if (!(t0 < -2.0)) return stall("start value " + std::to_string(t0) + " is not below -2");
    cplx x = x0;
    if (newton(f, x, t0, opts) != NewtonStatus::Converged) return stall("Newton failed at the start point");

    const std::vector<double> targets = schedule(t0, opts);
    ray.points.push_back(x);
    ray.trace_values.push_back(t0);
    double t_prev = t0;
    for (std::size_t k = 1; k < targets.size(); ++k) {
        const double t = targets[k];
        const NewtonStatus status = advance(f, x, t_prev, t, opts.max_halvings, opts);
        if (status == NewtonStatus::SmallDerivative) return stall("|f'| below threshold near t = " + std::to_string(t));
        if (status == NewtonStatus::NoConvergence) return stall("no convergence near t = " + std::to_string(t));
        ray.points.push_back(x);
        ray.trace_values.push_back(t);
        t_prev = t;
    }
    ray.cusp = x;
    return ray;
}

RayPair trace_ray(const Rational& r, const RayOptions& opts) {
    opts.validate();
    if (r.is_infinite() || r.p() < 0 || r.p() > r.q()) {
        throw std::invalid_argument("trace_ray needs canonical p/q with 0 <= p <= q, got " + r.str());
    }
    const IntPoly f = trace_polynomial(r);
    const double radius = opts.r_start > 0.0 ? opts.r_start : default_r_start(f);
    const TraceFunction fn = poly_function(f);

    if (r == Rational(0, 1) || r == Rational(1, 1)) {
        // f = x on (-inf, -2] and f = 1 - x on [3, inf).
        const cplx x0 = r.p() == 0 ? cplx(-radius, 0.0) : cplx(1.0 + radius, 0.0);
        RayPolyline seg = continue_ray(fn, x0, r, Branch::Real, opts);
        return {seg, seg};
    }
    const double theta = std::numbers::pi * static_cast<double>(r.q() - r.p()) / static_cast<double>(r.q());
    const cplx x0 = std::polar(radius, theta);
    return {continue_ray(fn, x0, r, Branch::Upper, opts), continue_ray(fn, std::conj(x0), r, Branch::Lower, opts)};
}

RayBatch rays_batch(long max_q, const RayOptions& opts, unsigned threads) {
    if (max_q < 1) throw std::invalid_argument("max_q must be at least 1");
    opts.validate();
    const std::vector<Rational> classes = canonical_classes_up_to(max_q);
    std::vector<RayPair> results(classes.size());

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(classes.size()));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t k = w; k < classes.size(); k += threads) results[k] = trace_ray(classes[k], opts);
        });
    }
    for (auto& th : pool) th.join();

    RayBatch batch;
    for (auto& pair : results) {
        const bool fuchsian = pair.upper.branch == Branch::Real;
        batch.stalled += pair.upper.stalled ? 1 : 0;
        batch.rays.push_back(std::move(pair.upper));
        if (fuchsian) continue;
        batch.stalled += pair.lower.stalled ? 1 : 0;
        batch.rays.push_back(std::move(pair.lower));
    }
    return batch;
}

cplx riley_trace(const Rational& r, cplx x) {
    const auto root = base_vertex(std::sqrt(-x), cplx(0.0, 0.0), std::sqrt(x));
    const cplx g = label_at(r, root, MoveRule::Markoff);
    return -g * g;
}

RayPair trace_riley_ray(const Rational& r, const RayOptions& opts) {
    opts.validate();
    if (r.is_infinite() || r.p() < 0 || r.p() > r.q()) {
        throw std::invalid_argument("trace_riley_ray needs canonical p/q with 0 <= p <= q, got " + r.str());
    }
    const TraceFunction fn = [r](cplx x) {
        const double h = 1e-6 * std::max(1.0, std::abs(x));
        const cplx d = (riley_trace(r, x + h) - riley_trace(r, x - h)) / (2.0 * h);
        return std::pair{riley_trace(r, x), d};
    };
    const double radius = opts.r_start > 0.0 ? opts.r_start : 10.0 * static_cast<double>(r.q());

    if (r == Rational(0, 1)) {
        // f = x along the negative real axis, where √-x is real.
        RayPolyline seg = continue_ray(fn, cplx(-radius, 0.0), r, Branch::Real, opts);
        return {seg, seg};
    }

    // Start where Im f changes sign on the upper semicircle, nearest the
    // diagonal-slice asymptotic angle.
    const double expected = std::numbers::pi * static_cast<double>(r.q() - r.p()) / static_cast<double>(r.q());
    constexpr int kScan = 4000;
    std::optional<cplx> start;
    double best = 1e300;
    cplx prev_x = std::polar(radius, 0.0);
    cplx prev_f = riley_trace(r, prev_x + cplx(0.0, 1e-9));
    for (int k = 1; k <= kScan; ++k) {
        const double theta = std::numbers::pi * k / kScan;
        const cplx x = std::polar(radius, theta);
        const cplx fx = riley_trace(r, x);
        if ((prev_f.imag() <= 0.0) != (fx.imag() <= 0.0) && fx.real() < -2.0 &&
            std::abs(theta - expected) < best) {
            best = std::abs(theta - expected);
            start = x;
        }
        prev_x = x;
        prev_f = fx;
    }
    RayPair pair;
    if (!start) {
        pair.upper.pq = r;
        pair.upper.stalled = true;
        pair.upper.stall_reason = "no real-trace crossing found on the starting circle";
    } else {
        pair.upper = continue_ray(fn, *start, r, Branch::Upper, opts);
    }
    pair.lower = pair.upper;
    pair.lower.branch = Branch::Lower;
    for (auto& p : pair.lower.points) p = std::conj(p);
    if (pair.lower.cusp) pair.lower.cusp = std::conj(*pair.lower.cusp);
    return pair;
}

bool ray_invariants_hold(const RayPolyline& ray, const std::function<cplx(cplx)>& f, double tol) {
    if (ray.points.size() != ray.trace_values.size()) return false;
    for (std::size_t k = 0; k < ray.points.size(); ++k) {
        const cplx fx = f(ray.points[k]);
        const double scale = std::max(1.0, std::abs(fx));
        if (std::abs(fx.imag()) > tol * scale) return false;
        if (fx.real() > -2.0 + tol) return false;
        if (std::abs(fx.real() - ray.trace_values[k]) > tol * scale) return false;
        if (k > 0 && !(ray.trace_values[k] > ray.trace_values[k - 1])) return false;
    }
    return true;
}

}  // namespace dslice
