#include "dslice/representations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace dslice {

namespace {

constexpr cplx I{0.0, 1.0};

double max_abs(std::initializer_list<cplx> xs) {
    double m = 0.0;
    for (cplx x : xs) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

Mat2 Mat2::inverse() const {
    const cplx det_ = det();
    return {d / det_, -b / det_, -c / det_, a / det_};
}

double Mat2::distance(const Mat2& o) const { return max_abs({a - o.a, b - o.b, c - o.c, d - o.d}); }

Mat2 line_matrix(cplx u, cplx u_prime) {
    if (u == u_prime) throw DegenerateLineError("line matrix needs distinct endpoints");
    const cplx s = I / (u - u_prime);
    return s * Mat2{u + u_prime, -2.0 * u * u_prime, 2.0, -(u + u_prime)};
}

cplx zeta_to_x(cplx zeta) {
    const cplx z2 = zeta * zeta;
    return z2 / 4.0 + 9.0 / (4.0 * z2) + 0.5;
}

std::array<cplx, 4> x_to_zetas(cplx x) {
    // ζ² = (2x - 1) ± sqrt((2x - 1)² - 9)
    const cplx m = 2.0 * x - 1.0;
    const cplx disc = std::sqrt(m * m - 9.0);
    const cplx s = std::sqrt(m + disc);
    const cplx t = std::sqrt(m - disc);
    return {s, -s, t, -t};
}

GroupModel build(cplx zeta) {
    if (zeta == cplx(0.0, 0.0)) throw InvalidParameterError("zeta must be nonzero");
    GroupModel g;
    g.zeta = zeta;
    g.P = line_matrix(zeta, -zeta);
    g.Q = line_matrix(I * zeta, -I * zeta);
    g.R = line_matrix(1.0, -3.0);
    g.K0 = g.R * g.Q * g.P;
    // An order-three element of SL(2,C) cubes to +id exactly when its trace is -1.
    if (std::abs(g.K0.trace() - 1.0) < std::abs(g.K0.trace() + 1.0)) g.K0 = -g.K0;
    g.K1 = g.P * g.K0 * g.P.inverse();
    g.K2 = g.Q * g.K0 * g.Q.inverse();
    g.K3 = g.R * g.K0 * g.R.inverse();
    g.X = g.K0 * g.K1;
    g.Y = g.K1 * g.K0;
    g.A = g.R * g.Q;
    g.B = g.P * g.Q;
    g.x = g.X.trace();

    const double sqrt3 = std::numbers::sqrt3;
    g.fuchsian_degenerate = std::abs(std::abs(zeta) - sqrt3) <= 1e-12;
    const cplx ta = g.A.trace();
    g.a_elliptic = std::abs(ta.imag()) <= 1e-12 && std::abs(ta.real()) <= 2.0 + 1e-12;
    return g;
}

bool IdentityReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

std::vector<std::string> IdentityReport::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks) {
        if (!c.passed) out.push_back(c.name);
    }
    return out;
}

std::string IdentityReport::str() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.passed ? "pass  " : "FAIL  ") << c.name << "  (residual " << c.residual << ")\n";
    }
    os << (all_passed() ? "all identities pass" : "some identities FAILED") << "\n";
    return os.str();
}

IdentityReport verify_identities(const GroupModel& g, double tol) {
    IdentityReport report;
    auto check = [&](std::string name, double residual) {
        report.checks.push_back({std::move(name), residual, residual <= tol});
    };
    const Mat2 id = Mat2::identity();
    const Mat2 minus_id = -id;
    const Mat2 XY = g.X * g.Y;
    const cplx zeta = g.zeta;

    double det_err = 0.0;
    for (const Mat2* m : {&g.P, &g.Q, &g.R, &g.K0, &g.K1, &g.K2, &g.K3, &g.X, &g.Y, &g.A, &g.B}) {
        det_err = std::max(det_err, std::abs(m->det() - 1.0));
    }
    check("det = 1 for all generators", det_err);
    check("P^2 = -id", (g.P * g.P).distance(minus_id));
    check("Q^2 = -id", (g.Q * g.Q).distance(minus_id));
    check("R^2 = -id", (g.R * g.R).distance(minus_id));
    check("PQ = -QP", (g.P * g.Q).distance(-(g.Q * g.P)));
    check("K0^3 = id", (g.K0 * g.K0 * g.K0).distance(id));
    check("K0 K3 K1 K2 = id", (g.K0 * g.K3 * g.K1 * g.K2).distance(id));
    check("K0^-1 X K0 = Y", (g.K0.inverse() * g.X * g.K0).distance(g.Y));
    check("K0^-1 Y K0 = (XY)^-1", (g.K0.inverse() * g.Y * g.K0).distance(XY.inverse()));
    check("tr X = x(zeta)", std::abs(g.X.trace() - zeta_to_x(zeta)));
    check("tr Y = x(zeta)", std::abs(g.Y.trace() - zeta_to_x(zeta)));
    check("tr XY = x(zeta)", std::abs(XY.trace() - zeta_to_x(zeta)));
    check("B^2 = -id", (g.B * g.B).distance(minus_id));
    check("A^2 = -K0 K1", (g.A * g.A).distance(-(g.K0 * g.K1)));
    check("AB = RP", (g.A * g.B).distance(g.R * g.P));
    const Mat2 commutator = g.A * g.B * g.A.inverse() * g.B.inverse();
    check("[A,B] = -K0^2", commutator.distance(-(g.K0 * g.K0)));
    check("tr [A,B] = 1", std::abs(commutator.trace() - 1.0));
    check("tr A = 3i/(2 zeta) - i zeta/2", std::abs(g.A.trace() - (3.0 * I / (2.0 * zeta) - I * zeta / 2.0)));
    check("tr B = 0", std::abs(g.B.trace()));
    check("tr AB = -zeta/2 - 3/(2 zeta)", std::abs((g.A * g.B).trace() - (-zeta / 2.0 - 3.0 / (2.0 * zeta))));
    return report;
}

cplx matrix_trace_of_word(const Rational& r, const GroupModel& model) {
    Mat2 product = Mat2::identity();
    for (char letter : primitive_word(r)) product = product * (letter == 'a' ? model.A : model.B);
    return product.trace();
}

std::array<cplx, 3> torus_triple(cplx zeta) {
    return {3.0 * I / (2.0 * zeta) - I * zeta / 2.0, cplx(0.0, 0.0), -zeta / 2.0 - 3.0 / (2.0 * zeta)};
}

bool ellipse_exterior(cplx x) {
    const double u = x.real();
    const double v = x.imag();
    return (2.0 * u - 1.0) * (2.0 * u - 1.0) / 25.0 + v * v / 4.0 > 1.0;
}

cplx axis_distance(cplx zeta) {
    return 2.0 * std::log(std::numbers::sqrt3 / zeta) - I * std::numbers::pi;
}

bool cosh_sigma_check(const GroupModel& model, double tol) {
    const cplx sigma = axis_distance(model.zeta);
    return std::abs(std::cosh(sigma) + (2.0 * model.x - 1.0) / 3.0) <= tol;
}

SymmetryImages symmetry_action(cplx zeta) {
    if (zeta == cplx(0.0, 0.0)) throw InvalidParameterError("zeta must be nonzero");
    SymmetryImages s;
    s.negated = -zeta;
    s.inverted = -3.0 / zeta;
    s.rotated = I * zeta;
    s.triple = torus_triple(zeta);
    s.rotated_triple = torus_triple(s.rotated);
    s.expected_rotated_triple = {-s.triple[2], -s.triple[1], s.triple[0]};
    return s;
}

}  // namespace dslice
