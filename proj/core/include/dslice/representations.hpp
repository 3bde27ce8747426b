#pragma once

// Explicit SL(2,C) models of the groups attached to the diagonal slice, all
// generated from three pi-rotations P, Q, R about the lines [ζ, -ζ], [iζ, -iζ]
// and [1, -3]:
//
//   K0 = RQP (normalised so K0^3 = +id), K1 = P K0 P^-1, K2 = Q K0 Q^-1, K3 = R K0 R^-1
//   X = K0 K1, Y = K1 K0                (handlebody generators, x = tr X)
//   A = RQ, B = PQ                      (singular torus generators)
//
// and the parameter map x = ζ²/4 + 9/(4ζ²) + 1/2.

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "dslice/farey.hpp"

namespace dslice {

using cplx = std::complex<double>;

class DegenerateLineError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Mat2 {
    cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};

    static Mat2 identity() { return {}; }

    [[nodiscard]] cplx trace() const { return a + d; }
    [[nodiscard]] cplx det() const { return a * d - b * c; }
    /// Adjugate divided by the determinant.
    [[nodiscard]] Mat2 inverse() const;
    /// Max-entry distance.
    [[nodiscard]] double distance(const Mat2& other) const;

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator*(cplx s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
    friend Mat2 operator-(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }
};

/// Order-two rotation about the oriented line [u, u'] (finite endpoints):
/// (i/(u - u')) [[u + u', -2uu'], [2, -(u + u')]]. Squares to -id.
Mat2 line_matrix(cplx u, cplx u_prime);

cplx zeta_to_x(cplx zeta);

/// The four roots of ζ⁴ - (4x - 2)ζ² + 9 = 0, as {s, -s, t, -t}.
std::array<cplx, 4> x_to_zetas(cplx x);

struct GroupModel {
    cplx zeta;
    cplx x;
    Mat2 P, Q, R;
    Mat2 K0, K1, K2, K3;
    Mat2 X, Y;
    Mat2 A, B;

    /// |ζ| = √3: the Fuchsian branch points, where P and Q axes meet K0's.
    bool fuchsian_degenerate = false;
    /// tr A ∈ [-2, 2], so A is elliptic or parabolic rather than loxodromic.
    bool a_elliptic = false;
};

/// Throws InvalidParameterError for ζ = 0.
GroupModel build(cplx zeta);

struct IdentityCheck {
    std::string name;
    double residual;
    bool passed;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] std::vector<std::string> failures() const;
    [[nodiscard]] std::string str() const;
};

IdentityReport verify_identities(const GroupModel& model, double tol);

/// tr of the product of A (for each 'a') and B (for each 'b') along the
/// primitive word of r, 0/1 <= r <= 1/0.
cplx matrix_trace_of_word(const Rational& r, const GroupModel& model);

/// Trace triple (tr A, tr B, tr AB) of the torus generators.
std::array<cplx, 3> torus_triple(cplx zeta);

/// Strictly outside the ellipse (2u - 1)²/25 + v²/4 = 1, x = u + iv.
bool ellipse_exterior(cplx x);

/// Complex distance between the oriented axes of K0 and K1:
/// σ = 2 log(√3/ζ) - iπ (principal log).
cplx axis_distance(cplx zeta);

/// |cosh σ + (2x - 1)/3| <= tol.
bool cosh_sigma_check(const GroupModel& model, double tol);

struct SymmetryImages {
    cplx negated;       // -ζ, same x
    cplx inverted;      // -3/ζ, same x
    cplx rotated;       // iζ, x - 1/2 ↦ -(x - 1/2)
    std::array<cplx, 3> triple;          // (tr A, tr B, tr AB) at ζ
    std::array<cplx, 3> rotated_triple;  // same at iζ
    /// (-tr AB, -tr B, tr A) at ζ; equals rotated_triple.
    std::array<cplx, 3> expected_rotated_triple;
};

SymmetryImages symmetry_action(cplx zeta);

}  // namespace dslice
