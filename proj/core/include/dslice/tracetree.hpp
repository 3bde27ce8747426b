#pragma once

// Trivalent trace trees. A vertex is three mutually adjacent complementary
// regions, each carrying a Farey label and a value. Crossing the edge opposite
// a region replaces that region by its Farey reflection and updates the value:
//
//   Markoff move:  w' = u v - w        (invariant u^2 + v^2 + w^2 - u v w)
//   S-tree move:   w' = 2 - u v - w    (invariant u^2 + v^2 + w^2 + u v w - 2(u + v + w))
//
// Scalars are std::complex<double> for numeric work or IntPoly for exact
// trace polynomials.

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dslice/farey.hpp"
#include "dslice/poly.hpp"

namespace dslice {

using cplx = std::complex<double>;

enum class MoveRule { Markoff, STree };

template <class Scalar>
struct TreeVertex {
    std::array<Rational, 3> regions;
    std::array<Scalar, 3> values;
};

/// Root vertex on the base triangle (0/1, 1/0, 1/1).
template <class Scalar>
TreeVertex<Scalar> base_vertex(Scalar at_zero, Scalar at_infinity, Scalar at_one) {
    return TreeVertex<Scalar>{{Rational(0, 1), Rational::infinity(), Rational(1, 1)},
                              {std::move(at_zero), std::move(at_infinity), std::move(at_one)}};
}

template <class Scalar>
Scalar replacement_value(const Scalar& u, const Scalar& v, const Scalar& w, MoveRule rule) {
    if (rule == MoveRule::Markoff) return u * v - w;
    return Scalar(2) - u * v - w;
}

/// The label across the edge shared by `keep_a` and `keep_b`, opposite `old`.
/// As primitive vectors the two candidates are a + b and a - b; `old` is one of them.
inline Rational reflect_label(const Rational& keep_a, const Rational& keep_b, const Rational& old) {
    const Rational sum(keep_a.p() + keep_b.p(), keep_a.q() + keep_b.q());
    const Rational diff(keep_a.p() - keep_b.p(), keep_a.q() - keep_b.q());
    if (old == sum) return diff;
    if (old == diff) return sum;
    throw std::logic_error("labels " + keep_a.str() + ", " + keep_b.str() + ", " + old.str() +
                           " do not form a Farey triangle");
}

/// Crosses the edge opposite region `edge`; the other two regions are kept.
template <class Scalar>
TreeVertex<Scalar> cross_edge(const TreeVertex<Scalar>& v, std::size_t edge, MoveRule rule) {
    if (edge > 2) throw std::out_of_range("edge index must be 0, 1 or 2");
    const std::size_t i = (edge + 1) % 3;
    const std::size_t j = (edge + 2) % 3;
    TreeVertex<Scalar> out = v;
    out.regions[edge] = reflect_label(v.regions[i], v.regions[j], v.regions[edge]);
    out.values[edge] = replacement_value(v.values[i], v.values[j], v.values[edge], rule);
    return out;
}

inline cplx mu_invariant(cplx u, cplx v, cplx w) { return u * u + v * v + w * w - u * v * w; }

/// u^2 + v^2 + w^2 + uvw - 2(u + v + w) + 1; zero on every vertex of the diagonal S-tree.
inline cplx stree_residual(cplx u, cplx v, cplx w) {
    return u * u + v * v + w * w + u * v * w - 2.0 * (u + v + w) + 1.0;
}

/// Value at region r, walking the Stern-Brocot path from a root on the base
/// triangle. Negative r are reached through the -1/1 side of the root.
template <class Scalar>
Scalar label_at(const Rational& r, const TreeVertex<Scalar>& root, MoveRule rule) {
    std::size_t lo = 3, hi = 3, nw = 3;
    for (std::size_t k = 0; k < 3; ++k) {
        const Rational& g = root.regions[k];
        if (g == r) return root.values[k];
        if (g == Rational(0, 1)) lo = k;
        else if (g.is_infinite()) hi = k;
        else if (g == Rational(1, 1)) nw = k;
    }
    if (lo == 3 || hi == 3 || nw == 3) {
        throw std::invalid_argument("label_at needs a root on the base triangle (0/1, 1/0, 1/1)");
    }
    const FareyPath path = farey_path(r);
    TreeVertex<Scalar> v = root;
    if (path.mirrored) v = cross_edge(v, nw, rule);  // region nw becomes -1/1
    for (Turn t : path.turns) {
        if (t == Turn::L) {
            v = cross_edge(v, hi, rule);
            std::swap(hi, nw);
        } else {
            v = cross_edge(v, lo, rule);
            std::swap(lo, nw);
        }
    }
    return v.values[nw];
}

/// Values of the regions V_i adjacent to a region U, in order round its
/// boundary, from two consecutive seeds V_0, V_1. Indices run over all of Z.
///   Markoff: v_{i+1} = phi_U v_i - v_{i-1}
///   S-tree:  v_{i+1} = 2 - phi_U v_i - v_{i-1}
template <class Scalar>
class BoundaryValues {
public:
    BoundaryValues(Scalar phi_u, Scalar v0, Scalar v1, MoveRule rule)
        : phi_u_(std::move(phi_u)), rule_(rule), forward_{std::move(v0), std::move(v1)} {}

    /// v_i for any integer i; extends the cached sequence on demand.
    Scalar operator[](long i) {
        if (i >= 0) {
            while (static_cast<long>(forward_.size()) <= i) {
                const std::size_t n = forward_.size();
                forward_.push_back(step(forward_[n - 1], forward_[n - 2]));
            }
            return forward_[static_cast<std::size_t>(i)];
        }
        const auto want = static_cast<std::size_t>(-i);  // backward_[k-1] holds v_{-k}
        while (backward_.size() < want) {
            const Scalar& next = backward_.empty() ? forward_[0] : backward_.back();
            const Scalar& after = backward_.empty() ? forward_[1]
                                  : backward_.size() == 1 ? forward_[0]
                                                          : backward_[backward_.size() - 2];
            backward_.push_back(step(next, after));
        }
        return backward_[want - 1];
    }

private:
    Scalar step(const Scalar& current, const Scalar& previous) const {
        if (rule_ == MoveRule::Markoff) return phi_u_ * current - previous;
        return Scalar(2) - phi_u_ * current - previous;
    }

    Scalar phi_u_;
    MoveRule rule_;
    std::vector<Scalar> forward_;
    std::vector<Scalar> backward_;
};

}  // namespace dslice
