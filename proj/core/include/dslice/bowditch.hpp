#pragma once

// Membership in the Bowditch set of Markoff maps.
//
// A query descends the Markoff tree along strictly decreasing arrows until it
// reaches a sink vertex, then runs a depth-first search over the attracting
// subtree T whose edges are selected by the H_mu bound. A finite T certifies
// membership. Everything the search cannot settle within budget is reported as
// Indecisive; NotInSet is only ever reported together with a certificate.

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "dslice/farey.hpp"
#include "dslice/tracetree.hpp"

namespace dslice {

using Triple = std::array<cplx, 3>;

struct BowditchParams {
    long max_descent_steps = 20000;
    long max_sink_edges = 50000;
    double tol_real_segment = 1e-12;
    bool enable_mu0_heuristic = true;

    /// Throws std::invalid_argument unless budgets >= 1 and tol >= 0.
    void validate() const;
};

enum class VerdictKind { InSet, Indecisive, NotInSet, NotApplicable };
enum class SearchPhase { Descent, Exploration };
enum class Certificate { None, ExceptionalValue, Mu0Heuristic };

struct Verdict {
    VerdictKind kind = VerdictKind::Indecisive;
    long sink_vertices = 0;  // InSet only
    long sink_edges = 0;     // InSet only
    SearchPhase phase = SearchPhase::Descent;   // Indecisive only
    Certificate certificate = Certificate::None;  // NotInSet only
    /// Region carrying the certificate; empty if its label overflowed 64 bits.
    std::optional<Rational> witness;

    static Verdict in_set(long vertices, long edges);
    static Verdict indecisive(SearchPhase phase);
    static Verdict not_in_set(Certificate why, std::optional<Rational> where);
    static Verdict not_applicable();

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string to_string(VerdictKind kind);
std::string to_string(const Verdict& v);

/// E = [-2, 2] ∪ {±sqrt(mu)}, thickened by tol.
bool in_exceptional_set(cplx x, cplx mu, double tol = 1e-12);

/// The edge bound H_mu(x): +infinity on E, otherwise
/// max{2, sqrt|(x^2 - mu)/(x^2 - 4)| * 2|l|^2 / (|l| - 1)} with x = l + 1/l, |l| > 1.
double h_mu(cplx x, cplx mu, double tol = 1e-12);

/// Whether the edge between regions with values u and v belongs to T.
bool edge_in_T(cplx u, cplx v, cplx mu, double tol = 1e-12);

struct DescentResult {
    std::optional<TreeVertex<cplx>> sink;  // empty when the step budget ran out
    long steps = 0;
    /// False if a region label overflowed 64 bits on the way; the sink's
    /// values are still exact but its regions are then meaningless.
    bool labels_valid = true;
};

/// Follows the steepest strictly decreasing arrow until none is left.
DescentResult descend(const TreeVertex<cplx>& root, const BowditchParams& params);

/// One explored edge of T, given by its two adjacent regions.
struct SinkEdge {
    Rational first;
    Rational second;
    cplx first_value;
    cplx second_value;
};

/// Optional trace of a successful search, for inspection and tests.
struct SinkRegion {
    TreeVertex<cplx> start;
    std::vector<SinkEdge> edges;
    bool labels_valid = true;
};

/// Membership of the Markoff map with root values (phi(0/1), phi(1/0), phi(1/1)).
Verdict membership(const Triple& root, const BowditchParams& params, SinkRegion* record = nullptr);

/// Membership for a root (a, 0, c) whose 1/0 region has value zero. The
/// boundary of that region is identified under the shift by two neighbours,
/// which preserves all moduli; its two quotient edges always lie in T.
Verdict membership_quotient(const Triple& root, const BowditchParams& params,
                            SinkRegion* record = nullptr);

}  // namespace dslice
