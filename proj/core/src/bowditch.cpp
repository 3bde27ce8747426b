#include "dslice/bowditch.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dslice {

void BowditchParams::validate() const {
    if (max_descent_steps < 1 || max_sink_edges < 1) {
        throw std::invalid_argument("Bowditch budgets must be at least 1");
    }
    if (!(tol_real_segment >= 0.0)) {
        throw std::invalid_argument("tol_real_segment must be nonnegative");
    }
}

Verdict Verdict::in_set(long vertices, long edges) {
    Verdict v;
    v.kind = VerdictKind::InSet;
    v.sink_vertices = vertices;
    v.sink_edges = edges;
    return v;
}

Verdict Verdict::indecisive(SearchPhase phase) {
    Verdict v;
    v.kind = VerdictKind::Indecisive;
    v.phase = phase;
    return v;
}

Verdict Verdict::not_in_set(Certificate why, std::optional<Rational> where) {
    Verdict v;
    v.kind = VerdictKind::NotInSet;
    v.certificate = why;
    v.witness = where;
    return v;
}

Verdict Verdict::not_applicable() {
    Verdict v;
    v.kind = VerdictKind::NotApplicable;
    return v;
}

std::string to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::InSet: return "InSet";
        case VerdictKind::Indecisive: return "Indecisive";
        case VerdictKind::NotInSet: return "NotInSet";
        case VerdictKind::NotApplicable: return "NotApplicable";
    }
    return "?";
}

std::string to_string(const Verdict& v) {
    switch (v.kind) {
        case VerdictKind::InSet:
            return "InSet(" + std::to_string(v.sink_vertices) + " vertices, " +
                   std::to_string(v.sink_edges) + " edges)";
        case VerdictKind::Indecisive:
            return v.phase == SearchPhase::Descent ? "Indecisive(descent)" : "Indecisive(exploration)";
        case VerdictKind::NotInSet: {
            std::string why = v.certificate == Certificate::Mu0Heuristic ? "mu0" : "exceptional";
            return "NotInSet(" + why + " at " + (v.witness ? v.witness->str() : std::string("?")) + ")";
        }
        case VerdictKind::NotApplicable: return "NotApplicable";
    }
    return "?";
}

namespace {

// E and H_mu for a fixed mu, with sqrt(mu) computed once.
struct Bounds {
    cplx mu;
    cplx root;
    double tol;

    Bounds(cplx mu_, double tol_) : mu(mu_), root(std::sqrt(mu_)), tol(tol_) {}

    [[nodiscard]] bool in_E(cplx x) const {
        if (std::abs(x.imag()) <= tol && x.real() >= -2.0 - tol && x.real() <= 2.0 + tol) return true;
        return std::min(std::norm(x - root), std::norm(x + root)) <= tol * tol;
    }

    [[nodiscard]] double h(cplx x) const {
        if (in_E(x)) return std::numeric_limits<double>::infinity();
        const cplx x2 = x * x;
        // The roots of l^2 - x l + 1 are l and 1/l.
        const double a = std::sqrt(std::norm(0.5 * (x + std::sqrt(x2 - 4.0))));
        const double lam = std::max(a, 1.0 / a);
        const double ratio = std::sqrt(std::sqrt(std::norm(x2 - mu) / std::norm(x2 - 4.0)));
        return std::max(2.0, ratio * 2.0 * lam * lam / (lam - 1.0));
    }

    [[nodiscard]] bool edge(cplx u, cplx v) const {
        // Squared moduli avoid hypot in the hot loop.
        const double nu = std::norm(u);
        const double nv = std::norm(v);
        if (nu <= 4.0) {
            const double hu = h(u);
            if (nv <= hu * hu) return true;
        }
        if (nv <= 4.0) {
            const double hv = h(v);
            if (nu <= hv * hv) return true;
        }
        return false;
    }
};

}  // namespace

bool in_exceptional_set(cplx x, cplx mu, double tol) { return Bounds(mu, tol).in_E(x); }

double h_mu(cplx x, cplx mu, double tol) { return Bounds(mu, tol).h(x); }

bool edge_in_T(cplx u, cplx v, cplx mu, double tol) { return Bounds(mu, tol).edge(u, v); }

namespace {

// Value triple plus region labels as primitive integer vectors (p, q), q >= 0,
// infinity as (1, 0). Labels stop being tracked once they would overflow.
struct Node {
    std::array<cplx, 3> val;
    std::array<std::int64_t, 3> p{};
    std::array<std::int64_t, 3> q{};
    bool labelled = true;
};

Node to_node(const TreeVertex<cplx>& v) {
    Node n;
    n.val = v.values;
    for (std::size_t k = 0; k < 3; ++k) {
        n.p[k] = v.regions[k].p();
        n.q[k] = v.regions[k].q();
    }
    return n;
}

TreeVertex<cplx> to_vertex(const Node& n) {
    TreeVertex<cplx> v;
    v.values = n.val;
    for (std::size_t k = 0; k < 3; ++k) v.regions[k] = Rational(n.p[k], n.q[k]);
    return v;
}

std::optional<Rational> label_of(const Node& n, std::size_t k) {
    if (!n.labelled) return std::nullopt;
    return Rational(n.p[k], n.q[k]);
}

void normalize(std::int64_t& p, std::int64_t& q) {
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
}

Node move(const Node& n, std::size_t e) {
    const std::size_t i = (e + 1) % 3;
    const std::size_t j = (e + 2) % 3;
    Node out = n;
    out.val[e] = n.val[i] * n.val[j] - n.val[e];
    if (!n.labelled) return out;
    std::int64_t sp, sq, dp, dq;
    if (__builtin_add_overflow(n.p[i], n.p[j], &sp) || __builtin_add_overflow(n.q[i], n.q[j], &sq) ||
        __builtin_sub_overflow(n.p[i], n.p[j], &dp) || __builtin_sub_overflow(n.q[i], n.q[j], &dq)) {
        out.labelled = false;
        return out;
    }
    normalize(sp, sq);
    normalize(dp, dq);
    if (sp == n.p[e] && sq == n.q[e]) {
        out.p[e] = dp;
        out.q[e] = dq;
    } else {
        out.p[e] = sp;
        out.q[e] = sq;
    }
    return out;
}

// Index of the steepest strictly decreasing move, or -1 at a sink.
int steepest_move(const Node& n) {
    int best = -1;
    double best_drop = 0.0;
    for (std::size_t e = 0; e < 3; ++e) {
        const cplx next = n.val[(e + 1) % 3] * n.val[(e + 2) % 3] - n.val[e];
        const double drop = std::abs(n.val[e]) - std::abs(next);
        if (drop > best_drop) {
            best_drop = drop;
            best = static_cast<int>(e);
        }
    }
    return best;
}

class Search {
public:
    Search(const Triple& root, const BowditchParams& params, SinkRegion* record)
        : params_(params), record_(record),
          mu_(mu_invariant(root[0], root[1], root[2])), bounds_(mu_, params.tol_real_segment) {
        params_.validate();
        root_.val = root;
        root_.p = {0, 1, 1};
        root_.q = {1, 0, 1};
    }

    [[nodiscard]] bool reducible() const { return std::abs(mu_ - 4.0) <= params_.tol_real_segment; }

    std::optional<Verdict> certify(const Node& n, std::size_t k) const {
        const cplx value = n.val[k];
        const double tol = params_.tol_real_segment;
        if (params_.enable_mu0_heuristic && std::abs(mu_) <= tol && std::norm(value) <= 0.25) {
            return Verdict::not_in_set(Certificate::Mu0Heuristic, label_of(n, k));
        }
        // Zero regions carry a trace-preserving Z-action; the condition is then
        // posed on the quotient, so they are not witnesses on their own.
        if (std::norm(value) > tol * tol && bounds_.in_E(value)) {
            return Verdict::not_in_set(Certificate::ExceptionalValue, label_of(n, k));
        }
        return std::nullopt;
    }

    bool in_T(cplx u, cplx v) const { return bounds_.edge(u, v); }

    void record_edge(const Node& n, std::size_t i, std::size_t j) {
        if (!record_) return;
        if (!n.labelled) {
            record_->labels_valid = false;
            return;
        }
        record_->edges.push_back(SinkEdge{Rational(n.p[i], n.q[i]), Rational(n.p[j], n.q[j]), n.val[i], n.val[j]});
    }

    struct Frame {
        Node node;
        int from;  // edge crossed to reach this vertex, -1 at the start
    };

    // Depth-first search over T from the given frames. Edges already counted by
    // the caller are passed in `edges`.
    Verdict explore(std::vector<Frame> stack, long vertices, long edges) {
        while (!stack.empty()) {
            Frame f = std::move(stack.back());
            stack.pop_back();
            ++vertices;
            for (std::size_t e = 0; e < 3; ++e) {
                if (static_cast<int>(e) == f.from) continue;
                const std::size_t i = (e + 1) % 3;
                const std::size_t j = (e + 2) % 3;
                if (!in_T(f.node.val[i], f.node.val[j])) continue;
                if (++edges > params_.max_sink_edges) return Verdict::indecisive(SearchPhase::Exploration);
                record_edge(f.node, i, j);
                Node next = move(f.node, e);
                if (auto v = certify(next, e)) return *v;
                stack.push_back(Frame{std::move(next), static_cast<int>(e)});
            }
        }
        return Verdict::in_set(vertices, edges);
    }

    Verdict run() {
        if (reducible()) return Verdict::not_applicable();
        for (std::size_t k = 0; k < 3; ++k) {
            if (auto v = certify(root_, k)) return *v;
        }
        Node current = root_;
        long steps = 0;
        for (;;) {
            const int e = steepest_move(current);
            if (e < 0) break;
            if (++steps > params_.max_descent_steps) return Verdict::indecisive(SearchPhase::Descent);
            current = move(current, static_cast<std::size_t>(e));
            if (auto v = certify(current, static_cast<std::size_t>(e))) return *v;
        }
        if (record_) {
            record_->start = to_vertex(current);
            record_->labels_valid = current.labelled;
        }
        return explore({Frame{current, -1}}, 0, 0);
    }

    Verdict run_quotient() {
        if (reducible()) return Verdict::not_applicable();
        // Region 1 (label 1/0) is the zero region U; its neighbours round the
        // boundary are a, c, -a, -c, ... and the quotient keeps two of them.
        if (auto v = certify(root_, 0)) return *v;
        if (auto v = certify(root_, 2)) return *v;
        const Node second = move(root_, 0);  // (−a at 2/1, 0, c)
        if (auto v = certify(second, 0)) return *v;
        if (record_) {
            record_->start = to_vertex(root_);
            record_->labels_valid = true;
            record_edge(root_, 1, 2);
            record_edge(second, 1, 0);
        }
        std::vector<Frame> stack;
        long edges = 2;
        for (const Node* n : {static_cast<const Node*>(&root_), &second}) {
            if (!in_T(n->val[0], n->val[2])) continue;
            if (++edges > params_.max_sink_edges) return Verdict::indecisive(SearchPhase::Exploration);
            record_edge(*n, 0, 2);
            Node next = move(*n, 1);
            if (auto v = certify(next, 1)) return *v;
            stack.push_back(Frame{std::move(next), 1});
        }
        return explore(std::move(stack), 2, edges);
    }

private:
    BowditchParams params_;
    SinkRegion* record_;
    Node root_;
    cplx mu_;
    Bounds bounds_;
};

}  // namespace

DescentResult descend(const TreeVertex<cplx>& root, const BowditchParams& params) {
    params.validate();
    Node current = to_node(root);
    DescentResult out;
    for (;;) {
        const int e = steepest_move(current);
        if (e < 0) break;
        if (out.steps >= params.max_descent_steps) return out;
        ++out.steps;
        current = move(current, static_cast<std::size_t>(e));
    }
    out.labels_valid = current.labelled;
    out.sink = current.labelled ? to_vertex(current) : TreeVertex<cplx>{root.regions, current.val};
    return out;
}

Verdict membership(const Triple& root, const BowditchParams& params, SinkRegion* record) {
    return Search(root, params, record).run();
}

Verdict membership_quotient(const Triple& root, const BowditchParams& params, SinkRegion* record) {
    if (root[1] != cplx(0.0, 0.0)) {
        throw std::invalid_argument("membership_quotient needs phi(1/0) = 0 exactly");
    }
    return Search(root, params, record).run_quotient();
}

}  // namespace dslice
