#include "dslice/farey.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>
#include <tuple>

namespace dslice {

Rational::Rational(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) {
        throw FareyError("0/0 is not a rational");
    }
    if (q == 0) {
        p_ = 1;
        q_ = 0;
        return;
    }
    if (q < 0) {
        p = -p;
        q = -q;
    }
    const std::int64_t g = std::gcd(p < 0 ? -p : p, q);
    p_ = p / g;
    q_ = q / g;
}

double Rational::to_double() const {
    if (is_infinite()) return std::numeric_limits<double>::infinity();
    return static_cast<double>(p_) / static_cast<double>(q_);
}

std::string Rational::str() const {
    return std::to_string(p_) + "/" + std::to_string(q_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.is_infinite() || b.is_infinite()) {
        return a.is_infinite() <=> b.is_infinite();
    }
    const __int128 lhs = static_cast<__int128>(a.p()) * b.q();
    const __int128 rhs = static_cast<__int128>(b.p()) * a.q();
    return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const std::int64_t p = std::stoll(text, &used);
            if (used != text.size()) throw FareyError("trailing characters");
            return Rational(p, 1);
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        const std::int64_t p = std::stoll(num, &used);
        if (used != num.size()) throw FareyError("trailing characters");
        const std::int64_t q = std::stoll(den, &used);
        if (used != den.size()) throw FareyError("trailing characters");
        return Rational(p, q);
    } catch (const std::logic_error&) {
        throw FareyError("cannot parse rational '" + text + "'");
    }
}

Rational mediant(const Rational& a, const Rational& b) {
    return Rational(a.p() + b.p(), a.q() + b.q());
}

std::int64_t farey_determinant(const Rational& a, const Rational& b) {
    const std::int64_t d = a.p() * b.q() - b.p() * a.q();
    return d < 0 ? -d : d;
}

namespace {

// Modular inverse of a modulo m (gcd(a, m) = 1, m >= 2), in [1, m).
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    std::int64_t old_r = ((a % m) + m) % m, r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
    }
    return ((old_s % m) + m) % m;
}

bool is_base_vertex(const Rational& r) {
    return r.is_infinite() || r.p() == 0 || (r.q() == 1 && (r.p() == 1 || r.p() == -1));
}

}  // namespace

std::pair<Rational, Rational> farey_parents(const Rational& r) {
    if (is_base_vertex(r)) {
        throw NoParentsError("no Farey parents for base vertex " + r.str());
    }
    if (r.p() < 0) {
        auto [lo, hi] = farey_parents(r.negated());
        return {hi.negated(), lo.negated()};
    }
    const std::int64_t p = r.p();
    const std::int64_t q = r.q();
    if (q == 1) {
        return {Rational(p - 1, 1), Rational::infinity()};
    }
    // Left parent a/b satisfies p*b - q*a = 1 with 0 < b < q.
    const std::int64_t b = inverse_mod(p, q);
    const std::int64_t a = (p * b - 1) / q;
    return {Rational(a, b), Rational(p - a, q - b)};
}

std::string FareyPath::str() const {
    std::string out = mirrored ? "-[" : "[";
    for (std::size_t i = 0; i < turns.size(); ++i) {
        if (i) out += ", ";
        out += turns[i] == Turn::L ? "L" : "R";
    }
    return out + "]";
}

FareyPath farey_path(const Rational& r) {
    if (r.is_infinite() || r.p() == 0) {
        throw NoPathError("no path to base vertex " + r.str());
    }
    FareyPath path;
    path.mirrored = r.p() < 0;
    std::int64_t p = path.mirrored ? -r.p() : r.p();
    std::int64_t q = r.q();
    // Run-length form: R^{a0} L^{a1} R^{a2} ... with the final run shortened by one.
    Turn run = Turn::R;
    while (q != 0) {
        const std::int64_t quotient = p / q;
        const std::int64_t rem = p % q;
        const std::int64_t count = rem == 0 ? quotient - 1 : quotient;
        path.turns.insert(path.turns.end(), static_cast<std::size_t>(count), run);
        p = q;
        q = rem;
        run = run == Turn::R ? Turn::L : Turn::R;
    }
    return path;
}

Rational replay(const FareyPath& path) {
    Rational lo(0, 1);
    Rational hi = Rational::infinity();
    Rational current(1, 1);
    for (Turn t : path.turns) {
        if (t == Turn::L) {
            hi = current;
        } else {
            lo = current;
        }
        current = mediant(lo, hi);
    }
    return path.mirrored ? current.negated() : current;
}

Rational canonical_class(const Rational& r) {
    if (r.is_infinite()) return r;
    const std::int64_t period = 2 * r.q();
    std::int64_t p = ((r.p() % period) + period) % period;
    if (p > r.q()) p = period - p;
    return Rational(p, r.q());
}

std::string primitive_word(const Rational& r) {
    if (r.p() < 0) {
        throw UnsupportedError("primitive words are built for nonnegative slopes only, got " + r.str());
    }
    if (r.is_infinite()) return "b";
    if (r.p() == 0) return "a";
    std::string lo = "a";
    std::string hi = "b";
    std::string current = "ab";
    for (Turn t : farey_path(r).turns) {
        if (t == Turn::L) {
            hi = std::move(current);
        } else {
            lo = std::move(current);
        }
        current = lo + hi;
    }
    return current;
}

std::int64_t partial_quotient_sum(const Rational& r) {
    if (r.is_infinite()) throw UnsupportedError("1/0 has no finite continued fraction");
    std::int64_t p = r.p() < 0 ? -r.p() : r.p();
    std::int64_t q = r.q();
    std::int64_t sum = 0;
    while (q != 0) {
        sum += p / q;
        std::tie(p, q) = std::make_pair(q, p % q);
    }
    return sum;
}

std::vector<Rational> canonical_classes_up_to(std::int64_t max_q) {
    std::vector<Rational> out;
    for (std::int64_t q = 1; q <= max_q; ++q) {
        for (std::int64_t p = 0; p <= q; ++p) {
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
        }
    }
    return out;
}

}  // namespace dslice
