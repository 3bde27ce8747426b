#pragma once

// Reduced rationals on the extended line Q ∪ {1/0}, Stern-Brocot navigation,
// primitive words in the free group <a, b>, and curve-class canonicalization.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dslice {

class FareyError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown by farey_parents for the vertices of the base triangle.
class NoParentsError : public FareyError {
public:
    using FareyError::FareyError;
};

/// Thrown by farey_path for 1/0 and 0/1, which sit on the base triangle itself.
class NoPathError : public FareyError {
public:
    using FareyError::FareyError;
};

class UnsupportedError : public FareyError {
public:
    using FareyError::FareyError;
};

/// A reduced fraction p/q with q >= 0. The point at infinity is stored as 1/0.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t p, std::int64_t q);

    static Rational infinity() { return Rational(1, 0); }

    [[nodiscard]] std::int64_t p() const { return p_; }
    [[nodiscard]] std::int64_t q() const { return q_; }
    [[nodiscard]] bool is_infinite() const { return q_ == 0; }

    [[nodiscard]] Rational negated() const { return is_infinite() ? *this : Rational(-p_, q_); }
    [[nodiscard]] double to_double() const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    /// Numeric order on Q, with 1/0 above every finite value.
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t p_ = 0;
    std::int64_t q_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Parses "p/q" or an integer "p".
Rational parse_rational(const std::string& text);

Rational mediant(const Rational& a, const Rational& b);

/// |ad - bc| for a/b, c/d.
std::int64_t farey_determinant(const Rational& a, const Rational& b);

/// The two Farey neighbours whose mediant is r, smaller first.
std::pair<Rational, Rational> farey_parents(const Rational& r);

enum class Turn : std::uint8_t { L, R };

/// Stern-Brocot descent from 1/1 inside the base triangle (1/0, 0/1, 1/1).
/// An L turn keeps the lower endpoint of the current interval; R keeps the upper.
/// `mirrored` marks a negative target, reached by the same turns in the mirror
/// image of the tree (p ↦ -p).
struct FareyPath {
    std::vector<Turn> turns;
    bool mirrored = false;

    [[nodiscard]] std::string str() const;
    friend bool operator==(const FareyPath&, const FareyPath&) = default;
};

FareyPath farey_path(const Rational& r);

/// Replays the mediant moves of a path and returns the rational reached.
Rational replay(const FareyPath& path);

/// Representative of {±r + 2k}: the unique element with 0 <= p <= q, or 1/0.
Rational canonical_class(const Rational& r);

/// Word over {a, b} with a at 0/1, b at 1/0, built by concatenating the word of
/// the smaller Farey parent with the word of the larger one.
std::string primitive_word(const Rational& r);

/// Sum of the continued-fraction partial quotients of p/q (q >= 1, p >= 0).
std::int64_t partial_quotient_sum(const Rational& r);

/// All canonical classes 0 <= p <= q <= max_q with gcd(p, q) = 1, ordered by (q, p).
std::vector<Rational> canonical_classes_up_to(std::int64_t max_q);

}  // namespace dslice
