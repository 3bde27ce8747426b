#pragma once

// Dense univariate polynomials in x with exact 64-bit integer coefficients.
// All arithmetic is overflow-checked; overflow throws std::overflow_error.

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace dslice {

class IntPoly {
public:
    IntPoly() = default;
    /// The constant polynomial c.
    explicit IntPoly(std::int64_t c);
    /// Coefficients in ascending order of degree: {c0, c1, c2, ...}.
    static IntPoly from_coefficients(std::vector<std::int64_t> ascending);
    static IntPoly x();

    /// Degree of the zero polynomial is -1.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^k (0 beyond the degree).
    [[nodiscard]] std::int64_t coefficient(int k) const;
    [[nodiscard]] const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
    [[nodiscard]] std::int64_t max_abs_coefficient() const;

    [[nodiscard]] std::complex<double> evaluate(std::complex<double> x) const;
    [[nodiscard]] IntPoly derivative() const;
    /// p(1 - x).
    [[nodiscard]] IntPoly reflected() const;
    /// p(q(x)).
    [[nodiscard]] IntPoly compose(const IntPoly& inner) const;

    /// Human form, highest degree first, e.g. "x^3 - 2x^2 + 2".
    [[nodiscard]] std::string str() const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
    friend IntPoly operator-(const IntPoly& a);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim();
    std::vector<std::int64_t> coeffs_;  // ascending; no trailing zeros
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

}  // namespace dslice
