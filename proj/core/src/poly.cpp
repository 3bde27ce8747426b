#include "dslice/poly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace dslice {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("IntPoly coefficient overflow");
    return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("IntPoly coefficient overflow");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("IntPoly coefficient overflow");
    return out;
}

}  // namespace

IntPoly::IntPoly(std::int64_t c) {
    if (c != 0) coeffs_.push_back(c);
}

IntPoly IntPoly::from_coefficients(std::vector<std::int64_t> ascending) {
    IntPoly p;
    p.coeffs_ = std::move(ascending);
    p.trim();
    return p;
}

IntPoly IntPoly::x() { return from_coefficients({0, 1}); }

std::int64_t IntPoly::coefficient(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

std::int64_t IntPoly::max_abs_coefficient() const {
    std::int64_t m = 0;
    for (auto c : coeffs_) m = std::max(m, c < 0 ? -c : c);
    return m;
}

std::complex<double> IntPoly::evaluate(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + static_cast<double>(*it);
    }
    return acc;
}

IntPoly IntPoly::derivative() const {
    IntPoly d;
    if (coeffs_.size() <= 1) return d;
    d.coeffs_.resize(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d.coeffs_[k - 1] = checked_mul(coeffs_[k], static_cast<std::int64_t>(k));
    }
    d.trim();
    return d;
}

IntPoly IntPoly::compose(const IntPoly& inner) const {
    IntPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += IntPoly(*it);
    }
    return acc;
}

IntPoly IntPoly::reflected() const { return compose(from_coefficients({1, -1})); }

std::string IntPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const std::int64_t c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const std::int64_t mag = c < 0 ? -c : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || k == 0) out += std::to_string(mag);
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] = checked_add(coeffs_[k], rhs.coeffs_[k]);
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] = checked_sub(coeffs_[k], rhs.coeffs_[k]);
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<std::int64_t> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], rhs.coeffs_[j]));
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

IntPoly operator-(const IntPoly& a) {
    IntPoly out = a;
    for (auto& c : out.coeffs_) c = checked_sub(0, c);
    return out;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

}  // namespace dslice
