#pragma once

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>

namespace dslice {

using cplx = std::complex<double>;

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Complex literal such as "1.3+0.4i", "-2", "i", "-0.5i", "3e-2-1e1i".
cplx parse_complex(const std::string& text);

/// Complex expression in one variable (x, z or zeta). Supports + - * / ^,
/// unary minus, parentheses, the constant i and pi, and sqrt, exp, log, sin, cos.
class Expression {
public:
    explicit Expression(const std::string& source);

    [[nodiscard]] cplx operator()(cplx variable) const;
    [[nodiscard]] const std::string& source() const { return source_; }

    struct Node;

private:
    std::string source_;
    std::shared_ptr<const Node> root_;
};

}  // namespace dslice
