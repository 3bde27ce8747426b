#include "dslice/complex_parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <vector>

namespace dslice {

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

// Reads a real number starting at pos; returns false if none.
bool read_real(const std::string& s, std::size_t& pos, double& value) {
    const char* begin = s.data() + pos;
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) return false;
    pos += static_cast<std::size_t>(ptr - begin);
    return true;
}

}  // namespace

cplx parse_complex(const std::string& text) {
    const std::string s = strip(text);
    if (s.empty()) throw ParseError("empty complex number");
    std::size_t pos = 0;
    cplx total{0.0, 0.0};
    int terms = 0;
    while (pos < s.size()) {
        double sign = 1.0;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1.0 : 1.0;
            ++pos;
        } else if (terms > 0) {
            throw ParseError("malformed complex number '" + text + "'");
        }
        double magnitude = 1.0;
        const bool has_number = read_real(s, pos, magnitude);
        const bool imaginary = pos < s.size() && s[pos] == 'i';
        if (imaginary) ++pos;
        if (!has_number && !imaginary) throw ParseError("malformed complex number '" + text + "'");
        total += imaginary ? cplx(0.0, sign * magnitude) : cplx(sign * magnitude, 0.0);
        if (++terms > 2) throw ParseError("malformed complex number '" + text + "'");
    }
    return total;
}

struct Expression::Node {
    enum class Kind { Constant, Variable, Neg, Add, Sub, Mul, Div, Pow, Call } kind;
    cplx value{};
    std::string function;
    std::shared_ptr<const Node> lhs, rhs;

    [[nodiscard]] cplx eval(cplx v) const {
        switch (kind) {
            case Kind::Constant: return value;
            case Kind::Variable: return v;
            case Kind::Neg: return -lhs->eval(v);
            case Kind::Add: return lhs->eval(v) + rhs->eval(v);
            case Kind::Sub: return lhs->eval(v) - rhs->eval(v);
            case Kind::Mul: return lhs->eval(v) * rhs->eval(v);
            case Kind::Div: return lhs->eval(v) / rhs->eval(v);
            case Kind::Pow: {
                const cplx base = lhs->eval(v);
                const cplx exponent = rhs->eval(v);
                const double n = exponent.real();
                if (exponent.imag() == 0.0 && n == std::floor(n) && std::abs(n) <= 64.0) {
                    cplx out{1.0, 0.0};
                    for (int k = 0; k < static_cast<int>(std::abs(n)); ++k) out *= base;
                    return n < 0 ? 1.0 / out : out;
                }
                return std::pow(base, exponent);
            }
            case Kind::Call: {
                const cplx a = lhs->eval(v);
                if (function == "sqrt") return std::sqrt(a);
                if (function == "exp") return std::exp(a);
                if (function == "log") return std::log(a);
                if (function == "sin") return std::sin(a);
                return std::cos(a);
            }
        }
        return {};
    }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

NodePtr make(Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

NodePtr constant(cplx value) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = Kind::Constant;
    n->value = value;
    return n;
}

// expr   := term (('+'|'-') term)*
// term   := unary (('*'|'/') unary)*
// unary  := '-' unary | power
// power  := atom ('^' unary)?
// atom   := number ['i'] | 'i' | name | name '(' expr ')' | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string s) : s_(std::move(s)) {}

    NodePtr parse() {
        NodePtr n = expr();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("expression '" + s_ + "': " + why + " at position " + std::to_string(pos_));
    }

    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        NodePtr n = term();
        for (;;) {
            if (accept('+')) n = make(Kind::Add, n, term());
            else if (accept('-')) n = make(Kind::Sub, n, term());
            else return n;
        }
    }

    NodePtr term() {
        NodePtr n = unary();
        for (;;) {
            if (accept('*')) n = make(Kind::Mul, n, unary());
            else if (accept('/')) n = make(Kind::Div, n, unary());
            else return n;
        }
    }

    NodePtr unary() {
        if (accept('-')) return make(Kind::Neg, unary());
        if (accept('+')) return unary();
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (accept('^')) return make(Kind::Pow, base, unary());
        return base;
    }

    NodePtr atom() {
        if (pos_ >= s_.size()) fail("unexpected end");
        if (accept('(')) {
            NodePtr n = expr();
            if (!accept(')')) fail("missing ')'");
            return n;
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            double value = 0.0;
            if (!read_real(s_, pos_, value)) fail("bad number");
            if (accept('i')) return constant({0.0, value});
            return constant({value, 0.0});
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) name.push_back(s_[pos_++]);
            if (name == "i") return constant({0.0, 1.0});
            if (name == "pi") return constant({std::numbers::pi, 0.0});
            if (name == "x" || name == "z" || name == "zeta") return make(Kind::Variable);
            if (name == "sqrt" || name == "exp" || name == "log" || name == "sin" || name == "cos") {
                if (!accept('(')) fail("expected '(' after " + name);
                auto n = std::make_shared<Expression::Node>();
                n->kind = Kind::Call;
                n->function = name;
                n->lhs = expr();
                if (!accept(')')) fail("missing ')'");
                return n;
            }
            fail("unknown name '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression::Expression(const std::string& source) : source_(source), root_(Parser(strip(source)).parse()) {}

cplx Expression::operator()(cplx variable) const { return root_->eval(variable); }

}  // namespace dslice
