#include "abdg/expr.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <vector>

namespace abdg {

struct Expression::Node {
    enum Kind { Number, U, V, Neg, Add, Sub, Mul, Div, Pow, Call } kind = Number;
    double number = 0.0;
    std::string fn;
    std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Node = Expression::Node;

const std::vector<std::string> kFunctions = {"sin",  "cos",  "tan",  "exp",  "log",  "sqrt",
                                             "sinh", "cosh", "tanh", "sech", "atan", "asinh"};

NodePtr make(Node::Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr parse() {
        NodePtr n = sum();
        skip();
        if (i_ != s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
        return n;
    }

private:
    const std::string& s_;
    size_t i_ = 0;

    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorKind::ParseError, what + " at column " + std::to_string(i_ + 1) + " in \"" + s_ + "\"");
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    NodePtr sum() {
        NodePtr n = product();
        for (;;) {
            if (eat('+')) n = make(Node::Add, n, product());
            else if (eat('-')) n = make(Node::Sub, n, product());
            else return n;
        }
    }
    NodePtr product() {
        NodePtr n = unary();
        for (;;) {
            if (eat('*')) n = make(Node::Mul, n, unary());
            else if (eat('/')) n = make(Node::Div, n, unary());
            else return n;
        }
    }
    NodePtr unary() {
        if (eat('-')) return make(Node::Neg, unary());
        if (eat('+')) return unary();
        return power();
    }
    // Right associative; the exponent may carry its own sign.
    NodePtr power() {
        NodePtr base = atom();
        if (eat('^')) return make(Node::Pow, base, unary());
        return base;
    }
    NodePtr atom() {
        skip();
        if (i_ >= s_.size()) error("unexpected end");
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            NodePtr n = sum();
            if (!eat(')')) error("expected ')'");
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = s_.c_str() + i_;
            char* end = nullptr;
            const double x = std::strtod(begin, &end);
            if (end == begin) error("bad number");
            i_ += static_cast<size_t>(end - begin);
            auto n = std::make_shared<Node>();
            n->number = x;
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const size_t start = i_;
            while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
            const std::string name = s_.substr(start, i_ - start);
            if (name == "u") return make(Node::U);
            if (name == "v") return make(Node::V);
            if (name == "pi") {
                auto n = std::make_shared<Node>();
                n->number = std::numbers::pi;
                return n;
            }
            bool known = false;
            for (const auto& f : kFunctions) known = known || f == name;
            if (!known) {
                i_ = start;
                error("unknown name '" + name + "'");
            }
            if (!eat('(')) error("expected '(' after " + name);
            auto n = std::make_shared<Node>();
            n->kind = Node::Call;
            n->fn = name;
            n->a = sum();
            if (!eat(')')) error("expected ')'");
            return n;
        }
        error("unexpected '" + std::string(1, c) + "'");
    }
};

template <class T> T call(const std::string& fn, const T& x) {
    using std::asinh, std::atan, std::cos, std::cosh, std::exp, std::log, std::sin, std::sinh, std::sqrt, std::tanh;
    if (fn == "sin") return sin(x);
    if (fn == "cos") return cos(x);
    if (fn == "tan") return sin(x) / cos(x);
    if (fn == "exp") return exp(x);
    if (fn == "log") return log(x);
    if (fn == "sqrt") return sqrt(x);
    if (fn == "sinh") return sinh(x);
    if (fn == "cosh") return cosh(x);
    if (fn == "tanh") return tanh(x);
    if (fn == "sech") return sech(x);
    if (fn == "atan") return atan(x);
    return asinh(x);
}

template <class T> T power(const T& x, double p) {
    using std::pow;
    if (p == std::round(p) && std::abs(p) <= 64) return pow(x, static_cast<int>(p));
    return pow(x, p);
}

template <class T> T eval(const Node& n, const T& u, const T& v) {
    using std::exp, std::log;
    switch (n.kind) {
    case Node::Number: return T(n.number);
    case Node::U: return u;
    case Node::V: return v;
    case Node::Neg: return -eval(*n.a, u, v);
    case Node::Add: return eval(*n.a, u, v) + eval(*n.b, u, v);
    case Node::Sub: return eval(*n.a, u, v) - eval(*n.b, u, v);
    case Node::Mul: return eval(*n.a, u, v) * eval(*n.b, u, v);
    case Node::Div: return eval(*n.a, u, v) / eval(*n.b, u, v);
    case Node::Pow: {
        if (n.b->kind != Node::Number && !(n.b->kind == Node::Neg && n.b->a->kind == Node::Number))
            return exp(log(eval(*n.a, u, v)) * eval(*n.b, u, v));
        const double p = n.b->kind == Node::Number ? n.b->number : -n.b->a->number;
        return power(eval(*n.a, u, v), p);
    }
    case Node::Call: return call(n.fn, eval(*n.a, u, v));
    }
    return T(0.0);
}

} // namespace

Expression Expression::parse(const std::string& text) {
    Expression e;
    e.text_ = text;
    e.root_ = Parser(text).parse();
    return e;
}

double Expression::operator()(double u, double v) const { return eval<double>(*root_, u, v); }

MultiJet Expression::operator()(const MultiJet& u, const MultiJet& v) const { return eval<MultiJet>(*root_, u, v); }

} // namespace abdg
