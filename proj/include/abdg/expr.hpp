#pragma once

#include <memory>
#include <string>

#include "abdg/jet.hpp"

namespace abdg {

// Parsed arithmetic expression in the chart variables u and v.
// Grammar: + - * / ^, unary minus, numbers, pi, and the functions
// sin cos tan exp log sqrt sinh cosh tanh sech atan asinh.
class Expression {
public:
    struct Node;

    // Throws ParseError with the offending column.
    static Expression parse(const std::string& text);

    double operator()(double u, double v) const;
    MultiJet operator()(const MultiJet& u, const MultiJet& v) const;
    const std::string& text() const { return text_; }

private:
    std::string text_;
    std::shared_ptr<const Node> root_;
};

} // namespace abdg
