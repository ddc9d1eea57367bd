#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace adshiggs {

/// Parse error with the 0-based offset of the offending character.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)), pos(position) {}
    std::size_t pos;
};

/// Evaluation domain error (division by zero at a node).
struct EvalError : std::runtime_error {
    EvalError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)), pos(position) {}
    std::size_t pos;
};

/// Expression tree over one complex variable z.
/// Grammar: numbers (with optional i suffix), z, i, conj(...), exp(...),
/// + - * /, integer powers with ^, parentheses.
struct ExprAst {
    enum class Kind { literal, var_z, conj, exp_fn, add, sub, mul, div, pow, neg };

    Kind kind = Kind::literal;
    std::complex<double> value;  // literal
    long exponent = 0;           // pow
    std::vector<ExprAst> args;
    std::size_t pos = 0;
};

ExprAst parse(const std::string& text);

std::complex<double> eval(const ExprAst& ast, std::complex<double> z);

}  // namespace adshiggs
