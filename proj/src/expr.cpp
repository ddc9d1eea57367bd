#include "adshiggs/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace adshiggs {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExprAst run() {
        ExprAst e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

  private:
    ExprAst expr() {
        ExprAst left = term();
        for (;;) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                ExprAst node;
                node.kind = peek() == '+' ? ExprAst::Kind::add : ExprAst::Kind::sub;
                node.pos = pos_++;
                node.args.push_back(std::move(left));
                node.args.push_back(term());
                left = std::move(node);
            } else {
                return left;
            }
        }
    }

    ExprAst term() {
        ExprAst left = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*' || peek() == '/') {
                ExprAst node;
                node.kind = peek() == '*' ? ExprAst::Kind::mul : ExprAst::Kind::div;
                node.pos = pos_++;
                node.args.push_back(std::move(left));
                node.args.push_back(factor());
                left = std::move(node);
            } else {
                return left;
            }
        }
    }

    ExprAst factor() {
        skip_ws();
        if (peek() == '+') {
            ++pos_;
            return factor();
        }
        if (peek() == '-') {
            ExprAst node;
            node.kind = ExprAst::Kind::neg;
            node.pos = pos_++;
            node.args.push_back(factor());
            return node;
        }
        return power();
    }

    ExprAst power() {
        ExprAst base = primary();
        skip_ws();
        if (peek() != '^') return base;
        ExprAst node;
        node.kind = ExprAst::Kind::pow;
        node.pos = pos_++;
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        skip_ws();
        if (!std::isdigit(peek())) throw ParseError("expected integer exponent", pos_);
        long e = 0;
        while (std::isdigit(peek())) e = 10 * e + (text_[pos_++] - '0');
        node.exponent = negate ? -e : e;
        node.args.push_back(std::move(base));
        return node;
    }

    ExprAst primary() {
        skip_ws();
        std::size_t start = pos_;
        char c = peek();
        if (c == '(') {
            ++pos_;
            ExprAst inner = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(c) || c == '.') return number();
        if (std::isalpha(c)) {
            std::string name;
            while (std::isalpha(peek())) name += text_[pos_++];
            if (name == "z") {
                ExprAst node;
                node.kind = ExprAst::Kind::var_z;
                node.pos = start;
                return node;
            }
            if (name == "i") {
                ExprAst node;
                node.kind = ExprAst::Kind::literal;
                node.value = {0.0, 1.0};
                node.pos = start;
                return node;
            }
            if (name == "conj" || name == "exp") {
                skip_ws();
                if (peek() != '(') throw ParseError("expected '(' after " + name, pos_);
                ++pos_;
                ExprAst inner = expr();
                skip_ws();
                if (peek() != ')') throw ParseError("expected ')'", pos_);
                ++pos_;
                ExprAst node;
                node.kind = name == "conj" ? ExprAst::Kind::conj : ExprAst::Kind::exp_fn;
                node.pos = start;
                node.args.push_back(std::move(inner));
                return node;
            }
            throw ParseError("unknown identifier '" + name + "'", start);
        }
        throw ParseError("unexpected character", pos_);
    }

    ExprAst number() {
        std::size_t start = pos_;
        while (std::isdigit(peek())) ++pos_;
        if (peek() == '.') {
            ++pos_;
            while (std::isdigit(peek())) ++pos_;
        }
        if (peek() == 'e' || peek() == 'E') {
            std::size_t mark = pos_;
            ++pos_;
            if (peek() == '+' || peek() == '-') ++pos_;
            if (std::isdigit(peek())) {
                while (std::isdigit(peek())) ++pos_;
            } else {
                pos_ = mark;  // 'e' was not an exponent
            }
        }
        if (pos_ == start) throw ParseError("expected number", start);
        double v = std::strtod(text_.c_str() + start, nullptr);
        ExprAst node;
        node.kind = ExprAst::Kind::literal;
        node.pos = start;
        if (peek() == 'i') {
            ++pos_;
            node.value = {0.0, v};
        } else {
            node.value = {v, 0.0};
        }
        return node;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

std::complex<double> ipow(std::complex<double> base, long e, std::size_t pos) {
    if (e < 0) {
        if (base == std::complex<double>{0.0, 0.0}) throw EvalError("zero to negative power", pos);
        base = 1.0 / base;
        e = -e;
    }
    std::complex<double> acc = 1.0;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace

ExprAst parse(const std::string& text) { return Parser(text).run(); }

std::complex<double> eval(const ExprAst& ast, std::complex<double> z) {
    using K = ExprAst::Kind;
    switch (ast.kind) {
        case K::literal: return ast.value;
        case K::var_z: return z;
        case K::conj: return std::conj(eval(ast.args[0], z));
        case K::exp_fn: return std::exp(eval(ast.args[0], z));
        case K::add: return eval(ast.args[0], z) + eval(ast.args[1], z);
        case K::sub: return eval(ast.args[0], z) - eval(ast.args[1], z);
        case K::mul: return eval(ast.args[0], z) * eval(ast.args[1], z);
        case K::div: {
            const auto den = eval(ast.args[1], z);
            if (den == std::complex<double>{0.0, 0.0})
                throw EvalError("division by zero", ast.pos);
            return eval(ast.args[0], z) / den;
        }
        case K::pow: return ipow(eval(ast.args[0], z), ast.exponent, ast.pos);
        case K::neg: return -eval(ast.args[0], z);
    }
    throw std::logic_error("eval: bad node");
}

}  // namespace adshiggs
