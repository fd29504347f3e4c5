#include "regulus/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <vector>

#include "regulus/errors.hpp"

namespace regulus::expr {

namespace {

using axial::NodeKind;
using axial::RegularFn;

enum class Tok { Number, Q, Ident, Plus, Minus, Star, Caret, LParen, RParen, Comma, End };

struct Token {
    Tok kind = Tok::End;
    std::size_t offset = 0;
    double number = 0.0;
    std::string ident;
};

Token make_token(Tok kind, std::size_t offset) {
    Token t;
    t.kind = kind;
    t.offset = offset;
    return t;
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            if (pos_ >= src_.size()) {
                out.push_back(make_token(Tok::End, pos_));
                return out;
            }
            const std::size_t at = pos_;
            const char c = src_[pos_];
            switch (c) {
                case '+': out.push_back(make_token(Tok::Plus, at)); ++pos_; continue;
                case '-': out.push_back(make_token(Tok::Minus, at)); ++pos_; continue;
                case '*': out.push_back(make_token(Tok::Star, at)); ++pos_; continue;
                case '^': out.push_back(make_token(Tok::Caret, at)); ++pos_; continue;
                case '(': out.push_back(make_token(Tok::LParen, at)); ++pos_; continue;
                case ')': out.push_back(make_token(Tok::RParen, at)); ++pos_; continue;
                case ',': out.push_back(make_token(Tok::Comma, at)); ++pos_; continue;
                default: break;
            }
            if (std::isdigit(static_cast<unsigned char>(c)) ||
                (c == '.' && pos_ + 1 < src_.size() &&
                 std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
                out.push_back(lex_number(at));
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                std::size_t end = pos_;
                while (end < src_.size() &&
                       std::isalpha(static_cast<unsigned char>(src_[end])))
                    ++end;
                std::string word(src_.substr(pos_, end - pos_));
                pos_ = end;
                if (word == "q") {
                    out.push_back(make_token(Tok::Q, at));
                } else {
                    Token t = make_token(Tok::Ident, at);
                    t.ident = std::move(word);
                    out.push_back(std::move(t));
                }
                continue;
            }
            throw SyntaxError(at, "expression",
                              "syntax error at offset " + std::to_string(at) +
                                  ": unexpected character '" + std::string(1, c) + "'");
        }
    }

private:
    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    Token lex_number(std::size_t at) {
        std::size_t end = pos_;
        auto digits = [&] {
            while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end])))
                ++end;
        };
        digits();
        if (end < src_.size() && src_[end] == '.') {
            ++end;
            digits();
        }
        if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
            std::size_t mark = end;
            ++end;
            if (end < src_.size() && (src_[end] == '+' || src_[end] == '-')) ++end;
            if (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) {
                digits();
            } else {
                end = mark;  // "2e" with no exponent digits: the 'e' is not ours
            }
        }
        const std::string text(src_.substr(pos_, end - pos_));
        char* stop = nullptr;
        const double value = std::strtod(text.c_str(), &stop);
        if (stop != text.c_str() + text.size() || !std::isfinite(value))
            throw SyntaxError(at, "real literal",
                              "syntax error at offset " + std::to_string(at) +
                                  ": bad number '" + text + "'");
        pos_ = end;
        Token t = make_token(Tok::Number, at);
        t.number = value;
        return t;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {}

    RegularFn run() {
        RegularFn e = parse_expr();
        if (peek().kind == Tok::Caret)
            throw SyntaxError(peek().offset, "end of input",
                              "syntax error at offset " + std::to_string(peek().offset) +
                                  ": chained '^' is not allowed; parenthesize the base");
        expect(Tok::End, "end of input");
        return e;
    }

private:
    const Token& peek() const { return toks_[cur_]; }
    Token take() { return toks_[cur_++]; }

    void expect(Tok kind, const char* what) {
        if (peek().kind != kind)
            throw SyntaxError(peek().offset, what,
                              "syntax error at offset " + std::to_string(peek().offset) +
                                  ": expected " + what);
        ++cur_;
    }

    RegularFn parse_expr() {
        RegularFn lhs = parse_term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool minus = take().kind == Tok::Minus;
            RegularFn rhs = parse_term();
            lhs = minus ? axial::sum(lhs, axial::scale_fn(-1.0, rhs)) : axial::sum(lhs, rhs);
        }
        return lhs;
    }

    RegularFn parse_term() {
        RegularFn lhs = parse_factor();
        while (peek().kind == Tok::Star) {
            take();
            lhs = axial::product(lhs, parse_factor());
        }
        return lhs;
    }

    RegularFn parse_factor() {
        const bool base_is_q = peek().kind == Tok::Q;
        RegularFn base = parse_base();
        if (peek().kind != Tok::Caret) return base;
        take();
        const int n = parse_exponent();
        if (peek().kind == Tok::Caret)
            throw SyntaxError(peek().offset, "'*', '+', '-' or end of input",
                              "syntax error at offset " + std::to_string(peek().offset) +
                                  ": chained '^' is not allowed; parenthesize the base");
        if (base_is_q) return axial::power(n);
        return axial::compose(axial::power(n), base);
    }

    int parse_exponent() {
        bool negative = false;
        if (peek().kind == Tok::Minus) {
            take();
            negative = true;
        }
        if (peek().kind != Tok::Number)
            throw SyntaxError(peek().offset, "integer exponent",
                              "syntax error at offset " + std::to_string(peek().offset) +
                                  ": expected integer exponent after '^'");
        const Token t = take();
        const double v = t.number;
        if (v != std::floor(v) || v > 1e6)
            throw SyntaxError(t.offset, "integer exponent",
                              "syntax error at offset " + std::to_string(t.offset) +
                                  ": exponent must be a small integer");
        const int n = static_cast<int>(v);
        return negative ? -n : n;
    }

    RegularFn parse_base() {
        const Token t = peek();
        switch (t.kind) {
            case Tok::Q:
                take();
                return axial::identity();
            case Tok::Number:
                take();
                return axial::constant(t.number);
            case Tok::LParen: {
                take();
                RegularFn inner = parse_expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Ident: {
                take();
                if (t.ident != "exp" && t.ident != "recip")
                    throw SyntaxError(t.offset, "'exp' or 'recip'",
                                      "syntax error at offset " + std::to_string(t.offset) +
                                          ": unknown function '" + t.ident + "'");
                expect(Tok::LParen, "'('");
                if (peek().kind == Tok::RParen)
                    throw ArityError(peek().offset, t.ident + " expects exactly one argument, got none (offset " +
                                                        std::to_string(peek().offset) + ")");
                RegularFn inner = parse_expr();
                if (peek().kind == Tok::Comma)
                    throw ArityError(peek().offset, t.ident + " expects exactly one argument (offset " +
                                                        std::to_string(peek().offset) + ")");
                expect(Tok::RParen, "')'");
                if (t.ident == "exp") return axial::compose(axial::exp_fn(), inner);
                return axial::reciprocal(inner);
            }
            default:
                throw SyntaxError(t.offset, "'q', a real literal, 'exp(', 'recip(' or '('",
                                  "syntax error at offset " + std::to_string(t.offset) +
                                      ": expected an expression");
        }
    }

    std::vector<Token> toks_;
    std::size_t cur_ = 0;
};

// --- printing ---------------------------------------------------------

// Precedence of a rendered fragment: 0 sum, 1 product, 2 exponentiated
// factor, 3 atomic base.
struct Rendered {
    std::string text;
    int prec;
};

std::string wrap(const Rendered& r, int ctx) {
    if (r.prec >= ctx) return r.text;
    return "(" + r.text + ")";
}

// Render a node with `var` substituted for the variable; composition prints
// by substituting the inner function's rendering.
Rendered render(const RegularFn& f, const Rendered& var);

Rendered render_power(int n, const Rendered& var) {
    return {wrap(var, 3) + "^" + std::to_string(n), 2};
}

bool is_minus_one_scale(const RegularFn& f) {
    return f.kind() == NodeKind::Scale && f.const_value() == -1.0;
}

Rendered render(const RegularFn& f, const Rendered& var) {
    switch (f.kind()) {
        case NodeKind::Const: {
            const double c = f.const_value();
            if (std::signbit(c)) return {"0 - " + format_double(-c), 0};
            return {format_double(c), 3};
        }
        case NodeKind::Identity:
            return var;
        case NodeKind::Power:
            return render_power(f.exponent(), var);
        case NodeKind::Exp:
            return {"exp(" + var.text + ")", 3};
        case NodeKind::Sum: {
            const Rendered lhs = render(f.child_a(), var);
            const RegularFn rhs = f.child_b();
            if (is_minus_one_scale(rhs)) {
                const Rendered inner = render(rhs.child_a(), var);
                return {wrap(lhs, 0) + " - " + wrap(inner, 1), 0};
            }
            return {wrap(lhs, 0) + " + " + wrap(render(rhs, var), 1), 0};
        }
        case NodeKind::Scale: {
            const double c = f.const_value();
            const Rendered inner = render(f.child_a(), var);
            if (c == -1.0) return {"0 - " + wrap(inner, 1), 0};
            if (std::signbit(c))
                return {"0 - " + format_double(-c) + " * " + wrap(inner, 2), 0};
            return {format_double(c) + " * " + wrap(inner, 2), 1};
        }
        case NodeKind::Product: {
            const Rendered lhs = render(f.child_a(), var);
            const Rendered rhs = render(f.child_b(), var);
            return {wrap(lhs, 1) + " * " + wrap(rhs, 2), 1};
        }
        case NodeKind::Reciprocal:
            return {"recip(" + render(f.child_a(), var).text + ")", 3};
        case NodeKind::Compose: {
            const Rendered inner = render(f.child_b(), var);
            return render(f.child_a(), inner);
        }
    }
    throw UsageError("corrupt expression node");
}

}  // namespace

RegularFn parse(std::string_view src) { return Parser(src).run(); }

std::string print(const axial::RegularFn& f) { return render(f, {"q", 3}).text; }

std::vector<CorpusEntry> parse_corpus(std::string_view src, std::string_view provenance) {
    std::vector<CorpusEntry> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= src.size()) {
        std::size_t eol = src.find('\n', pos);
        if (eol == std::string_view::npos) eol = src.size();
        std::string_view line = src.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::size_t begin = 0, end = line.size();
        while (begin < end && std::isspace(static_cast<unsigned char>(line[begin]))) ++begin;
        while (end > begin && std::isspace(static_cast<unsigned char>(line[end - 1]))) --end;
        line = line.substr(begin, end - begin);
        if (line.empty()) {
            if (eol == src.size()) break;
            continue;
        }
        try {
            out.push_back(CorpusEntry{line_no, std::string(line), parse(line)});
        } catch (const SyntaxError& e) {
            throw SyntaxError(e.offset, e.expected,
                              std::string(provenance) + ":" + std::to_string(line_no) + ": " +
                                  e.what());
        } catch (const ArityError& e) {
            throw ArityError(e.offset, std::string(provenance) + ":" +
                                           std::to_string(line_no) + ": " + e.what());
        }
        if (eol == src.size()) break;
    }
    return out;
}

Quaternion parse_quaternion(std::string_view src) {
    Quaternion out;
    std::size_t pos = 0;
    const auto skip = [&] {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    };
    bool first = true;
    skip();
    while (true) {
        skip();
        if (pos >= src.size()) break;
        double sign = 1.0;
        if (src[pos] == '+' || src[pos] == '-') {
            sign = src[pos] == '-' ? -1.0 : 1.0;
            ++pos;
            skip();
        } else if (!first) {
            throw SyntaxError(pos, "'+' or '-'",
                              "quaternion syntax error at offset " + std::to_string(pos) +
                                  ": expected '+' or '-' between terms");
        }
        first = false;
        double magnitude = 1.0;
        bool saw_number = false;
        if (pos < src.size() &&
            (std::isdigit(static_cast<unsigned char>(src[pos])) || src[pos] == '.')) {
            const std::string text(src.substr(pos));
            char* stop = nullptr;
            magnitude = std::strtod(text.c_str(), &stop);
            if (stop == text.c_str())
                throw SyntaxError(pos, "number",
                                  "quaternion syntax error at offset " + std::to_string(pos));
            pos += static_cast<std::size_t>(stop - text.c_str());
            saw_number = true;
            skip();
        }
        std::size_t unit = 0;
        if (pos < src.size() && (src[pos] == 'i' || src[pos] == 'j' || src[pos] == 'k')) {
            unit = static_cast<std::size_t>(src[pos] - 'i') + 1;
            ++pos;
        } else if (!saw_number) {
            throw SyntaxError(pos, "number or unit",
                              "quaternion syntax error at offset " + std::to_string(pos) +
                                  ": expected a coefficient or i/j/k");
        }
        out.c[unit] += sign * magnitude;
    }
    return out;
}

}  // namespace regulus::expr
