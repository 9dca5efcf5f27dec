#include "polyrep/expr.hpp"

#include <cctype>

namespace polyrep {

namespace {

struct Token {
    enum class Kind { Number, Ident, Sym, End };
    Kind kind = Kind::End;
    std::string text;
    Rational number;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
            if (s_[i_] == '\n') ++line_, col_ = 1;
            else ++col_;
            ++i_;
        }
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (i_ >= s_.size()) {
            tok_.kind = Token::Kind::End;
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_.kind = Token::Kind::Number;
            tok_.text = s_.substr(i_, j - i_);
            tok_.number = Rational(BigInt(tok_.text));
            col_ += static_cast<int>(j - i_);
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_.kind = Token::Kind::Ident;
            tok_.text = s_.substr(i_, j - i_);
            col_ += static_cast<int>(j - i_);
            i_ = j;
            return;
        }
        static const std::string syms = "+-*/^()[]{},";
        if (syms.find(c) != std::string::npos) {
            tok_.kind = Token::Kind::Sym;
            tok_.text = std::string(1, c);
            ++col_;
            ++i_;
            return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", line_, col_);
    }

    const std::string& s_;
    size_t i_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s) {}

    ExprAst parse_all() {
        ExprAst e = expr();
        if (lex_.peek().kind != Token::Kind::End)
            throw SyntaxError("trailing input (expected end, '+', '-', '*', '/', or '^')",
                              lex_.peek().line, lex_.peek().col);
        return e;
    }

private:
    bool is_sym(const char* s) const {
        return lex_.peek().kind == Token::Kind::Sym && lex_.peek().text == s;
    }

    void expect_sym(const char* s) {
        if (!is_sym(s))
            throw SyntaxError(std::string("expected '") + s + "'", lex_.peek().line,
                              lex_.peek().col);
        lex_.next();
    }

    ExprAst expr() {
        ExprAst sum;
        sum.kind = ExprAst::Kind::Add;
        sum.line = lex_.peek().line;
        sum.col = lex_.peek().col;
        bool neg = false;
        if (is_sym("-")) {
            lex_.next();
            neg = true;
        } else if (is_sym("+")) {
            lex_.next();
        }
        ExprAst first = term();
        if (neg) {
            ExprAst n;
            n.kind = ExprAst::Kind::Neg;
            n.line = first.line;
            n.col = first.col;
            n.kids.push_back(std::move(first));
            sum.kids.push_back(std::move(n));
        } else {
            sum.kids.push_back(std::move(first));
        }
        while (is_sym("+") || is_sym("-")) {
            bool minus = lex_.peek().text == "-";
            lex_.next();
            ExprAst t = term();
            if (minus) {
                ExprAst n;
                n.kind = ExprAst::Kind::Neg;
                n.line = t.line;
                n.col = t.col;
                n.kids.push_back(std::move(t));
                sum.kids.push_back(std::move(n));
            } else {
                sum.kids.push_back(std::move(t));
            }
        }
        if (sum.kids.size() == 1) return std::move(sum.kids[0]);
        return sum;
    }

    bool starts_atom() const {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Number || t.kind == Token::Kind::Ident) return true;
        return t.kind == Token::Kind::Sym &&
               (t.text == "(" || t.text == "[" || t.text == "{");
    }

    ExprAst term() {
        ExprAst prod;
        prod.kind = ExprAst::Kind::Mul;
        prod.line = lex_.peek().line;
        prod.col = lex_.peek().col;
        prod.kids.push_back(factor());
        while (true) {
            if (is_sym("*")) {
                lex_.next();
                prod.kids.push_back(factor());
            } else if (is_sym("/")) {
                lex_.next();
                ExprAst d;
                d.kind = ExprAst::Kind::Div;
                ExprAst rhs = factor();
                d.line = rhs.line;
                d.col = rhs.col;
                ExprAst lhs = std::move(prod);
                if (lhs.kids.size() == 1) lhs = std::move(lhs.kids[0]);
                d.kids.push_back(std::move(lhs));
                d.kids.push_back(std::move(rhs));
                prod = ExprAst{};
                prod.kind = ExprAst::Kind::Mul;
                prod.line = d.line;
                prod.col = d.col;
                prod.kids.push_back(std::move(d));
            } else if (starts_atom()) {
                prod.kids.push_back(factor()); // juxtaposition
            } else {
                break;
            }
        }
        if (prod.kids.size() == 1) return std::move(prod.kids[0]);
        return prod;
    }

    ExprAst factor() {
        ExprAst a = atom();
        if (is_sym("^")) {
            lex_.next();
            const Token& t = lex_.peek();
            if (t.kind != Token::Kind::Number)
                throw SyntaxError("expected nonnegative integer exponent", t.line, t.col);
            Token e = lex_.next();
            ExprAst p;
            p.kind = ExprAst::Kind::Pow;
            p.line = a.line;
            p.col = a.col;
            p.exponent = static_cast<int>(numerator(e.number).convert_to<long long>());
            p.kids.push_back(std::move(a));
            return p;
        }
        return a;
    }

    ExprAst atom() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Number) {
            Token n = lex_.next();
            ExprAst a;
            a.kind = ExprAst::Kind::Number;
            a.number = n.number;
            a.line = n.line;
            a.col = n.col;
            return a;
        }
        if (t.kind == Token::Kind::Ident) {
            Token n = lex_.next();
            ExprAst a;
            a.kind = ExprAst::Kind::Ident;
            a.ident = n.text;
            a.line = n.line;
            a.col = n.col;
            return a;
        }
        if (is_sym("(")) {
            lex_.next();
            ExprAst e = expr();
            expect_sym(")");
            return e;
        }
        if (is_sym("[") || is_sym("{")) {
            bool comm = lex_.peek().text == "[";
            Token open = lex_.next();
            ExprAst a;
            a.kind = comm ? ExprAst::Kind::Comm : ExprAst::Kind::AntiComm;
            a.line = open.line;
            a.col = open.col;
            a.kids.push_back(expr());
            expect_sym(",");
            a.kids.push_back(expr());
            expect_sym(comm ? "]" : "}");
            return a;
        }
        throw SyntaxError("expected number, identifier, '(', '[' or '{'", t.line, t.col);
    }

    Lexer lex_;
};

Scalar as_scalar(const AlgElement& e, int line, int col) {
    Scalar s(0);
    for (auto& [w, c] : e.terms()) {
        if (!w.is_one())
            throw SyntaxError("expected a scalar (word-free) expression here", line, col);
        s += c;
    }
    return s;
}

} // namespace

ExprAst parse(const std::string& text) {
    Parser p(text);
    return p.parse_all();
}

AlgElement lower(const ExprAst& ast, const Presentation& p) {
    switch (ast.kind) {
        case ExprAst::Kind::Number:
            return AlgElement(Scalar(ast.number));
        case ExprAst::Kind::Ident: {
            if (auto g = p.find_gen(ast.ident)) return AlgElement::gen(*g);
            if (auto s = p.resolve_param(ast.ident)) return AlgElement(*s);
            throw UnknownIdent("unknown identifier '" + ast.ident + "' in presentation '" +
                                   p.name + "'",
                               ast.line, ast.col);
        }
        case ExprAst::Kind::Add: {
            AlgElement r;
            for (auto& k : ast.kids) r += lower(k, p);
            return r;
        }
        case ExprAst::Kind::Neg:
            return -lower(ast.kids[0], p);
        case ExprAst::Kind::Mul: {
            AlgElement r = AlgElement::one();
            for (auto& k : ast.kids) r = r * lower(k, p);
            return r;
        }
        case ExprAst::Kind::Div: {
            AlgElement lhs = lower(ast.kids[0], p);
            Scalar d = as_scalar(lower(ast.kids[1], p), ast.kids[1].line, ast.kids[1].col);
            if (d.is_zero()) throw DivisionByZero();
            return lhs * (Scalar(1) / d);
        }
        case ExprAst::Kind::Pow: {
            if (ast.exponent < 0)
                throw SyntaxError("negative exponent", ast.line, ast.col);
            return lower(ast.kids[0], p).pow(ast.exponent);
        }
        case ExprAst::Kind::Comm: {
            AlgElement a = lower(ast.kids[0], p), b = lower(ast.kids[1], p);
            return commutator_raw(a, b);
        }
        case ExprAst::Kind::AntiComm: {
            AlgElement a = lower(ast.kids[0], p), b = lower(ast.kids[1], p);
            return anticommutator_raw(a, b);
        }
    }
    throw Error("bad AST");
}

std::string format(const AlgElement& e) { return e.to_text(); }
std::string format(const Scalar& s) { return s.to_text(); }

AlgElement parse_element(const std::string& text, const Presentation& p) {
    return lower(parse(text), p);
}

Scalar parse_scalar(const std::string& text, const Presentation& p) {
    AlgElement e = parse_element(text, p);
    Scalar s(0);
    for (auto& [w, c] : e.terms()) {
        if (!w.is_one()) throw Error("expected scalar, got words: " + text);
        s += c;
    }
    return s;
}

} // namespace polyrep
