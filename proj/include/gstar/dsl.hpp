// Theory-definition language: lexer, AST, parser, and serializer.
//
// A theory file is an ASCII description of a field theory: header line,
// theory name, base dimension, Lie algebra table, field variables with
// degrees, derivation tables, substitutions, Lagrangians, and declared check
// suites.  Expressions use `^` or `*` for the graded product (with `expr ^ n`
// as the n-th power when n is an integer literal), `[a,b]` for the Lie
// bracket, `d_A`/`d` for the covariant/horizontal differential, `Tr(...)`
// for the invariant pairing, `u_(1,2)` for jet coordinates, and `$u` for the
// vertical variation of u.
//
// Every parse failure carries a stable diagnostic code:
//   E001 syntax error            E002 unknown symbol
//   E003 degree mismatch         E004 no fields declared
//   E005 bad or missing header   E006 unknown theory name
//   E007 duplicate declaration   E008 table differs from the built-in theory
//   E009 unknown suite           W001 odd square normalizes to zero
// (E001/E004/E005/E007 arise during parsing; the rest during loading.)

#pragma once

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "gstar/poly.hpp"

namespace gstar::dsl {

struct Diagnostic {
    std::string code;
    int line = 0, col = 0;
    std::string message;
    std::string str() const {
        std::ostringstream os;
        os << code << " at " << line << ":" << col << ": " << message;
        return os.str();
    }
};

class ParseError : public std::runtime_error {
  public:
    Diagnostic diag;
    explicit ParseError(Diagnostic d) : std::runtime_error(d.str()), diag(std::move(d)) {}
};

// ---- Expression AST -----------------------------------------------------

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    enum class Kind { Num, Sym, Var, Neg, Add, Sub, Mul, Pow, Bracket, Tr, DH, DA };
    Kind kind;
    Rat num;                // Num
    std::string name;       // Sym / Var
    std::vector<int> jets;  // Sym
    int power = 0;          // Pow
    std::vector<ExprPtr> kids;
    int line = 0, col = 0;
};

inline ExprPtr make_expr(Expr::Kind k, int line, int col) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->line = line;
    e->col = col;
    return e;
}

// ---- File AST -----------------------------------------------------------

struct FieldDecl {
    std::string name;
    int ghost = 0;
    int indices = 0;  // abstract index slots (indexed theories); 0 = component
    int line = 0, col = 0;
};

struct DerivRow {
    std::string lhs;
    ExprPtr rhs;
    int line = 0, col = 0;
};

struct DerivDecl {
    std::string name;
    int ghost = 0;
    std::vector<DerivRow> rows;
};

struct SubstDecl {
    std::string name;
    std::vector<DerivRow> rows;
};

struct LagDecl {
    std::string name;
    ExprPtr expr;
};

struct TheoryFile {
    std::string name;
    int base_dim = 1;
    std::string base_coord = "x";
    std::string algebra;  // "su2" | "abelian"
    int algebra_dim = 0;
    std::vector<FieldDecl> fields;
    std::vector<std::string> rules;
    std::vector<DerivDecl> derivations;
    std::vector<SubstDecl> substitutions;
    std::vector<LagDecl> lagrangians;
    std::vector<std::string> suites;
};

// ---- Lexer --------------------------------------------------------------

namespace detail {

struct Token {
    enum class Kind { End, Ident, Int, Punct };
    Kind kind = Kind::End;
    std::string text;
    long value = 0;  // Int
    int line = 0, col = 0;
    bool glued = false;  // no whitespace before this token
};

class Lexer {
  public:
    explicit Lexer(std::string src) : src_(std::move(src)) { advance(); }
    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        bool glued = true;
        for (;;) {
            if (pos_ >= src_.size()) {
                tok_ = {Token::Kind::End, "", 0, line_, col_, glued};
                return;
            }
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') bump();
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                glued = false;
                bump();
                continue;
            }
            break;
        }
        int l = line_, co = col_;
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string s;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                s += src_[pos_];
                bump();
            }
            tok_ = {Token::Kind::Ident, s, 0, l, co, glued};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = 0;
            std::string s;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                v = v * 10 + (src_[pos_] - '0');
                s += src_[pos_];
                bump();
            }
            tok_ = {Token::Kind::Int, s, v, l, co, glued};
            return;
        }
        if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            bump();
            bump();
            tok_ = {Token::Kind::Punct, "->", 0, l, co, glued};
            return;
        }
        bump();
        tok_ = {Token::Kind::Punct, std::string(1, c), 0, l, co, glued};
    }
    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

}  // namespace detail

// ---- Parser -------------------------------------------------------------

class Parser {
  public:
    explicit Parser(const std::string& src) : lex_(src) {}

    TheoryFile parse_file() {
        expect_header();
        TheoryFile f;
        bool fields_seen = false;
        while (lex_.peek().kind != detail::Token::Kind::End) {
            detail::Token t = expect_ident("section keyword");
            const std::string& k = t.text;
            if (k == "theory") {
                if (!f.name.empty()) fail("E007", t, "duplicate 'theory' declaration");
                f.name = parse_hyphen_name("theory name");
            } else if (k == "base") {
                f.base_dim = static_cast<int>(expect_int("base dimension").value);
                if (lex_.peek().kind == detail::Token::Kind::Ident)
                    f.base_coord = lex_.next().text;
            } else if (k == "algebra") {
                f.algebra = expect_ident("algebra name").text;
                if (lex_.peek().kind == detail::Token::Kind::Int)
                    f.algebra_dim = static_cast<int>(lex_.next().value);
            } else if (k == "fields") {
                if (fields_seen) fail("E007", t, "duplicate 'fields' section");
                fields_seen = true;
                parse_fields(f);
            } else if (k == "rules") {
                expect_punct("{");
                while (!accept_punct("}")) f.rules.push_back(parse_hyphen_name("rule name"));
            } else if (k == "derivation") {
                DerivDecl d;
                d.name = expect_ident("derivation name").text;
                expect_keyword("ghost");
                d.ghost = expect_signed_int();
                d.rows = parse_rows();
                check_dup_deriv(f, d.name, t);
                f.derivations.push_back(std::move(d));
            } else if (k == "substitution") {
                SubstDecl s;
                s.name = expect_ident("substitution name").text;
                s.rows = parse_rows();
                f.substitutions.push_back(std::move(s));
            } else if (k == "lagrangian") {
                LagDecl l;
                l.name = expect_ident("lagrangian name").text;
                expect_punct("=");
                l.expr = parse_expr();
                f.lagrangians.push_back(std::move(l));
            } else if (k == "suites") {
                expect_punct("{");
                while (!accept_punct("}")) f.suites.push_back(parse_hyphen_name("suite name"));
            } else {
                fail("E001", t, "unknown section keyword '" + k + "'");
            }
        }
        if (!fields_seen || f.fields.empty()) {
            detail::Token t = lex_.peek();
            fail("E004", t, "no fields declared");
        }
        return f;
    }

    // Parse a standalone expression (for --seed and similar flags).
    ExprPtr parse_single_expr() {
        expect_header();
        ExprPtr e = parse_expr();
        if (lex_.peek().kind != detail::Token::Kind::End)
            fail("E001", lex_.peek(), "trailing input after expression");
        return e;
    }

  private:
    void expect_header() {
        detail::Token a = lex_.next();
        bool ok = a.kind == detail::Token::Kind::Ident && a.text == "gstar";
        detail::Token b = lex_.next();
        ok = ok && b.kind == detail::Token::Kind::Punct && b.text == "-";
        detail::Token c = lex_.next();
        ok = ok && c.kind == detail::Token::Kind::Ident && c.text == "theory";
        detail::Token d = lex_.next();
        ok = ok && d.kind == detail::Token::Kind::Ident && d.text == "v1";
        if (!ok) fail("E005", a, "missing or malformed 'gstar-theory v1' header line");
    }

    void parse_fields(TheoryFile& f) {
        expect_punct("{");
        while (!accept_punct("}")) {
            FieldDecl fd;
            detail::Token t = expect_ident("field name");
            fd.name = t.text;
            fd.line = t.line;
            fd.col = t.col;
            expect_punct(":");
            expect_keyword("ghost");
            fd.ghost = expect_signed_int();
            if (lex_.peek().kind == detail::Token::Kind::Ident &&
                lex_.peek().text == "indices") {
                lex_.next();
                fd.indices = static_cast<int>(expect_int("index count").value);
            }
            for (auto& other : f.fields)
                if (other.name == fd.name)
                    fail("E007", t, "duplicate field '" + fd.name + "'");
            f.fields.push_back(std::move(fd));
        }
    }

    std::vector<DerivRow> parse_rows() {
        expect_punct("{");
        std::vector<DerivRow> rows;
        while (!accept_punct("}")) {
            DerivRow r;
            detail::Token t = expect_ident("generator name");
            r.lhs = t.text;
            r.line = t.line;
            r.col = t.col;
            expect_punct("->");
            r.rhs = parse_expr();
            rows.push_back(std::move(r));
        }
        return rows;
    }

    void check_dup_deriv(const TheoryFile& f, const std::string& name, const detail::Token& t) {
        for (auto& d : f.derivations)
            if (d.name == name) fail("E007", t, "duplicate derivation '" + name + "'");
    }

    // expr := term (('+'|'-') term)*
    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        for (;;) {
            if (accept_punct("+")) {
                auto n = make_expr(Expr::Kind::Add, e->line, e->col);
                n->kids.push_back(std::move(e));
                n->kids.push_back(parse_term());
                e = std::move(n);
            } else if (peek_minus_not_row()) {
                lex_.next();
                auto n = make_expr(Expr::Kind::Sub, e->line, e->col);
                n->kids.push_back(std::move(e));
                n->kids.push_back(parse_term());
                e = std::move(n);
            } else {
                return e;
            }
        }
    }

    // A '-' inside a row list could start "name -> ..." of the next row only
    // via "->", which the lexer fuses; a bare '-' always continues the sum.
    bool peek_minus_not_row() {
        return lex_.peek().kind == detail::Token::Kind::Punct && lex_.peek().text == "-";
    }

    // term := factor ('*' factor)*
    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        for (;;) {
            if (accept_punct("*")) {
                auto n = make_expr(Expr::Kind::Mul, e->line, e->col);
                n->kids.push_back(std::move(e));
                n->kids.push_back(parse_factor());
                e = std::move(n);
            } else {
                return e;
            }
        }
    }

    // factor := ('-'|'+') factor | atom ('^' factor')*, where `^ n` with an
    // integer literal is the n-th power of the preceding atom (binding
    // tighter than '*') and `^ expr` is the graded product.
    ExprPtr parse_factor() {
        detail::Token t = lex_.peek();
        if (t.kind == detail::Token::Kind::Punct && (t.text == "-" || t.text == "+")) {
            lex_.next();
            if (t.text == "+") return parse_factor();
            auto n = make_expr(Expr::Kind::Neg, t.line, t.col);
            n->kids.push_back(parse_factor());
            return n;
        }
        ExprPtr e = parse_atom();
        while (lex_.peek().kind == detail::Token::Kind::Punct && lex_.peek().text == "^") {
            lex_.next();
            if (lex_.peek().kind == detail::Token::Kind::Int) {
                auto n = make_expr(Expr::Kind::Pow, e->line, e->col);
                n->power = static_cast<int>(lex_.next().value);
                n->kids.push_back(std::move(e));
                e = std::move(n);
            } else {
                auto n = make_expr(Expr::Kind::Mul, e->line, e->col);
                n->kids.push_back(std::move(e));
                n->kids.push_back(parse_factor());
                e = std::move(n);
            }
        }
        return e;
    }

    ExprPtr parse_atom() {
        detail::Token t = lex_.next();
        if (t.kind == detail::Token::Kind::Int) {
            auto n = make_expr(Expr::Kind::Num, t.line, t.col);
            Rat v(t.value);
            if (lex_.peek().kind == detail::Token::Kind::Punct && lex_.peek().text == "/") {
                lex_.next();
                detail::Token d = expect_int("denominator");
                if (d.value == 0) fail("E001", d, "zero denominator");
                v /= Rat(d.value);
            }
            n->num = v;
            return n;
        }
        if (t.kind == detail::Token::Kind::Punct && t.text == "$") {
            detail::Token id = expect_ident("variation target");
            if (!id.glued) fail("E001", id, "'$' must be glued to a name");
            auto n = make_expr(Expr::Kind::Var, t.line, t.col);
            n->name = id.text;
            return n;
        }
        if (t.kind == detail::Token::Kind::Punct && t.text == "(") {
            ExprPtr e = parse_expr();
            expect_punct(")");
            return e;
        }
        if (t.kind == detail::Token::Kind::Punct && t.text == "[") {
            auto n = make_expr(Expr::Kind::Bracket, t.line, t.col);
            n->kids.push_back(parse_expr());
            expect_punct(",");
            n->kids.push_back(parse_expr());
            expect_punct("]");
            return n;
        }
        if (t.kind == detail::Token::Kind::Ident) {
            if (t.text == "Tr") {
                expect_punct("(");
                auto n = make_expr(Expr::Kind::Tr, t.line, t.col);
                n->kids.push_back(parse_expr());
                expect_punct(")");
                return n;
            }
            if (t.text == "d_A") {
                auto n = make_expr(Expr::Kind::DA, t.line, t.col);
                n->kids.push_back(parse_atom());
                return n;
            }
            if (t.text == "d") {
                auto n = make_expr(Expr::Kind::DH, t.line, t.col);
                n->kids.push_back(parse_atom());
                return n;
            }
            auto n = make_expr(Expr::Kind::Sym, t.line, t.col);
            n->name = t.text;
            // Jet suffix: an identifier ending in '_' glued to '(ints)'.
            if (!n->name.empty() && n->name.back() == '_' &&
                lex_.peek().kind == detail::Token::Kind::Punct && lex_.peek().text == "(" &&
                lex_.peek().glued) {
                n->name.pop_back();
                lex_.next();
                for (;;) {
                    n->jets.push_back(static_cast<int>(expect_int("jet index").value));
                    if (accept_punct(",")) continue;
                    expect_punct(")");
                    break;
                }
            }
            return n;
        }
        fail("E001", t, "unexpected token '" + t.text + "'");
        return nullptr;  // unreachable
    }

    // A name that may contain interior hyphens with no surrounding space,
    // e.g. "susy-qm-flat" or "k-sequence".
    std::string parse_hyphen_name(const std::string& what) {
        std::string n = expect_ident(what).text;
        while (lex_.peek().kind == detail::Token::Kind::Punct && lex_.peek().text == "-" &&
               lex_.peek().glued) {
            lex_.next();
            detail::Token t = lex_.next();
            if ((t.kind != detail::Token::Kind::Ident && t.kind != detail::Token::Kind::Int) ||
                !t.glued)
                fail("E001", t, "malformed hyphenated name");
            n += "-" + t.text;
            // Segments such as "4d" lex as an integer followed by a glued
            // identifier; reassemble them.
            while ((lex_.peek().kind == detail::Token::Kind::Ident ||
                    lex_.peek().kind == detail::Token::Kind::Int) &&
                   lex_.peek().glued)
                n += lex_.next().text;
        }
        return n;
    }

    // -- token helpers --
    detail::Token expect_ident(const std::string& what) {
        detail::Token t = lex_.next();
        if (t.kind != detail::Token::Kind::Ident)
            fail("E001", t, "expected " + what + ", found '" + t.text + "'");
        return t;
    }
    detail::Token expect_int(const std::string& what) {
        detail::Token t = lex_.next();
        if (t.kind != detail::Token::Kind::Int)
            fail("E001", t, "expected " + what + ", found '" + t.text + "'");
        return t;
    }
    int expect_signed_int() {
        int sign = 1;
        if (lex_.peek().kind == detail::Token::Kind::Punct && lex_.peek().text == "-") {
            lex_.next();
            sign = -1;
        }
        return sign * static_cast<int>(expect_int("integer").value);
    }
    void expect_keyword(const std::string& k) {
        detail::Token t = lex_.next();
        if (t.kind != detail::Token::Kind::Ident || t.text != k)
            fail("E001", t, "expected '" + k + "'");
    }
    void expect_punct(const std::string& p) {
        detail::Token t = lex_.next();
        if (t.kind != detail::Token::Kind::Punct || t.text != p)
            fail("E001", t, "expected '" + p + "', found '" + t.text + "'");
    }
    bool accept_punct(const std::string& p) {
        if (lex_.peek().kind == detail::Token::Kind::Punct && lex_.peek().text == p) {
            lex_.next();
            return true;
        }
        if (lex_.peek().kind == detail::Token::Kind::End && p == "}")
            fail("E001", lex_.peek(), "unterminated section: expected '}'");
        return false;
    }
    [[noreturn]] void fail(const char* code, const detail::Token& t, std::string msg) {
        throw ParseError({code, t.line, t.col, std::move(msg)});
    }

    detail::Lexer lex_;
};

inline TheoryFile parse(const std::string& source) { return Parser(source).parse_file(); }
inline ExprPtr parse_expression(const std::string& source) {
    return Parser("gstar-theory v1 " + source).parse_single_expr();
}

// ---- Serializer ---------------------------------------------------------

inline void serialize_expr(const Expr& e, std::ostream& os, int parent_prec = 0) {
    // precedence: 1 sum, 2 product, 3 atom
    switch (e.kind) {
        case Expr::Kind::Num: {
            os << e.num;
            break;
        }
        case Expr::Kind::Sym: {
            os << e.name;
            if (!e.jets.empty()) {
                os << "_(";
                for (size_t i = 0; i < e.jets.size(); ++i)
                    os << (i ? "," : "") << e.jets[i];
                os << ")";
            }
            break;
        }
        case Expr::Kind::Var: os << "$" << e.name; break;
        case Expr::Kind::Neg:
            if (parent_prec > 1) os << "(";
            os << "-";
            serialize_expr(*e.kids[0], os, 2);
            if (parent_prec > 1) os << ")";
            break;
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
            if (parent_prec > 1) os << "(";
            serialize_expr(*e.kids[0], os, 1);
            os << (e.kind == Expr::Kind::Add ? " + " : " - ");
            serialize_expr(*e.kids[1], os, 2);
            if (parent_prec > 1) os << ")";
            break;
        case Expr::Kind::Mul:
            if (parent_prec > 2) os << "(";
            serialize_expr(*e.kids[0], os, 2);
            os << "*";
            serialize_expr(*e.kids[1], os, 3);
            if (parent_prec > 2) os << ")";
            break;
        case Expr::Kind::Pow:
            serialize_expr(*e.kids[0], os, 3);
            os << "^" << e.power;
            break;
        case Expr::Kind::Bracket:
            os << "[";
            serialize_expr(*e.kids[0], os, 0);
            os << ", ";
            serialize_expr(*e.kids[1], os, 0);
            os << "]";
            break;
        case Expr::Kind::Tr:
            os << "Tr(";
            serialize_expr(*e.kids[0], os, 0);
            os << ")";
            break;
        case Expr::Kind::DH:
            os << "d ";
            serialize_expr(*e.kids[0], os, 3);
            break;
        case Expr::Kind::DA:
            os << "d_A ";
            serialize_expr(*e.kids[0], os, 3);
            break;
    }
}

inline std::string serialize_expr(const Expr& e) {
    std::ostringstream os;
    serialize_expr(e, os);
    return os.str();
}

inline std::string serialize(const TheoryFile& f) {
    std::ostringstream os;
    os << "gstar-theory v1\n\n";
    os << "theory " << f.name << "\n";
    os << "base " << f.base_dim << " " << f.base_coord << "\n";
    if (!f.algebra.empty()) {
        os << "algebra " << f.algebra;
        if (f.algebra_dim) os << " " << f.algebra_dim;
        os << "\n";
    }
    os << "\nfields {\n";
    for (auto& fd : f.fields) {
        os << "  " << fd.name << " : ghost " << fd.ghost;
        if (fd.indices) os << " indices " << fd.indices;
        os << "\n";
    }
    os << "}\n";
    if (!f.rules.empty()) {
        os << "\nrules {";
        for (auto& r : f.rules) os << " " << r;
        os << " }\n";
    }
    for (auto& d : f.derivations) {
        os << "\nderivation " << d.name << " ghost " << d.ghost << " {\n";
        for (auto& r : d.rows)
            os << "  " << r.lhs << " -> " << serialize_expr(*r.rhs) << "\n";
        os << "}\n";
    }
    for (auto& s : f.substitutions) {
        os << "\nsubstitution " << s.name << " {\n";
        for (auto& r : s.rows)
            os << "  " << r.lhs << " -> " << serialize_expr(*r.rhs) << "\n";
        os << "}\n";
    }
    for (auto& l : f.lagrangians)
        os << "\nlagrangian " << l.name << " = " << serialize_expr(*l.expr) << "\n";
    if (!f.suites.empty()) {
        os << "\nsuites {";
        for (auto& s : f.suites) os << " " << s;
        os << " }\n";
    }
    return os.str();
}

}  // namespace gstar::dsl
