#include "ncalg/parse.hpp"

#include <cctype>

namespace ncalg {
namespace {

// ---------------------------------------------------------------------------
// Lexer.

struct Token {
    enum class Kind { ident, integer, punct, end };
    Kind kind = Kind::end;
    std::string text;
    long value = 0;
    int line = 1, col = 1;
};

struct Lexer {
    const std::string& src;
    std::size_t i = 0;
    int line = 1, col = 1;
    Token cur;

    explicit Lexer(const std::string& s) : src(s) { advance(); }

    [[noreturn]] void fail(const std::string& msg, const Token& at) const {
        throw ParseError(msg, at.line, at.col);
    }

    void advance() {
        while (i < src.size()) {
            char c = src[i];
            if (c == '\n') { ++line; col = 1; ++i; continue; }
            if (c == '#') {  // comment to end of line
                while (i < src.size() && src[i] != '\n') ++i;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) { ++col; ++i; continue; }
            break;
        }
        cur = Token{};
        cur.line = line;
        cur.col = col;
        if (i >= src.size()) { cur.kind = Token::Kind::end; return; }
        char c = src[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            cur.kind = Token::Kind::ident;
            cur.text = src.substr(i, j - i);
            col += static_cast<int>(j - i);
            i = j;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            cur.kind = Token::Kind::integer;
            cur.text = src.substr(i, j - i);
            try {
                cur.value = std::stol(cur.text);
            } catch (const std::out_of_range&) {
                throw ParseError("integer literal out of range", line, col);
            }
            col += static_cast<int>(j - i);
            i = j;
            return;
        }
        static const std::string puncts = ";:,+-*()>=";
        if (puncts.find(c) != std::string::npos) {
            cur.kind = Token::Kind::punct;
            cur.text = std::string(1, c);
            ++col;
            ++i;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

    bool is_punct(const char* p) const { return cur.kind == Token::Kind::punct && cur.text == p; }
    bool is_ident(const char* w) const { return cur.kind == Token::Kind::ident && cur.text == w; }

    Token expect_ident(const char* what) {
        if (cur.kind != Token::Kind::ident) fail(std::string("expected ") + what, cur);
        Token t = cur;
        advance();
        return t;
    }
    Token expect_int(const char* what) {
        if (cur.kind != Token::Kind::integer) fail(std::string("expected ") + what, cur);
        Token t = cur;
        advance();
        return t;
    }
    void expect_punct(const char* p) {
        if (!is_punct(p)) fail(std::string("expected '") + p + "'", cur);
        advance();
    }
    // statement terminator: ';' or end of input
    void expect_semicolon() {
        if (cur.kind == Token::Kind::end) return;
        expect_punct(";");
    }
};

// ---------------------------------------------------------------------------
// Expressions. Parsed straight into polynomials over K; generator names are
// resolved against the declared list, so errors carry positions.

template <class K>
struct ExprParser {
    Lexer& lx;
    const FieldSpec& field;
    const std::vector<Generator>& gens;
    const MonomialOrder& order;

    std::uint32_t resolve(const Token& t) const {
        for (std::uint32_t g = 0; g < gens.size(); ++g)
            if (gens[g].name == t.text) return g;
        throw ParseError("unknown generator '" + t.text + "'", t.line, t.col);
    }

    Polynomial<K> constant(long n) const {
        return poly_monomial(order.make_word({}), scalar_from_int<K>(n, field));
    }

    bool at_factor_start() const {
        return lx.cur.kind == Token::Kind::ident || lx.cur.kind == Token::Kind::integer ||
               lx.is_punct("(");
    }

    Polynomial<K> factor() {
        if (lx.cur.kind == Token::Kind::integer) {
            long v = lx.cur.value;
            lx.advance();
            return constant(v);
        }
        if (lx.cur.kind == Token::Kind::ident) {
            std::uint32_t g = resolve(lx.cur);
            lx.advance();
            return poly_monomial(order.make_word({g}), scalar_from_int<K>(1, field));
        }
        if (lx.is_punct("(")) {
            lx.advance();
            Polynomial<K> e = expr();
            lx.expect_punct(")");
            return e;
        }
        lx.fail("expected a factor", lx.cur);
    }

    // product: factors joined by '*' or plain juxtaposition
    Polynomial<K> term() {
        Polynomial<K> p = factor();
        for (;;) {
            if (lx.is_punct("*")) {
                lx.advance();
                p = mul(p, factor(), order);
            } else if (at_factor_start()) {
                p = mul(p, factor(), order);
            } else {
                return p;
            }
        }
    }

    Polynomial<K> expr() {
        bool neg = false;
        if (lx.is_punct("-")) { neg = true; lx.advance(); }
        else if (lx.is_punct("+")) { lx.advance(); }
        Polynomial<K> p = term();
        if (neg) p = negate(p);
        for (;;) {
            if (lx.is_punct("+")) {
                lx.advance();
                p = add(p, term(), order);
            } else if (lx.is_punct("-")) {
                lx.advance();
                p = sub(p, term(), order);
            } else {
                return p;
            }
        }
    }
};

struct Declarations {
    FieldSpec field;
    bool have_field = false;
    std::vector<Generator> gens;
    MonomialOrder order;
    bool have_order = false;
};

// field/gens/order statements are shared between K instantiations.
void parse_field_stmt(Lexer& lx, Declarations& d) {
    Token t = lx.expect_ident("a field name (Q or GF)");
    if (t.text == "Q") {
        d.field = field_rationals();
    } else if (t.text == "GF") {
        lx.expect_punct("(");
        Token p = lx.expect_int("a prime modulus");
        lx.expect_punct(")");
        if (p.value < 2) throw ParseError("modulus must be a prime >= 2", p.line, p.col);
        for (long q = 2; q * q <= p.value; ++q)
            if (p.value % q == 0) throw ParseError("modulus is not prime", p.line, p.col);
        d.field = field_prime(static_cast<std::uint64_t>(p.value));
    } else {
        throw ParseError("unknown field '" + t.text + "' (expected Q or GF(p))", t.line, t.col);
    }
    d.have_field = true;
    lx.expect_semicolon();
}

void parse_gens_stmt(Lexer& lx, Declarations& d) {
    if (lx.cur.kind != Token::Kind::ident)
        lx.fail("expected at least one generator", lx.cur);
    while (lx.cur.kind == Token::Kind::ident) {
        Token name = lx.expect_ident("a generator name");
        int deg = 1;
        if (lx.is_punct(":")) {
            lx.advance();
            Token dt = lx.expect_int("a degree");
            deg = static_cast<int>(dt.value);
            if (deg < 1) throw ParseError("generator degree must be >= 1", dt.line, dt.col);
        }
        if (!valid_identifier(name.text))
            throw ParseError("bad generator name '" + name.text + "'", name.line, name.col);
        d.gens.push_back(Generator{name.text, deg});
    }
    lx.expect_semicolon();
}

void parse_order_stmt(Lexer& lx, Declarations& d) {
    Token kind = lx.expect_ident("an order kind");
    if (kind.text != "deglex")
        throw ParseError("unsupported order '" + kind.text + "' (only deglex)", kind.line, kind.col);
    if (d.gens.empty()) throw ParseError("order must come after gens", kind.line, kind.col);
    std::vector<std::uint32_t> chain;
    Token first = lx.expect_ident("a generator name");
    auto resolve = [&](const Token& t) -> std::uint32_t {
        for (std::uint32_t g = 0; g < d.gens.size(); ++g)
            if (d.gens[g].name == t.text) return g;
        throw ParseError("unknown generator '" + t.text + "' in order", t.line, t.col);
    };
    chain.push_back(resolve(first));
    while (lx.is_punct(">")) {
        lx.advance();
        chain.push_back(resolve(lx.expect_ident("a generator name")));
    }
    if (chain.size() != d.gens.size())
        throw ParseError("order must list every generator exactly once", kind.line, kind.col);
    d.order.rank.assign(d.gens.size(), 0);
    std::vector<bool> seen(d.gens.size(), false);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (seen[chain[i]])
            throw ParseError("generator repeated in order", kind.line, kind.col);
        seen[chain[i]] = true;
        d.order.rank[chain[i]] = static_cast<std::uint32_t>(chain.size() - 1 - i);
    }
    d.order.weight.clear();
    for (const auto& g : d.gens) d.order.weight.push_back(g.degree);
    d.have_order = true;
    lx.expect_semicolon();
}

template <class K>
Presentation<K> parse_presentation_typed(Lexer& lx, Declarations d) {
    Presentation<K> P;
    P.field = d.field;
    P.gens = d.gens;
    P.order = d.order;
    // remaining statements: rels (single occurrence)
    while (lx.cur.kind != Token::Kind::end) {
        Token head = lx.expect_ident("a statement (rels)");
        if (head.text != "rels")
            throw ParseError("unexpected statement '" + head.text + "'", head.line, head.col);
        if (lx.is_punct(";") || lx.cur.kind == Token::Kind::end) {
            lx.expect_semicolon();
            continue;  // empty relation list
        }
        ExprParser<K> ep{lx, P.field, P.gens, P.order};
        for (;;) {
            Token at = lx.cur;
            Polynomial<K> r = ep.expr();
            if (r.is_zero())
                throw ParseError("relation is identically zero", at.line, at.col);
            if (!is_homogeneous(r))
                throw ParseError("inhomogeneous relation", at.line, at.col);
            P.relations.push_back(std::move(r));
            if (lx.is_punct(",")) { lx.advance(); continue; }
            break;
        }
        lx.expect_semicolon();
    }
    validate(P);
    return P;
}

}  // namespace

AnyPresentation parse_presentation(const std::string& text) {
    Lexer lx(text);
    Declarations d;
    // fixed prelude: field, gens, order (in that sequence)
    for (int part = 0; part < 3; ++part) {
        Token head = lx.expect_ident("a statement");
        if (head.text == "field" && part == 0) parse_field_stmt(lx, d);
        else if (head.text == "gens" && part == 1) parse_gens_stmt(lx, d);
        else if (head.text == "order" && part == 2) parse_order_stmt(lx, d);
        else
            throw ParseError("expected '" + std::string(part == 0 ? "field" : part == 1 ? "gens" : "order") +
                                 "' statement, found '" + head.text + "'",
                             head.line, head.col);
    }
    if (d.field.kind == FieldSpec::Kind::rationals)
        return parse_presentation_typed<Rational>(lx, std::move(d));
    return parse_presentation_typed<GFp>(lx, std::move(d));
}

template <class K>
Polynomial<K> parse_poly(const std::string& text, const Presentation<K>& P) {
    Lexer lx(text);
    ExprParser<K> ep{lx, P.field, P.gens, P.order};
    Polynomial<K> p = ep.expr();
    if (lx.cur.kind != Token::Kind::end) lx.fail("trailing input after expression", lx.cur);
    return p;
}

template <class K>
std::vector<Polynomial<K>> parse_poly_list(const std::string& text, const Presentation<K>& P) {
    Lexer lx(text);
    std::vector<Polynomial<K>> out;
    if (lx.cur.kind == Token::Kind::end) return out;
    ExprParser<K> ep{lx, P.field, P.gens, P.order};
    for (;;) {
        out.push_back(ep.expr());
        if (lx.is_punct(",")) { lx.advance(); continue; }
        break;
    }
    if (lx.cur.kind != Token::Kind::end) lx.fail("trailing input after expression list", lx.cur);
    return out;
}

template <class K>
FamilySpec<K> parse_family(const std::string& text, const Presentation<K>& P) {
    Lexer lx(text);
    FamilySpec<K> fam;
    auto member_declared = [&](const std::string& n) { return fam.find(n) != nullptr; };
    while (lx.cur.kind != Token::Kind::end) {
        Token head = lx.expect_ident("'ideal' or 'witness'");
        if (head.text == "ideal") {
            Token name = lx.expect_ident("an ideal name");
            if (member_declared(name.text))
                throw ParseError("duplicate ideal '" + name.text + "'", name.line, name.col);
            lx.expect_punct(":");
            typename FamilySpec<K>::Member m;
            m.name = name.text;
            if (!lx.is_punct(";") && lx.cur.kind != Token::Kind::end) {
                ExprParser<K> ep{lx, P.field, P.gens, P.order};
                for (;;) {
                    Token at = lx.cur;
                    Polynomial<K> g = ep.expr();
                    if (!is_homogeneous(g))
                        throw ParseError("inhomogeneous ideal generator", at.line, at.col);
                    if (!g.is_zero()) m.gens.push_back(std::move(g));
                    if (lx.is_punct(",")) { lx.advance(); continue; }
                    break;
                }
            }
            lx.expect_semicolon();
            fam.members.push_back(std::move(m));
        } else if (head.text == "witness") {
            Token name = lx.expect_ident("an ideal name");
            if (!member_declared(name.text))
                throw ParseError("witness for undeclared ideal '" + name.text + "'", name.line,
                                 name.col);
            lx.expect_punct(":");
            typename FamilySpec<K>::Witness w;
            w.member = name.text;
            Token xkw = lx.expect_ident("'x'");
            if (xkw.text != "x") throw ParseError("expected 'x ='", xkw.line, xkw.col);
            lx.expect_punct("=");
            {
                ExprParser<K> ep{lx, P.field, P.gens, P.order};
                Token at = lx.cur;
                w.x = ep.expr();
                if (w.x.is_zero() || !is_homogeneous(w.x))
                    throw ParseError("witness element must be homogeneous and nonzero", at.line,
                                     at.col);
            }
            lx.expect_punct(",");
            Token jkw = lx.expect_ident("'J'");
            if (jkw.text != "J") throw ParseError("expected 'J ='", jkw.line, jkw.col);
            lx.expect_punct("=");
            Token jname = lx.expect_ident("an ideal name");
            if (!member_declared(jname.text))
                throw ParseError("unknown ideal '" + jname.text + "'", jname.line, jname.col);
            w.J = jname.text;
            lx.expect_punct(",");
            Token nkw = lx.expect_ident("'N'");
            if (nkw.text != "N") throw ParseError("expected 'N ='", nkw.line, nkw.col);
            lx.expect_punct("=");
            Token nname = lx.expect_ident("an ideal name");
            if (!member_declared(nname.text))
                throw ParseError("unknown ideal '" + nname.text + "'", nname.line, nname.col);
            w.N = nname.text;
            lx.expect_semicolon();
            fam.witnesses.push_back(std::move(w));
        } else {
            throw ParseError("expected 'ideal' or 'witness', found '" + head.text + "'", head.line,
                             head.col);
        }
    }
    return fam;
}

template Polynomial<Rational> parse_poly(const std::string&, const Presentation<Rational>&);
template Polynomial<GFp> parse_poly(const std::string&, const Presentation<GFp>&);
template std::vector<Polynomial<Rational>> parse_poly_list(const std::string&,
                                                           const Presentation<Rational>&);
template std::vector<Polynomial<GFp>> parse_poly_list(const std::string&, const Presentation<GFp>&);
template FamilySpec<Rational> parse_family(const std::string&, const Presentation<Rational>&);
template FamilySpec<GFp> parse_family(const std::string&, const Presentation<GFp>&);

}  // namespace ncalg
