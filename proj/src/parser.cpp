#include <cctype>

#include "disc/ncpoly.hpp"

namespace disc {

namespace {

struct ExprParser {
    const std::string& s;
    const AlgebraPresentation& pres;
    size_t pos = 0;

    ExprParser(const std::string& text, const AlgebraPresentation& p) : s(text), pres(p) {}

    void skip() {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos, msg); }

    long integer() {
        skip();
        size_t start = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }

    std::string ident() {
        skip();
        size_t start = pos;
        if (pos < s.size() &&
            (isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        while (pos < s.size() &&
               (isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    NCPoly expr() {
        bool neg = eat('-');
        NCPoly r = term();
        if (neg) r = Scalar(-1) * r;
        for (;;) {
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                return r;
        }
    }

    NCPoly term() {
        NCPoly r = factor();
        while (eat('*')) r = nc_mul(r, factor(), pres);
        return r;
    }

    NCPoly factor() {
        NCPoly b = base();
        if (eat('^')) {
            skip();
            if (pos < s.size() && s[pos] == '-') fail("negative exponent");
            long e = integer();
            return nc_pow(b, static_cast<int>(e), pres);
        }
        return b;
    }

    NCPoly base() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            NCPoly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        char c = s[pos];
        if (isdigit(static_cast<unsigned char>(c))) {
            long num = integer();
            if (eat('/')) {
                long den = integer();
                if (den == 0) fail("zero denominator");
                return Scalar(Rat(num, den)) * NCPoly::one();
            }
            return Scalar(num) * NCPoly::one();
        }
        size_t start = pos;
        std::string name = ident();
        if (name.empty()) fail("expected scalar, identifier, or '('");
        if (name == "zeta" && peek('(')) {
            eat('(');
            long m = integer();
            if (!eat(',')) fail("expected ',' in zeta(m,k)");
            skip();
            bool kneg = eat('-');
            long k = integer();
            if (kneg) k = -k;
            if (!eat(')')) fail("expected ')' in zeta(m,k)");
            if (m < 1) fail("zeta order must be positive");
            return Scalar::root_of_unity(static_cast<int>(m), k) * NCPoly::one();
        }
        int g = pres.gen_index(name);
        if (g < 0) throw ParseError(start, "unknown identifier '" + name + "'");
        return NCPoly::from_word({g});
    }
};

}  // namespace

NCPoly parse_expr(const std::string& text, const AlgebraPresentation& pres) {
    ExprParser p(text, pres);
    NCPoly r = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return normal_form(r, pres);
}

Word parse_word(const std::string& text, const AlgebraPresentation& pres) {
    ExprParser p(text, pres);
    Word w;
    for (;;) {
        std::string name = p.ident();
        if (name.empty()) p.fail("expected generator name");
        int g = pres.gen_index(name);
        if (g < 0) p.fail("unknown generator '" + name + "'");
        long e = 1;
        if (p.eat('^')) e = p.integer();
        for (long i = 0; i < e; ++i) w.push_back(g);
        if (!p.eat('*')) break;
    }
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return w;
}

}  // namespace disc
