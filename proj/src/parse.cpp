#include "qgalois/parse.hpp"

#include <cctype>

#include "qgalois/errors.hpp"

namespace qgalois {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }
};

long parse_int(Cursor& cur) {
    cur.skip_ws();
    size_t start = cur.pos;
    bool neg = false;
    if (cur.pos < cur.text.size() && (cur.text[cur.pos] == '-' || cur.text[cur.pos] == '+')) {
        neg = cur.text[cur.pos] == '-';
        ++cur.pos;
    }
    if (cur.pos >= cur.text.size() || !std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
        throw ParseError("expected integer", start);
    long v = 0;
    while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
        v = v * 10 + (cur.text[cur.pos] - '0');
        ++cur.pos;
    }
    return neg ? -v : v;
}

Cyclotomic scalar_sum(Cursor& cur, int order);

// number | z[^k] | ( sum )
Cyclotomic scalar_atom(Cursor& cur, int order) {
    char c = cur.peek();
    if (c == '(') {
        cur.expect('(');
        Cyclotomic v = scalar_sum(cur, order);
        cur.expect(')');
        return v;
    }
    if (c == 'z') {
        ++cur.pos;
        long k = 1;
        if (cur.accept('^')) k = parse_int(cur);
        return Cyclotomic::root_power(order, k);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        long num = parse_int(cur);
        if (cur.accept('/')) {
            size_t dpos = cur.pos;
            long den = parse_int(cur);
            if (den <= 0) throw ParseError("denominator must be positive", dpos);
            return Cyclotomic(order, rat(num, den));
        }
        return Cyclotomic(order, Rational(num));
    }
    cur.fail("expected scalar");
}

Cyclotomic scalar_product(Cursor& cur, int order) {
    bool neg = false;
    while (cur.peek() == '-' || cur.peek() == '+') {
        if (cur.accept('-')) neg = !neg;
        else cur.accept('+');
    }
    Cyclotomic v = scalar_atom(cur, order);
    while (cur.accept('*')) v *= scalar_atom(cur, order);
    return neg ? -v : v;
}

Cyclotomic scalar_sum(Cursor& cur, int order) {
    Cyclotomic v = scalar_product(cur, order);
    while (true) {
        char c = cur.peek();
        if (c == '+') {
            cur.expect('+');
            v += scalar_product(cur, order);
        } else if (c == '-') {
            cur.expect('-');
            v -= scalar_product(cur, order);
        } else {
            return v;
        }
    }
}

int gen_index(Cursor& cur, const Presentation& pres) {
    cur.skip_ws();
    for (int i = 0; i < 2; ++i) {
        const std::string& g = pres.gens[i];
        if (cur.text.compare(cur.pos, g.size(), g) == 0) {
            cur.pos += g.size();
            return i;
        }
    }
    return -1;
}

// [scalar-atom | gen[^k]] ('*' ...)* — factors multiplied in written order
AlgebraElement element_term(Cursor& cur, const PresentationPtr& pres) {
    const int order = pres->n;
    bool neg = false;
    while (cur.peek() == '-' || cur.peek() == '+') {
        if (cur.accept('-')) neg = !neg;
        else cur.accept('+');
    }
    AlgebraElement acc = AlgebraElement::unit(pres);
    bool any = false;
    while (true) {
        char c = cur.peek();
        size_t at = cur.pos;
        if (c == 'z' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
            Cyclotomic s = scalar_atom(cur, order);
            acc = acc.scaled(s);
            any = true;
        } else {
            int gi = gen_index(cur, *pres);
            if (gi < 0) {
                if (!any) {
                    if (std::isalpha(static_cast<unsigned char>(c)))
                        throw ParseError("unknown generator name", at);
                    cur.fail("expected term");
                }
                break;
            }
            long e = 1;
            if (cur.accept('^')) e = parse_int(cur);
            AlgebraElement g = gi == 0 ? AlgebraElement::monomial(pres, e, 0, Cyclotomic::one(order))
                                       : [&] {
                                             if (e < 0)
                                                 throw ParseError("negative power of a nilpotent generator", at);
                                             return AlgebraElement::monomial(pres, 0, 1,
                                                                             Cyclotomic::one(order))
                                                 .pow(e);
                                         }();
            acc = multiply(acc, g);
            any = true;
        }
        if (!cur.accept('*')) break;
    }
    return neg ? -acc : acc;
}

}  // namespace

Cyclotomic parse_scalar(const std::string& text, int order) {
    Cursor cur{text};
    Cyclotomic v = scalar_sum(cur, order);
    if (!cur.eof()) cur.fail("unexpected trailing input");
    return v;
}

AlgebraElement parse_element(const std::string& text, const PresentationPtr& pres) {
    Cursor cur{text};
    AlgebraElement v = element_term(cur, pres);
    while (!cur.eof()) {
        char c = cur.peek();
        if (c == '+') {
            cur.expect('+');
            v += element_term(cur, pres);
        } else if (c == '-') {
            cur.expect('-');
            v -= element_term(cur, pres);
        } else {
            cur.fail("expected '+' or '-'");
        }
    }
    return v;
}

std::string format_element(const AlgebraElement& e) { return e.str(); }

}  // namespace qgalois
