#include "fano/parser.hpp"

#include <cctype>
#include <sstream>

#include "fano/errors.hpp"

namespace fano {

bool Expr::operator==(const Expr& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::number: return value == o.value;
        case Kind::symbol: return name == o.name;
        case Kind::pow:
            return exponent == o.exponent && kids == o.kids;
        default:
            return kids == o.kids;
    }
}

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            if (text[pos] == '\n') { ++line; col = 1; }
            else ++col;
            ++pos;
        }
    }

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line, col); }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            ++col;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool at_number() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    bool at_symbol() {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    Q number() {
        skip_space();
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits += text[pos++];
            ++col;
        }
        if (digits.empty()) fail("expected a number");
        return q_parse(digits);
    }

    std::string symbol() {
        skip_space();
        std::string name;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            name += text[pos++];
            ++col;
        }
        if (name.empty()) fail("expected a symbol");
        return name;
    }
};

struct Parser {
    Lexer lex;

    explicit Parser(const std::string& t) : lex(t) {}

    Expr parse() {
        Expr e = expr();
        if (lex.peek() != '\0') lex.fail("trailing input");
        return e;
    }

    Expr expr() {
        bool lead_neg = false;
        if (lex.accept('-')) lead_neg = true;
        else lex.accept('+');
        Expr left = term();
        if (lead_neg) {
            Expr n;
            n.kind = Expr::Kind::neg;
            n.kids.push_back(std::move(left));
            left = std::move(n);
        }
        while (true) {
            if (lex.accept('+')) {
                Expr n;
                n.kind = Expr::Kind::add;
                n.kids.push_back(std::move(left));
                n.kids.push_back(term());
                left = std::move(n);
            } else if (lex.accept('-')) {
                Expr n;
                n.kind = Expr::Kind::sub;
                n.kids.push_back(std::move(left));
                n.kids.push_back(term());
                left = std::move(n);
            } else {
                return left;
            }
        }
    }

    Expr term() {
        Expr left = factor();
        while (true) {
            if (lex.accept('*')) {
                Expr n;
                n.kind = Expr::Kind::mul;
                n.kids.push_back(std::move(left));
                n.kids.push_back(factor());
                left = std::move(n);
            } else if (lex.accept('/')) {
                Expr n;
                n.kind = Expr::Kind::div;
                n.kids.push_back(std::move(left));
                n.kids.push_back(factor());
                left = std::move(n);
            } else {
                return left;
            }
        }
    }

    Expr factor() {
        Expr b = base();
        if (!lex.accept('^')) return b;
        Expr p;
        p.kind = Expr::Kind::pow;
        p.kids.push_back(std::move(b));
        p.exponent = exponent();
        return p;
    }

    Q exponent() {
        if (lex.at_number()) return lex.number();
        if (lex.accept('-')) return -lex.number();
        lex.expect('(');
        bool neg = lex.accept('-');
        Q num = lex.number();
        Q result = num;
        if (lex.accept('/')) {
            Q den = lex.number();
            if (den == 0) lex.fail("zero exponent denominator");
            result = num / den;
        }
        lex.expect(')');
        return neg ? Q(-result) : result;
    }

    Expr base() {
        if (lex.accept('(')) {
            Expr e = expr();
            lex.expect(')');
            return e;
        }
        if (lex.at_number()) {
            Expr e;
            e.kind = Expr::Kind::number;
            e.value = lex.number();
            return e;
        }
        if (lex.at_symbol()) {
            Expr e;
            e.kind = Expr::Kind::symbol;
            e.name = lex.symbol();
            return e;
        }
        lex.fail("expected a number, symbol, or parenthesized expression");
    }
};

int prec(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::add:
        case Expr::Kind::sub:
        case Expr::Kind::neg: return 1;
        case Expr::Kind::mul:
        case Expr::Kind::div: return 2;
        case Expr::Kind::pow: return 3;
        default: return 4;
    }
}

void print_rec(const Expr& e, std::ostream& os, int parent_prec) {
    bool parens = prec(e) < parent_prec;
    if (parens) os << "(";
    switch (e.kind) {
        case Expr::Kind::number:
            os << q_str(e.value);
            break;
        case Expr::Kind::symbol:
            os << e.name;
            break;
        case Expr::Kind::neg:
            os << "-";
            print_rec(e.kids[0], os, 2);
            break;
        case Expr::Kind::add:
            print_rec(e.kids[0], os, 1);
            os << "+";
            print_rec(e.kids[1], os, 2);
            break;
        case Expr::Kind::sub:
            print_rec(e.kids[0], os, 1);
            os << "-";
            print_rec(e.kids[1], os, 2);
            break;
        case Expr::Kind::mul:
            print_rec(e.kids[0], os, 2);
            os << "*";
            print_rec(e.kids[1], os, 3);
            break;
        case Expr::Kind::div:
            print_rec(e.kids[0], os, 2);
            os << "/";
            print_rec(e.kids[1], os, 3);
            break;
        case Expr::Kind::pow: {
            print_rec(e.kids[0], os, 4);
            os << "^";
            if (q_is_integer(e.exponent) && e.exponent >= 0) {
                os << q_str(e.exponent);
            } else {
                os << "(" << q_str(e.exponent) << ")";
            }
            break;
        }
    }
    if (parens) os << ")";
}

} // namespace

Expr parse_expression(const std::string& text) {
    Parser p(text);
    return p.parse();
}

std::string print_expression(const Expr& e) {
    std::ostringstream os;
    print_rec(e, os, 1);
    return os.str();
}

std::set<std::string> expr_symbols(const Expr& e) {
    std::set<std::string> out;
    if (e.kind == Expr::Kind::symbol) out.insert(e.name);
    for (const Expr& k : e.kids) {
        auto sub = expr_symbols(k);
        out.insert(sub.begin(), sub.end());
    }
    return out;
}

namespace {

RatExpr to_rat(const Expr& e, unsigned conductor) {
    switch (e.kind) {
        case Expr::Kind::number:
            return RatExpr(Poly(Cyclo(e.value)));
        case Expr::Kind::symbol:
            if (e.name == "w") {
                if (conductor <= 1)
                    throw error("symbol w needs a conductor greater than 1");
                return RatExpr(Poly(Cyclo::zeta(conductor)));
            }
            return RatExpr::variable(intern_symbol(e.name));
        case Expr::Kind::neg:
            return -to_rat(e.kids[0], conductor);
        case Expr::Kind::add:
            return to_rat(e.kids[0], conductor) + to_rat(e.kids[1], conductor);
        case Expr::Kind::sub:
            return to_rat(e.kids[0], conductor) - to_rat(e.kids[1], conductor);
        case Expr::Kind::mul:
            return to_rat(e.kids[0], conductor) * to_rat(e.kids[1], conductor);
        case Expr::Kind::div: {
            RatExpr d = to_rat(e.kids[1], conductor);
            if (d.is_zero()) throw error("division by zero in expression");
            return to_rat(e.kids[0], conductor) / d;
        }
        case Expr::Kind::pow: {
            if (!q_is_integer(e.exponent))
                throw error("fractional exponent outside a radical context: ^" +
                            q_str(e.exponent));
            long k = static_cast<long>(e.exponent.get_num().get_si());
            return to_rat(e.kids[0], conductor).pow(k);
        }
    }
    throw error("unreachable expression kind");
}

} // namespace

RatExpr expr_to_ratexpr(const Expr& e, unsigned conductor) {
    return to_rat(e, conductor);
}

Poly expr_to_poly(const Expr& e, unsigned conductor) {
    RatExpr r = to_rat(e, conductor);
    if (!r.is_poly()) {
        r.reduce_in_place();
        FANO_CHECK(r.is_poly(), "expression is not a polynomial");
    }
    return r.as_poly();
}

Poly parse_poly(const std::string& text, unsigned conductor) {
    return expr_to_poly(parse_expression(text), conductor);
}

RatExpr parse_ratexpr(const std::string& text, unsigned conductor) {
    return expr_to_ratexpr(parse_expression(text), conductor);
}

} // namespace fano
