#include "symchev/parse.hpp"

#include <cctype>

namespace symchev {

namespace {

class PolyParser {
  public:
    PolyParser(const std::string& s, RingPtr ring) : s_(s), ring_(std::move(ring)) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    const std::string& s_;
    RingPtr ring_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        bool neg = accept('-');
        Poly p = term();
        if (neg) p = -p;
        while (true) {
            if (accept('+'))
                p = p + term();
            else if (accept('-'))
                p = p - term();
            else
                return p;
        }
    }

    Poly term() {
        Poly p = factor();
        while (accept('*')) p = p * factor();
        return p;
    }

    Poly factor() {
        Poly p = primary();
        while (accept('^')) {
            long k = integer("exponent");
            if (k < 0) fail("negative exponent");
            p = p.pow(static_cast<int>(k));
        }
        return p;
    }

    Poly primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return coefficient();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        fail("expected coefficient, variable or '('");
    }

    Poly coefficient() {
        Int num = natural("coefficient");
        if (accept('/')) {
            std::size_t at = pos_;
            Int den = natural("denominator");
            if (den == 0) throw ParseError("zero denominator", at);
            return Poly::constant(ring_, rat(num, den));
        }
        return Poly::constant(ring_, Rat(num));
    }

    Poly variable() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        int idx = ring_->var_index(name);
        if (idx < 0) throw ParseError("unknown identifier '" + name + "'", start);
        return Poly::variable(ring_, idx);
    }

    Int natural(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail(std::string("expected ") + what);
        return Int(s_.substr(start, pos_ - start));
    }

    long integer(const char* what) {
        skip_ws();
        bool neg = accept('-');
        Int n = natural(what);
        if (!n.fits_slong_p()) fail("exponent too large");
        return neg ? -n.get_si() : n.get_si();
    }
};

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) { return PolyParser(text, ring).run(); }

}  // namespace symchev
