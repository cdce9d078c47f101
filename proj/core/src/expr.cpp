#include "hecke/expr.hpp"

#include <cctype>

namespace hecke {

namespace {

class ExprParser {
  public:
    ExprParser(int m, int n, const std::string& text)
        : m_(m), n_(n), text_(text) {}

    Element parse() {
        Element x = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return x;
    }

  private:
    int m_, n_;
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Element expr() {
        bool neg = eat('-');
        Element acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Element term() {
        Element acc = factor();
        while (eat('*')) acc = mul(acc, factor());
        return acc;
    }

    Element factor() {
        Element base = atom();
        if (eat('^')) {
            skip_ws();
            std::size_t at = pos_;
            if (pos_ >= text_.size() ||
                !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected exponent", at);
            long e = 0;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                e = e * 10 + (text_[pos_++] - '0');
            base = elt_pow(base, static_cast<int>(e));
        }
        return base;
    }

    int read_uint(const char* what) {
        std::size_t at = pos_;
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(std::string("expected ") + what, at);
        long v = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            v = v * 10 + (text_[pos_++] - '0');
        return static_cast<int>(v);
    }

    Element scalar(const Polynomial& p) {
        return Element::unit(m_, n_) * p;
    }

    Element atom() {
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", at);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Element x = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return x;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational num(read_uint("number"));
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                std::size_t dat = pos_;
                Rational den(read_uint("denominator"));
                if (den == 0) throw ParseError("division by zero", dat);
                num /= den;
            }
            return scalar(Polynomial::constant(m_, num));
        }
        switch (c) {
            case 't':
                ++pos_;
                return jm(m_, n_, 1);
            case 's': {
                ++pos_;
                int i = read_uint("generator index");
                if (i < 1 || i > n_ - 1)
                    throw ParseError("s index out of range", at);
                return Element::perm_elt(m_, n_, Permutation::adjacent(n_, i));
            }
            case 'J': {
                ++pos_;
                int k = read_uint("strand index");
                if (k < 1 || k > n_) throw ParseError("J index out of range", at);
                return jm(m_, n_, k);
            }
            case 'T': {
                ++pos_;
                int k = read_uint("strand index");
                if (k < 1 || k > n_) throw ParseError("T index out of range", at);
                return tk(m_, n_, k);
            }
            case 'L': {
                ++pos_;
                int k = read_uint("strand index");
                if (k < 1 || k > n_) throw ParseError("L index out of range", at);
                return lk(m_, n_, k);
            }
            case 'u':
            case 'y':
            case 'z': {
                std::string name(1, c);
                ++pos_;
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    name += text_[pos_++];
                auto idx = VarTable{m_}.index_of(name);
                if (!idx)
                    throw ParseError("unknown variable '" + name + "'", at);
                return scalar(Polynomial::variable(m_, *idx));
            }
            default:
                throw ParseError(std::string("unexpected character '") + c + "'",
                                 at);
        }
    }
};

}  // namespace

Element parse_expr(int m, int n, const std::string& text) {
    return ExprParser(m, n, text).parse();
}

}  // namespace hecke
