#include "hecke/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hecke {

namespace {

std::string rational_to_string(const Rational& q) {
    std::ostringstream out;
    out << numerator(q);
    if (denominator(q) != 1) out << '/' << denominator(q);
    return out.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// VarTable

int VarTable::u_index(int i) const {
    if (i < 1 || i > m) throw std::out_of_range("u index out of range");
    return i - 1;
}

int VarTable::y_index(int k) const {
    if (k < 1 || k > m - 1) throw std::out_of_range("y index out of range");
    return m + k;
}

std::string VarTable::name(int index) const {
    if (index < 0 || index >= count()) throw std::out_of_range("variable index");
    if (index < m) return "u" + std::to_string(index + 1);
    if (index == m) return "z";
    return "y" + std::to_string(index - m);
}

std::optional<int> VarTable::index_of(const std::string& s) const {
    if (s == "z") return m;
    if (s.size() >= 2 && (s[0] == 'u' || s[0] == 'y')) {
        for (std::size_t i = 1; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        int k = std::stoi(s.substr(1));
        if (s[0] == 'u' && k >= 1 && k <= m) return k - 1;
        if (s[0] == 'y' && k >= 1 && k <= m - 1) return m + k;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Monomial order

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;  // lexicographic, earliest variable most significant
}

// ---------------------------------------------------------------------------
// Polynomial basics

Polynomial Polynomial::constant(int m, const Rational& c) {
    Polynomial p(m);
    if (c != 0) p.terms_.emplace(Exponents(VarTable{m}.count(), 0), c);
    return p;
}

Polynomial Polynomial::variable(int m, int index) {
    VarTable vt{m};
    if (index < 0 || index >= vt.count()) throw std::out_of_range("variable index");
    Polynomial p(m);
    Exponents e(vt.count(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Polynomial Polynomial::u(int m, int i) { return variable(m, VarTable{m}.u_index(i)); }
Polynomial Polynomial::z(int m) { return variable(m, VarTable{m}.z_index()); }
Polynomial Polynomial::y(int m, int k) { return variable(m, VarTable{m}.y_index(k)); }

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    Exponents zero(VarTable{m_}.count(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& lead = terms_.begin()->first;  // descending grlex: max degree
    return std::accumulate(lead.begin(), lead.end(), 0);
}

void Polynomial::add_term(const Exponents& exp, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(m_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial r = *this;
    r += rhs;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    Polynomial r = *this;
    r -= rhs;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    Polynomial r(m_);
    Exponents e(VarTable{m_}.count(), 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(m_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    return m_ == rhs.m_ && terms_ == rhs.terms_;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    Polynomial r = constant(m_, 1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

// ---------------------------------------------------------------------------
// Elementary symmetric polynomials

Polynomial elem_sym(int m, int i) {
    if (i < 0 || i > m) throw std::out_of_range("elem_sym index");
    if (i == 0) return Polynomial::constant(m, 1);
    // e_i via the product expansion prod_j (1 + u_j X), coefficient of X^i.
    std::vector<Polynomial> coeff;  // coeff[d] = e_d of the prefix
    coeff.push_back(Polynomial::constant(m, 1));
    for (int j = 1; j <= m; ++j) {
        Polynomial uj = Polynomial::u(m, j);
        coeff.push_back(Polynomial::zero(m));
        for (int d = static_cast<int>(coeff.size()) - 1; d >= 1; --d)
            coeff[d] += coeff[d - 1] * uj;
    }
    return coeff[i];
}

// ---------------------------------------------------------------------------
// Substitution

Polynomial substitute(const Polynomial& p, const std::map<int, Rational>& b) {
    Polynomial r(p.m());
    const int n = VarTable{p.m()}.count();
    for (const auto& [e, c] : p.terms()) {
        Rational coeff = c;
        Exponents rem(n, 0);
        for (int i = 0; i < n; ++i) {
            auto it = b.find(i);
            if (it == b.end()) {
                rem[i] = e[i];
            } else {
                for (int k = 0; k < e[i]; ++k) coeff *= it->second;
            }
        }
        r.add_term(rem, coeff);
    }
    return r;
}

Polynomial substitute(const Polynomial& p, const std::map<int, Polynomial>& b) {
    Polynomial r(p.m());
    const int n = VarTable{p.m()}.count();
    for (const auto& [e, c] : p.terms()) {
        Polynomial term = Polynomial::constant(p.m(), c);
        Exponents rem(n, 0);
        for (int i = 0; i < n; ++i) {
            auto it = b.find(i);
            if (it == b.end())
                rem[i] = e[i];
            else if (e[i] > 0)
                term *= it->second.pow(e[i]);
        }
        Polynomial mono(p.m());
        mono.add_term(rem, Rational(1));
        r += term * mono;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Canonical text form

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    VarTable vt = p.table();
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string vars;
        for (int i = 0; i < vt.count(); ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += vt.name(i);
            if (e[i] > 1) vars += '^' + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out << rational_to_string(mag);
        } else {
            if (mag != 1) out << rational_to_string(mag) << '*';
            out << vars;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Parser (recursive descent over the canonical syntax)

namespace {

class PolyParser {
  public:
    PolyParser(int m, const std::string& text) : m_(m), text_(text) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return p;
    }

  private:
    int m_;
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

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr() {
        bool neg = eat('-');
        Polynomial acc = term();
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

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (eat('^')) {
            std::size_t at = pos_;
            skip_ws();
            at = pos_;
            if (pos_ >= text_.size() ||
                !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected exponent", at);
            long e = 0;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                e = e * 10 + (text_[pos_++] - '0');
            base = base.pow(static_cast<int>(e));
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", at);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name(1, c);
            ++pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                name += text_[pos_++];
            auto idx = VarTable{m_}.index_of(name);
            if (!idx) throw ParseError("unknown variable '" + name + "'", at);
            return Polynomial::variable(m_, *idx);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", at);
    }

    Polynomial number() {
        auto read_int = [&]() {
            std::size_t at = pos_;
            if (pos_ >= text_.size() ||
                !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected number", at);
            Rational v(0);
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                v = v * 10 + (text_[pos_++] - '0');
            return v;
        };
        Rational num = read_int();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::size_t at = pos_;
            Rational den = read_int();
            if (den == 0) throw ParseError("division by zero", at);
            num /= den;
        }
        return Polynomial::constant(m_, num);
    }
};

}  // namespace

Polynomial parse_polynomial(int m, const std::string& text) {
    return PolyParser(m, text).parse();
}

// ---------------------------------------------------------------------------
// Exact division

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) return std::nullopt;
    Polynomial q(a.m());
    Polynomial r = a;
    const auto& bl = *b.terms().begin();  // leading term of the divisor
    while (!r.is_zero()) {
        const auto& rl = *r.terms().begin();
        Exponents diff(rl.first.size());
        for (std::size_t i = 0; i < diff.size(); ++i) {
            diff[i] = rl.first[i] - bl.first[i];
            if (diff[i] < 0) return std::nullopt;  // not divisible
        }
        Polynomial t(a.m());
        t.add_term(diff, rl.second / bl.second);
        q += t;
        r -= t * b;
    }
    return q;
}

}  // namespace hecke
