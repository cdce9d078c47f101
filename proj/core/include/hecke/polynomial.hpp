// Exact multivariate polynomial arithmetic over the rationals, for the
// coefficient ring Q[u_1..u_m, z, y_1..y_{m-1}] used throughout the library.
// Coefficients are arbitrary-precision rationals; terms are kept in a sparse
// map ordered by graded-lexicographic monomial order, which also fixes the
// canonical text form.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

using Rational = boost::multiprecision::cpp_rational;

// Variable universe for a fixed cyclotomic degree m, in declaration order
//   u_1 < u_2 < ... < u_m < z < y_1 < ... < y_{m-1}
// (2m variables total; for m = 1 there are no y's).
struct VarTable {
    int m = 1;

    int count() const { return 2 * m; }
    int u_index(int i) const;  // i in [1, m]
    int z_index() const { return m; }
    int y_index(int k) const;  // k in [1, m-1]

    std::string name(int index) const;
    // Returns the index of a variable name, or std::nullopt if the name does
    // not denote a variable of this table.
    std::optional<int> index_of(const std::string& name) const;
};

// Exponent vector; length always equals VarTable::count() of the owning
// polynomial's table.
using Exponents = std::vector<int>;

// Graded-lexicographic order (total degree first, then lexicographic with
// the earliest variable most significant). Used descending so that a
// polynomial's first stored term is its leading term.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what), position(pos) {}
};

class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(int m) : m_(m) {}

    static Polynomial zero(int m) { return Polynomial(m); }
    static Polynomial constant(int m, const Rational& c);
    static Polynomial variable(int m, int index);
    static Polynomial u(int m, int i);
    static Polynomial z(int m);
    static Polynomial y(int m, int k);

    int m() const { return m_; }
    VarTable table() const { return VarTable{m_}; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The constant term's value (zero polynomial included).
    Rational constant_value() const;
    int total_degree() const;  // -1 for the zero polynomial

    const std::map<Exponents, Rational, GrlexGreater>& terms() const {
        return terms_;
    }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    Polynomial pow(int e) const;

    // Adds c * X^exp in place (merging and dropping zeros).
    void add_term(const Exponents& exp, const Rational& c);

  private:
    int m_ = 1;
    std::map<Exponents, Rational, GrlexGreater> terms_;
};

// i-th elementary symmetric polynomial of u_1..u_m (e_0 = 1).
Polynomial elem_sym(int m, int i);

// Substitutes rational values for the bound variables (by index); unbound
// variables remain symbolic.
Polynomial substitute(const Polynomial& p,
                      const std::map<int, Rational>& bindings);

// Substitutes polynomials for the bound variables (by index).
Polynomial substitute(const Polynomial& p,
                      const std::map<int, Polynomial>& bindings);

// Canonical text form, e.g. "2*u1^2*z - 1/3*y1"; terms in descending
// graded-lex order, unit coefficients and zero exponents elided, "0" for the
// zero polynomial.
std::string to_string(const Polynomial& p);

// Parses the canonical syntax (sums/differences of terms, '*' products,
// '^' natural powers, integer or rational literals, parentheses, and the
// variables of VarTable{m}). Throws ParseError with a character position.
Polynomial parse_polynomial(int m, const std::string& text);

// Exact division: returns q with a == q*b if it exists, std::nullopt
// otherwise. Never leaves the polynomial ring.
std::optional<Polynomial> divide_exact(const Polynomial& a,
                                       const Polynomial& b);

}  // namespace hecke
