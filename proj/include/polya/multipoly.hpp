#ifndef POLYA_MULTIPOLY_HPP
#define POLYA_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polya/rational.hpp"

namespace polya {

// Exponent vector; one entry per declared variable.
using Monomial = std::vector<std::uint32_t>;

// Graded lexicographic order, largest first: higher total degree wins, ties
// broken by the leftmost differing exponent.  Used both as the term order of
// MultiPoly and as the canonical printing order.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse exact multivariate polynomial over an ordered list of named formal
// variables.  No zero coefficients are stored; equality is term-by-term.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

    MultiPoly() = default;  // zero polynomial over the empty variable list
    explicit MultiPoly(std::vector<std::string> vars);

    static MultiPoly constant(const Rational& c, std::vector<std::string> vars = {});
    static MultiPoly variable(const std::string& name, const std::vector<std::string>& vars);
    static MultiPoly monomial(const Monomial& m, const Rational& c,
                              const std::vector<std::string>& vars);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Requires is_constant(); the zero polynomial yields 0.
    Rational constant_value() const;

    // Total degree of the leading term; -1 for the zero polynomial.
    int total_degree() const;
    // Highest exponent of one variable; -1 for the zero polynomial.
    int degree_in(const std::string& name) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scale(const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    bool operator==(const MultiPoly& o) const = default;

    // Composition: each assigned variable is replaced by its image (which
    // must live over out_vars); unassigned variables map to themselves and
    // must therefore appear in out_vars.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& assignment,
                         const std::vector<std::string>& out_vars) const;

    // Full evaluation; every variable occurring in the polynomial needs a value.
    Rational evaluate(const std::map<std::string, Rational>& values) const;

    // Re-expresses the polynomial over a different variable list, which must
    // contain every variable that occurs with a nonzero exponent.
    MultiPoly with_vars(const std::vector<std::string>& new_vars) const;

    // Splits into coefficients of powers of one variable; the returned
    // polynomials live over the variable list with `name` removed.
    std::map<unsigned, MultiPoly> coefficients_of(const std::string& name) const;

    // Canonical text form: monomials in graded-lex order, e.g.
    // "1/2*x_1^2 + 1/2*x_2", "t_1^2 - 4*t_2", "0".
    std::string str() const;

    // Inverse of str(); also accepts parenthesized integer-coefficient
    // expressions with + - * ^ and rational literals "p/q".
    static MultiPoly parse(const std::string& text, const std::vector<std::string>& vars);

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void add_term(const Monomial& m, const Rational& c);
    void require_same_vars(const MultiPoly& o) const;
    std::size_t var_index(const std::string& name) const;  // npos if absent
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// x_1..x_n style variable lists.
std::vector<std::string> indexed_vars(const std::string& stem, unsigned n);

}  // namespace polya

#endif
