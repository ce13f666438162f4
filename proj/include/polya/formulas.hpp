#ifndef POLYA_FORMULAS_HPP
#define POLYA_FORMULAS_HPP

#include <string>
#include <vector>

#include "polya/graded.hpp"
#include "polya/perm.hpp"
#include "polya/series.hpp"

namespace polya {

// The series variable of generating functions.
inline const std::string kSeriesVar = "t";

// Rational generating function in t: numerator/denominator are exact
// polynomials over vars(map) + u + t, the denominator has constant term 1,
// and expansion * denominator = numerator up to the truncation order.
struct RationalGF {
    MultiPoly numerator;
    MultiPoly denominator;
    TruncatedSeries expansion;
};

// Per-element product formula: L_u(g . phi^{tensor n}) equals the product
// over cycle lengths r of L_{u^r}(phi^r)^{m_r(g)}.  Holds over any
// coefficient field, no divisions involved.
MultiPoly conjugacy_trace_formula(const Permutation& g, const GradedMap& phi);

// Cycle-index evaluation: substitutes x_r -> L_{u^r}(phi^r) into the cycle
// index of G; equals the Lefschetz polynomial of phi^{tensor n} restricted
// to the G-invariants, n = degree of G.
MultiPoly invariant_lefschetz_formula(const PermGroup& g, const GradedMap& phi);

// Product over degrees of det(I - block_i u^i t)^{(-1)^{i+1}}: odd-degree
// determinants in the numerator, even-degree ones in the denominator.  The
// t^n coefficient of the expansion is the symmetric-group invariant value.
RationalGF sym_generating_function(const GradedMap& phi, unsigned order);

// Alternating analogue: S(t) + 1/S(-t) - 1 - L_u(phi) t where S is the
// symmetric expansion.  Coefficients 0 and 1 carry the trivial-group values,
// coefficients n >= 2 the alternating-group invariant values.
TruncatedSeries alt_generating_function(const GradedMap& phi, unsigned order);

// Same series assembled from the +phi determinant products instead of
// series substitution; an independent arithmetic route kept as a
// cross-check.
TruncatedSeries alt_generating_function_det_path(const GradedMap& phi, unsigned order);

// Literal combination S(t) + 1/S(-t) - (1 + L_u(phi)), subtracting both
// correction terms at t^0.  Kept alongside the t-graded version because the
// two readings differ at coefficients 0 and 1 only.
TruncatedSeries alt_generating_function_raw(const GradedMap& phi, unsigned order);

// Poincare polynomial of the quotient: cycle-index formula applied to the
// identity map of a graded space with the given Betti numbers.
MultiPoly quotient_poincare(const PermGroup& g, const std::vector<unsigned>& betti);

// Hodge-weighted series over {x, y, u}: product over (p, q) of
// (1 - x^p y^q u^{p+q} t)^{(-1)^{p+q+1} h^{p,q}}, expanded via series
// inversion and multiplication.
TruncatedSeries cheah_hodge_series(const HodgeDiamond& hodge, unsigned order);

// Hodge polynomial of the quotient by G: cycle-index formula applied to the
// diagonal Hodge operator; polynomial in x, y, u.
MultiPoly hodge_quotient(const PermGroup& g, const HodgeDiamond& hodge);

}  // namespace polya

#endif
