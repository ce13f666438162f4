#ifndef POLYA_ENUMAPPS_HPP
#define POLYA_ENUMAPPS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polya/config.hpp"
#include "polya/finite_field.hpp"
#include "polya/multipoly.hpp"
#include "polya/perm.hpp"
#include "polya/series.hpp"

namespace polya {

// Point counts of one variety over the extension tower: values[r-1] is the
// number of points over the field with q^r elements.  q is carried along as
// declared input; the formula layer only consumes the counts.
struct CountVector {
    long long q = 0;
    std::vector<long long> values;
};

// Number of orbit classes of colorings: the cycle index evaluated with every
// variable set to the color count.
BigInt polya_count(const PermGroup& g, long long colors);

// Weighted coloring census over t_1..t_r: substitutes the power sums
// t_1^j + ... + t_r^j for x_j in the cycle index.  Homogeneous of degree n;
// the coefficient of t_1^{k_1}...t_r^{k_r} counts orbits using color i
// exactly k_i times.
MultiPoly polya_weight_poly(const PermGroup& g, int r_colors);

// Cycle index evaluated at the count vector; the result is always an
// integer for genuine point counts, and a non-integer value is reported as
// an inconsistent input.
BigInt quotient_point_count(const PermGroup& g, const CountVector& counts);

// Value of the symmetric-group cycle index at given arguments, evaluated by
// summing over cycle types directly (no group enumeration, no series).
Rational symmetric_cycle_index_value(const std::vector<Rational>& args, int n);

// Same for the alternating group, via the signed-argument identity; n = 0, 1
// yield the trivial-group values.
Rational alternating_cycle_index_value(const std::vector<Rational>& args, int n);

// exp(sum values[r-1] t^r / r) truncated at the requested order.  Each
// coefficient is cross-checked internally against the cycle-type evaluation
// of the symmetric cycle index.
TruncatedSeries zeta_from_counts(const CountVector& counts, unsigned order);

// Z(t) + 1/Z(-t) - 1 - N_1 t; coefficients n >= 2 carry the alternating
// quotient counts, cross-checked internally like zeta_from_counts.
TruncatedSeries alt_zeta_from_counts(const CountVector& counts, unsigned order);

// Exhaustive solution counts of a polynomial system over the extension
// tower F_{q^r}, r = 1..r_max.  Equations are integer-coefficient
// polynomials over the named variables; q must be prime.
CountVector brute_force_affine_counts(const std::vector<std::string>& vars,
                                      const std::vector<MultiPoly>& equations,
                                      long long q, int r_max,
                                      std::uint64_t budget = kDefaultEnumBudget);

// Discriminant of x^n + t_1 x^{n-1} + ... + t_n as a polynomial in t_1..t_n,
// computed as (-1)^{n(n-1)/2} times the Sylvester resultant of the
// polynomial and its derivative.
MultiPoly discriminant_poly(int n);

struct DiscriminantCensus {
    long long zero = 0;  // fiber over 0
    long long qr = 0;    // fibers over nonzero squares
    long long qnr = 0;   // fibers over non-squares
    long long double_cover_total = 0;  // solutions of y^2 = discriminant
};

// Exhaustive census of discriminant values over all q^n coefficient tuples,
// q an odd prime.  Asserts the structural identities zero = q^{n-1},
// qr = qnr, and double cover total = q^n before returning.
DiscriminantCensus discriminant_census(int n, long long q,
                                       std::uint64_t budget = kDefaultEnumBudget);

}  // namespace polya

#endif
