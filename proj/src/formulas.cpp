#include "polya/formulas.hpp"

#include <map>
#include <stdexcept>

namespace polya {

MultiPoly conjugacy_trace_formula(const Permutation& g, const GradedMap& phi) {
    CycleType ct = g.cycle_type();
    auto out_vars = lefschetz_vars(phi);
    MultiPoly result = MultiPoly::constant(Rational(1), out_vars);
    for (int r = 1; r <= ct.n(); ++r) {
        int m = ct.counts[static_cast<std::size_t>(r - 1)];
        if (m == 0) continue;
        result = result * lefschetz_at(phi, static_cast<unsigned>(r)).pow(
                              static_cast<unsigned>(m));
    }
    return result;
}

MultiPoly invariant_lefschetz_formula(const PermGroup& g, const GradedMap& phi) {
    int n = g.degree();
    MultiPoly zg = cycle_index(g);
    auto out_vars = lefschetz_vars(phi);
    std::map<std::string, MultiPoly> assignment;
    for (int r = 1; r <= n; ++r)
        assignment.emplace(zg.vars()[static_cast<std::size_t>(r - 1)],
                           lefschetz_at(phi, static_cast<unsigned>(r)));
    return zg.substitute(assignment, out_vars);
}

namespace {

// Multiplies det(I - sign * block_i u^i t) into numerator (odd i) or
// denominator (even i).
void det_products(const GradedMap& phi, int sign, MultiPoly& num, MultiPoly& den) {
    auto vars_u = lefschetz_vars(phi);
    for (int i = 0; i <= phi.space().top_degree(); ++i) {
        if (phi.space().dim(i) == 0) continue;
        Monomial ui(vars_u.size(), 0);
        ui.back() = static_cast<std::uint32_t>(i);
        MultiPoly scalar = MultiPoly::monomial(ui, Rational(sign), vars_u);
        const SquareMatrix& block = phi.block(i);
        // lift entries to vars + u before scaling by u^i
        SquareMatrix lifted(block.dim(), vars_u);
        for (std::size_t a = 0; a < block.dim(); ++a)
            for (std::size_t b = 0; b < block.dim(); ++b)
                lifted.set(a, b, block.at(a, b).with_vars(vars_u));
        MultiPoly det = det_one_minus_tA(lifted.scale(scalar), lifted.dim(), kSeriesVar);
        if (i % 2 == 1) num = num * det;
        else den = den * det;
    }
}

}  // namespace

RationalGF sym_generating_function(const GradedMap& phi, unsigned order) {
    auto vars_u = lefschetz_vars(phi);
    auto vars_ut = vars_u;
    vars_ut.push_back(kSeriesVar);
    MultiPoly num = MultiPoly::constant(Rational(1), vars_ut);
    MultiPoly den = num;
    det_products(phi, 1, num, den);
    TruncatedSeries expansion = poly_to_series(num, kSeriesVar, order) *
                                poly_to_series(den, kSeriesVar, order).inverse();
    return RationalGF{std::move(num), std::move(den), std::move(expansion)};
}

TruncatedSeries alt_generating_function(const GradedMap& phi, unsigned order) {
    TruncatedSeries s = sym_generating_function(phi, order).expansion;
    TruncatedSeries result = s + s.negate_t().inverse();
    const auto& vars = result.vars();
    result.set_coefficient(0, result.coefficient(0) - MultiPoly::constant(Rational(1), vars));
    if (order >= 1)
        result.set_coefficient(1, result.coefficient(1) - lefschetz(phi));
    return result;
}

TruncatedSeries alt_generating_function_det_path(const GradedMap& phi, unsigned order) {
    auto vars_u = lefschetz_vars(phi);
    auto vars_ut = vars_u;
    vars_ut.push_back(kSeriesVar);
    MultiPoly num_minus = MultiPoly::constant(Rational(1), vars_ut);
    MultiPoly den_minus = num_minus;
    det_products(phi, 1, num_minus, den_minus);
    // second product has +block_i u^i t; its even-degree determinants sit in
    // the numerator because the outer exponent is (-1)^{i+1}
    MultiPoly den_plus = MultiPoly::constant(Rational(1), vars_ut);
    MultiPoly num_plus = den_plus;
    det_products(phi, -1, den_plus, num_plus);
    TruncatedSeries first = poly_to_series(num_minus, kSeriesVar, order) *
                            poly_to_series(den_minus, kSeriesVar, order).inverse();
    TruncatedSeries second = poly_to_series(num_plus, kSeriesVar, order) *
                             poly_to_series(den_plus, kSeriesVar, order).inverse();
    TruncatedSeries result = first + second;
    const auto& vars = result.vars();
    result.set_coefficient(0, result.coefficient(0) - MultiPoly::constant(Rational(1), vars));
    if (order >= 1)
        result.set_coefficient(1, result.coefficient(1) - lefschetz(phi));
    return result;
}

TruncatedSeries alt_generating_function_raw(const GradedMap& phi, unsigned order) {
    TruncatedSeries s = sym_generating_function(phi, order).expansion;
    TruncatedSeries result = s + s.negate_t().inverse();
    const auto& vars = result.vars();
    MultiPoly correction = MultiPoly::constant(Rational(1), vars) + lefschetz(phi);
    result.set_coefficient(0, result.coefficient(0) - correction);
    return result;
}

MultiPoly quotient_poincare(const PermGroup& g, const std::vector<unsigned>& betti) {
    return invariant_lefschetz_formula(g, GradedMap::from_betti(betti));
}

TruncatedSeries cheah_hodge_series(const HodgeDiamond& hodge, unsigned order) {
    std::vector<std::string> vars = {"x", "y", kLefschetzVar};
    TruncatedSeries result = TruncatedSeries::one(order, vars);
    for (const auto& [pq, h] : hodge) {
        if (h == 0) continue;
        auto [p, q] = pq;
        if (p < 0 || q < 0)
            throw std::invalid_argument("cheah_hodge_series: Hodge indices must be nonnegative");
        Monomial m = {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q),
                      static_cast<std::uint32_t>(p + q)};
        TruncatedSeries factor = TruncatedSeries::one(order, vars);
        if (order >= 1)
            factor.set_coefficient(1, MultiPoly::monomial(m, Rational(-1), vars));
        // (1 - x^p y^q u^{p+q} t)^{(-1)^{p+q+1} h}
        long exponent = ((p + q) % 2 == 0) ? -static_cast<long>(h) : static_cast<long>(h);
        result = result * factor.pow_int(exponent);
    }
    return result;
}

MultiPoly hodge_quotient(const PermGroup& g, const HodgeDiamond& hodge) {
    return invariant_lefschetz_formula(g, GradedMap::from_hodge(hodge));
}

}  // namespace polya
