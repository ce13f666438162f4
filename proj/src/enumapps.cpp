#include "polya/enumapps.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "polya/errors.hpp"
#include "polya/matrix.hpp"

namespace polya {

namespace {

std::map<std::string, Rational> uniform_assignment(const std::vector<std::string>& vars,
                                                   const Rational& value) {
    std::map<std::string, Rational> out;
    for (const auto& v : vars) out.emplace(v, value);
    return out;
}

BigInt integer_value(const Rational& r, const std::string& context) {
    if (!r.is_integer())
        throw std::domain_error(context + ": non-integer result " + r.str());
    return r.num();
}

}  // namespace

BigInt polya_count(const PermGroup& g, long long colors) {
    if (colors < 0) throw std::invalid_argument("polya_count: negative color count");
    MultiPoly z = cycle_index(g);
    Rational value = z.evaluate(uniform_assignment(z.vars(), Rational(BigInt(colors))));
    return integer_value(value, "polya_count");
}

MultiPoly polya_weight_poly(const PermGroup& g, int r_colors) {
    if (r_colors < 1) throw std::invalid_argument("polya_weight_poly: need at least one color");
    MultiPoly z = cycle_index(g);
    auto tvars = indexed_vars("t", static_cast<unsigned>(r_colors));
    std::map<std::string, MultiPoly> assignment;
    for (int j = 1; j <= g.degree(); ++j) {
        MultiPoly power_sum(tvars);
        for (int i = 0; i < r_colors; ++i) {
            Monomial m(tvars.size(), 0);
            m[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(j);
            power_sum = power_sum + MultiPoly::monomial(m, Rational(1), tvars);
        }
        assignment.emplace(z.vars()[static_cast<std::size_t>(j - 1)], std::move(power_sum));
    }
    return z.substitute(assignment, tvars);
}

BigInt quotient_point_count(const PermGroup& g, const CountVector& counts) {
    int n = g.degree();
    if (static_cast<int>(counts.values.size()) < n)
        throw std::invalid_argument("quotient_point_count: need counts up to degree n");
    MultiPoly z = cycle_index(g);
    std::map<std::string, Rational> values;
    for (int r = 1; r <= n; ++r) {
        long long c = counts.values[static_cast<std::size_t>(r - 1)];
        if (c < 0) throw std::invalid_argument("quotient_point_count: negative count");
        values.emplace(z.vars()[static_cast<std::size_t>(r - 1)], Rational(BigInt(c)));
    }
    return integer_value(z.evaluate(values), "quotient_point_count");
}

namespace {

// Sum over cycle types of n: product of args[i-1]^{m_i} / (i^{m_i} m_i!),
// built by recursing over the largest part.
void cycle_type_sum(const std::vector<Rational>& args, int remaining, int max_part,
                    const Rational& weight, Rational& total) {
    if (remaining == 0) {
        total += weight;
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        // take m >= 1 cycles of this length
        Rational w = weight;
        for (int m = 1; part * m <= remaining; ++m) {
            w *= args[static_cast<std::size_t>(part - 1)] / Rational(BigInt(part) * BigInt(m));
            cycle_type_sum(args, remaining - part * m, part - 1, w, total);
        }
    }
}

}  // namespace

Rational symmetric_cycle_index_value(const std::vector<Rational>& args, int n) {
    if (n < 0) throw std::invalid_argument("symmetric_cycle_index_value: negative n");
    if (static_cast<int>(args.size()) < n)
        throw std::invalid_argument("symmetric_cycle_index_value: not enough arguments");
    if (n == 0) return Rational(1);
    Rational total(0);
    cycle_type_sum(args, n, n, Rational(1), total);
    return total;
}

Rational alternating_cycle_index_value(const std::vector<Rational>& args, int n) {
    if (n == 0) return Rational(1);
    if (static_cast<int>(args.size()) < n)
        throw std::invalid_argument("alternating_cycle_index_value: not enough arguments");
    if (n == 1) return args[0];
    std::vector<Rational> signed_args(args.begin(), args.begin() + n);
    for (int r = 2; r <= n; r += 2)
        signed_args[static_cast<std::size_t>(r - 1)] = -signed_args[static_cast<std::size_t>(r - 1)];
    return symmetric_cycle_index_value(args, n) + symmetric_cycle_index_value(signed_args, n);
}

namespace {

std::vector<Rational> rational_counts(const CountVector& counts) {
    std::vector<Rational> out;
    out.reserve(counts.values.size());
    for (long long v : counts.values) {
        if (v < 0) throw std::invalid_argument("count vectors must be nonnegative");
        out.emplace_back(BigInt(v));
    }
    return out;
}

}  // namespace

TruncatedSeries zeta_from_counts(const CountVector& counts, unsigned order) {
    if (counts.values.size() < order)
        throw std::invalid_argument("zeta_from_counts: need counts up to the truncation order");
    auto args = rational_counts(counts);
    TruncatedSeries log_arg(order, {});
    for (unsigned r = 1; r <= order; ++r)
        log_arg.set_coefficient(
            r, MultiPoly::constant(args[r - 1] / Rational(static_cast<long>(r)), {}));
    TruncatedSeries zeta = log_arg.exp();
    for (unsigned n = 0; n <= order; ++n) {
        if (!(zeta.coefficient(n).constant_value() ==
              symmetric_cycle_index_value(args, static_cast<int>(n))))
            throw std::logic_error("zeta_from_counts: exp expansion disagrees with the "
                                   "cycle-type evaluation");
    }
    return zeta;
}

TruncatedSeries alt_zeta_from_counts(const CountVector& counts, unsigned order) {
    TruncatedSeries zeta = zeta_from_counts(counts, order);
    auto args = rational_counts(counts);
    TruncatedSeries result = zeta + zeta.negate_t().inverse();
    result.set_coefficient(0, result.coefficient(0) - MultiPoly::constant(Rational(1), {}));
    if (order >= 1)
        result.set_coefficient(1, result.coefficient(1) - MultiPoly::constant(args[0], {}));
    for (unsigned n = 0; n <= order; ++n) {
        if (!(result.coefficient(n).constant_value() ==
              alternating_cycle_index_value(args, static_cast<int>(n))))
            throw std::logic_error("alt_zeta_from_counts: series disagrees with the "
                                   "cycle-type evaluation");
    }
    return result;
}

CountVector brute_force_affine_counts(const std::vector<std::string>& vars,
                                      const std::vector<MultiPoly>& equations,
                                      long long q, int r_max, std::uint64_t budget) {
    if (r_max < 1) throw std::invalid_argument("brute_force_affine_counts: r_max must be >= 1");
    PrimeField base(q);
    std::size_t m = vars.size();
    for (const auto& eq : equations) {
        if (eq.vars() != vars)
            throw std::invalid_argument("brute_force_affine_counts: equation variable mismatch");
        for (const auto& [mono, coeff] : eq.terms())
            if (!coeff.is_integer())
                throw std::invalid_argument(
                    "brute_force_affine_counts: equations need integer coefficients");
    }

    CountVector out;
    out.q = q;
    for (int r = 1; r <= r_max; ++r) {
        std::uint64_t tuples = 1;
        // the element table alone costs q^r, each variable another factor q^r
        for (std::size_t i = 0; i < std::max<std::size_t>(m, 1); ++i) {
            for (int k = 0; k < r; ++k) {
                if (tuples > budget / static_cast<std::uint64_t>(q))
                    throw CapExceeded("brute_force_affine_counts: q^(m*r) exceeds budget " +
                                      std::to_string(budget));
                tuples *= static_cast<std::uint64_t>(q);
            }
        }
        ExtensionField field(base, r);
        // precompute reduced terms: coefficient mod p and exponents
        struct Term {
            long long c;
            Monomial m;
        };
        std::vector<std::vector<Term>> eq_terms;
        for (const auto& eq : equations) {
            std::vector<Term> ts;
            for (const auto& [mono, coeff] : eq.terms()) {
                long long c = static_cast<long long>(
                    mpz_fdiv_ui(coeff.num().get_mpz_t(), static_cast<unsigned long>(q)));
                if (c != 0) ts.push_back({c, mono});
            }
            eq_terms.push_back(std::move(ts));
        }

        std::vector<ExtensionField::Elem> elems;
        elems.reserve(field.size());
        for (std::uint64_t i = 0; i < field.size(); ++i) elems.push_back(field.from_index(i));

        long long solutions = 0;
        std::vector<std::size_t> odo(m, 0);
        while (true) {
            bool all_zero = true;
            for (const auto& ts : eq_terms) {
                ExtensionField::Elem value = field.zero();
                for (const auto& term : ts) {
                    if (term.c == 0) continue;
                    ExtensionField::Elem prod = field.scalar(term.c);
                    for (std::size_t i = 0; i < m; ++i)
                        if (term.m[i] > 0)
                            prod = field.mul(prod, field.pow(elems[odo[i]], term.m[i]));
                    value = field.add(value, prod);
                }
                if (!field.is_zero(value)) {
                    all_zero = false;
                    break;
                }
            }
            if (all_zero) ++solutions;
            // odometer
            std::size_t k = 0;
            while (k < m && odo[k] + 1 == elems.size()) odo[k++] = 0;
            if (k == m) break;
            ++odo[k];
        }
        out.values.push_back(solutions);
    }
    return out;
}

MultiPoly discriminant_poly(int n) {
    if (n < 2) throw std::invalid_argument("discriminant_poly: defined for n >= 2");
    auto tvars = indexed_vars("t", static_cast<unsigned>(n));
    auto var_or_one = [&](int k) {  // coefficient of x^{n-k} in the monic polynomial
        if (k == 0) return MultiPoly::constant(Rational(1), tvars);
        return MultiPoly::variable(tvars[static_cast<std::size_t>(k - 1)], tvars);
    };
    // f = x^n + t_1 x^{n-1} + ... + t_n, f' its derivative; Sylvester matrix
    // of (f, f') has n-1 shifted rows of f and n shifted rows of f'.
    std::size_t dim = static_cast<std::size_t>(2 * n - 1);
    SquareMatrix sylvester(dim, tvars);
    for (int row = 0; row < n - 1; ++row)
        for (int k = 0; k <= n; ++k)
            sylvester.set(static_cast<std::size_t>(row),
                          static_cast<std::size_t>(row + k), var_or_one(k));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= n - 1; ++k) {
            MultiPoly c = var_or_one(k).scale(Rational(n - k));
            sylvester.set(static_cast<std::size_t>(n - 1 + row),
                          static_cast<std::size_t>(row + k), std::move(c));
        }
    MultiPoly res = determinant(sylvester);
    bool flip = ((n * (n - 1)) / 2) % 2 == 1;
    return flip ? -res : res;
}

DiscriminantCensus discriminant_census(int n, long long q, std::uint64_t budget) {
    if (n < 2) throw std::invalid_argument("discriminant_census: defined for n >= 2");
    PrimeField field(q);
    if (q % 2 == 0)
        throw std::invalid_argument("discriminant_census: q must be odd");
    std::uint64_t tuples = 1;
    for (int i = 0; i < n; ++i) {
        if (tuples > budget / static_cast<std::uint64_t>(q))
            throw CapExceeded("discriminant_census: q^n exceeds budget " +
                              std::to_string(budget));
        tuples *= static_cast<std::uint64_t>(q);
    }

    MultiPoly disc = discriminant_poly(n);
    struct Term {
        long long c;
        Monomial m;
    };
    std::vector<Term> terms;
    for (const auto& [mono, coeff] : disc.terms()) {
        long long c = static_cast<long long>(
            mpz_fdiv_ui(coeff.num().get_mpz_t(), static_cast<unsigned long>(q)));
        if (c != 0) terms.push_back({c, mono});
    }

    std::set<long long> squares;
    for (long long x = 1; x < q; ++x) squares.insert(field.mul(x, x));

    DiscriminantCensus census;
    std::vector<long long> tuple(static_cast<std::size_t>(n), 0);
    while (true) {
        long long value = 0;
        for (const auto& term : terms) {
            long long v = term.c;
            for (std::size_t i = 0; i < tuple.size(); ++i)
                if (term.m[i] > 0) v = field.mul(v, field.pow(tuple[i], term.m[i]));
            value = field.add(value, v);
        }
        if (value == 0) ++census.zero;
        else if (squares.count(value)) ++census.qr;
        else ++census.qnr;
        std::size_t k = 0;
        while (k < tuple.size() && tuple[k] + 1 == q) tuple[k++] = 0;
        if (k == tuple.size()) break;
        ++tuple[k];
    }
    census.double_cover_total = census.zero + 2 * census.qr;

    std::uint64_t qn = tuples;
    if (census.zero != static_cast<long long>(qn / static_cast<std::uint64_t>(q)))
        throw std::logic_error("discriminant_census: zero fiber differs from q^(n-1)");
    if (census.qr != census.qnr)
        throw std::logic_error("discriminant_census: residue classes are not balanced");
    if (census.double_cover_total != static_cast<long long>(qn))
        throw std::logic_error("discriminant_census: double cover total differs from q^n");
    return census;
}

}  // namespace polya
