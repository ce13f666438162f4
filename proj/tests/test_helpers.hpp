#ifndef POLYA_TEST_HELPERS_HPP
#define POLYA_TEST_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "polya/graded.hpp"
#include "polya/matrix.hpp"
#include "polya/multipoly.hpp"
#include "polya/perm.hpp"

namespace polya::testing {

// Independent cofactor-expansion determinant used as an oracle against the
// Newton-identities path.
inline MultiPoly naive_determinant(const SquareMatrix& m) {
    std::size_t d = m.dim();
    if (d == 0) return MultiPoly::constant(Rational(1), m.vars());
    if (d == 1) return m.at(0, 0);
    MultiPoly det(m.vars());
    for (std::size_t j = 0; j < d; ++j) {
        if (m.at(0, j).is_zero()) continue;
        SquareMatrix minor(d - 1, m.vars());
        for (std::size_t r = 1; r < d; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < d; ++c) {
                if (c == j) continue;
                minor.set(r - 1, cc++, m.at(r, c));
            }
        }
        MultiPoly cofactor = m.at(0, j) * naive_determinant(minor);
        det = (j % 2 == 0) ? det + cofactor : det - cofactor;
    }
    return det;
}

// I - tA over vars(A) + t, for comparing against det_one_minus_tA.
inline SquareMatrix one_minus_tA(const SquareMatrix& a, const std::string& t_var = "t") {
    std::vector<std::string> vars = a.vars();
    vars.push_back(t_var);
    SquareMatrix out(a.dim(), vars);
    Monomial t1(vars.size(), 0);
    t1.back() = 1;
    MultiPoly t = MultiPoly::monomial(t1, Rational(1), vars);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            MultiPoly entry = -(a.at(i, j).with_vars(vars) * t);
            if (i == j) entry = entry + MultiPoly::constant(Rational(1), vars);
            out.set(i, j, entry);
        }
    return out;
}

// Exhaustive Burnside-style orbit count of G acting on colorings {0..colors-1}^n.
inline long brute_orbit_count(const PermGroup& g, int colors) {
    int n = g.degree();
    std::set<std::vector<int>> canonical;
    std::vector<int> coloring(static_cast<std::size_t>(n), 0);
    while (true) {
        std::vector<int> best = coloring;
        for (const auto& e : g.elements()) {
            std::vector<int> moved(coloring.size());
            // slot i of the moved coloring holds the color of slot g^{-1}(i)
            for (int i = 1; i <= n; ++i)
                moved[static_cast<std::size_t>(e.apply(i) - 1)] =
                    coloring[static_cast<std::size_t>(i - 1)];
            if (moved < best) best = moved;
        }
        canonical.insert(best);
        std::size_t k = 0;
        while (k < coloring.size() && coloring[k] + 1 == colors) coloring[k++] = 0;
        if (k == coloring.size()) break;
        ++coloring[k];
    }
    return static_cast<long>(canonical.size());
}

// Exhaustive weighted orbit census: coefficient of t_1^{k_1}..t_r^{k_r} is
// the number of orbits using color i exactly k_i times.
inline MultiPoly brute_weight_census(const PermGroup& g, int colors) {
    int n = g.degree();
    auto tvars = indexed_vars("t", static_cast<unsigned>(colors));
    std::set<std::vector<int>> canonical;
    std::vector<int> coloring(static_cast<std::size_t>(n), 0);
    while (true) {
        std::vector<int> best = coloring;
        for (const auto& e : g.elements()) {
            std::vector<int> moved(coloring.size());
            for (int i = 1; i <= n; ++i)
                moved[static_cast<std::size_t>(e.apply(i) - 1)] =
                    coloring[static_cast<std::size_t>(i - 1)];
            if (moved < best) best = moved;
        }
        canonical.insert(best);
        std::size_t k = 0;
        while (k < coloring.size() && coloring[k] + 1 == colors) coloring[k++] = 0;
        if (k == coloring.size()) break;
        ++coloring[k];
    }
    MultiPoly census(tvars);
    for (const auto& rep : canonical) {
        Monomial m(tvars.size(), 0);
        for (int c : rep) ++m[static_cast<std::size_t>(c)];
        census = census + MultiPoly::monomial(m, Rational(1), tvars);
    }
    return census;
}

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}

    std::uint64_t next(std::uint64_t bound) { return engine() % bound; }

    Rational rational(long max_abs_num = 9, long max_den = 9) {
        long num = static_cast<long>(next(static_cast<std::uint64_t>(2 * max_abs_num + 1))) -
                   max_abs_num;
        long den = 1 + static_cast<long>(next(static_cast<std::uint64_t>(max_den)));
        return Rational(num, den);
    }

    MultiPoly poly(const std::vector<std::string>& vars, unsigned max_terms = 4,
                   std::uint32_t max_exp = 3) {
        MultiPoly p(vars);
        unsigned terms = 1 + static_cast<unsigned>(next(max_terms));
        for (unsigned t = 0; t < terms; ++t) {
            Monomial m(vars.size());
            for (auto& e : m) e = static_cast<std::uint32_t>(next(max_exp + 1));
            p = p + MultiPoly::monomial(m, rational(), vars);
        }
        return p;
    }

    SquareMatrix matrix(std::size_t dim, const std::vector<std::string>& vars = {}) {
        SquareMatrix m(dim, vars);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                m.set(i, j, MultiPoly::constant(rational(), vars));
        return m;
    }

    Permutation permutation(int n) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
        for (int i = n - 1; i > 0; --i) {
            auto j = static_cast<std::size_t>(next(static_cast<std::uint64_t>(i + 1)));
            std::swap(img[static_cast<std::size_t>(i)], img[j]);
        }
        return Permutation(std::move(img));
    }

    PermGroup subgroup(int n) {
        std::vector<Permutation> gens;
        int count = 1 + static_cast<int>(next(2));
        for (int i = 0; i < count; ++i) gens.push_back(permutation(n));
        return PermGroup::closure(gens, n);
    }

    // Random graded map with rational entries; dims[i] <= max_dims[i], total
    // dimension capped.
    GradedMap graded_map(const std::vector<unsigned>& max_dims, unsigned max_total = 3) {
        std::vector<unsigned> dims(max_dims.size(), 0);
        unsigned total = 0;
        for (std::size_t i = 0; i < max_dims.size(); ++i) {
            unsigned d = static_cast<unsigned>(next(max_dims[i] + 1));
            d = std::min(d, max_total - total);
            dims[i] = d;
            total += d;
        }
        GradedSpace space(dims);
        std::vector<SquareMatrix> blocks;
        for (int i = 0; i <= space.top_degree(); ++i) blocks.push_back(matrix(space.dim(i)));
        return GradedMap(space, std::move(blocks), {});
    }
};

inline MultiPoly parse_u(const std::string& text) {
    return MultiPoly::parse(text, {"u"});
}

}  // namespace polya::testing

#endif
