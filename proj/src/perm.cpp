#include "polya/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "polya/errors.hpp"

namespace polya {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    int n = degree();
    if (n < 1) throw std::invalid_argument("Permutation: degree must be positive");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : img_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("Permutation: images are not a bijection of 1..n");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& h) const {
    if (degree() != h.degree())
        throw std::invalid_argument("Permutation: degree mismatch in composition");
    std::vector<int> img(img_.size());
    for (int i = 1; i <= degree(); ++i)
        img[static_cast<std::size_t>(i - 1)] = apply(h.apply(i));
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(img_.size());
    for (int i = 1; i <= degree(); ++i)
        img[static_cast<std::size_t>(apply(i) - 1)] = i;
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if (apply(i) != i) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int i = 1; i <= degree(); ++i) {
        if (seen[static_cast<std::size_t>(i - 1)]) continue;
        std::vector<int> cyc;
        int j = i;
        do {
            seen[static_cast<std::size_t>(j - 1)] = true;
            cyc.push_back(j);
            j = apply(j);
        } while (j != i);
        if (cyc.size() > 1) out.push_back(std::move(cyc));
    }
    return out;
}

CycleType Permutation::cycle_type() const {
    CycleType ct;
    ct.counts.assign(img_.size(), 0);
    std::vector<bool> seen(img_.size(), false);
    for (int i = 1; i <= degree(); ++i) {
        if (seen[static_cast<std::size_t>(i - 1)]) continue;
        int len = 0, j = i;
        do {
            seen[static_cast<std::size_t>(j - 1)] = true;
            ++len;
            j = apply(j);
        } while (j != i);
        ++ct.counts[static_cast<std::size_t>(len - 1)];
    }
    return ct;
}

bool Permutation::is_even() const {
    int transpositions = 0;
    for (const auto& cyc : cycles()) transpositions += static_cast<int>(cyc.size()) - 1;
    return transpositions % 2 == 0;
}

std::string Permutation::str() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& cyc : cs) {
        out += "(";
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i > 0) out += " ";
            out += std::to_string(cyc[i]);
        }
        out += ")";
    }
    return out;
}

Permutation Permutation::parse(const std::string& text, int n) {
    if (n < 1) throw std::invalid_argument("Permutation::parse: degree must be positive");
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
            throw ParseError("Permutation: expected number at column " +
                             std::to_string(start + 1) + " in '" + text + "'");
        return std::stoi(text.substr(start, pos - start));
    };

    skip_ws();
    if (pos < text.size() && text[pos] == '[') {
        ++pos;
        std::vector<int> img;
        skip_ws();
        if (pos < text.size() && text[pos] == ']') {
            ++pos;
        } else {
            while (true) {
                img.push_back(read_int());
                skip_ws();
                if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
                if (pos < text.size() && text[pos] == ']') { ++pos; break; }
                throw ParseError("Permutation: expected ',' or ']' in '" + text + "'");
            }
        }
        skip_ws();
        if (pos != text.size())
            throw ParseError("Permutation: trailing characters in '" + text + "'");
        if (static_cast<int>(img.size()) != n)
            throw ParseError("Permutation: image list has length " +
                             std::to_string(img.size()) + ", expected " + std::to_string(n));
        return Permutation(std::move(img));
    }

    // cycle notation
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    bool any = false;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '(')
            throw ParseError("Permutation: expected '(' at column " +
                             std::to_string(pos + 1) + " in '" + text + "'");
        ++pos;
        std::vector<int> cyc;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            int v = read_int();
            if (v < 1 || v > n)
                throw ParseError("Permutation: point " + std::to_string(v) +
                                 " outside 1.." + std::to_string(n));
            if (used[static_cast<std::size_t>(v - 1)])
                throw ParseError("Permutation: point " + std::to_string(v) +
                                 " repeated across cycles");
            used[static_cast<std::size_t>(v - 1)] = true;
            cyc.push_back(v);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') { ++pos; skip_ws(); }
        }
        if (pos >= text.size()) throw ParseError("Permutation: unterminated cycle in '" + text + "'");
        ++pos;  // ')'
        any = true;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            img[static_cast<std::size_t>(from - 1)] = to;
        }
    }
    if (!any) throw ParseError("Permutation: empty input");
    return Permutation(std::move(img));
}

PermGroup::PermGroup(int n, std::vector<Permutation> elems)
    : n_(n), elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
}

bool PermGroup::contains(const Permutation& g) const {
    return std::binary_search(elems_.begin(), elems_.end(), g);
}

PermGroup PermGroup::closure(const std::vector<Permutation>& generators, int n,
                             std::uint64_t size_cap) {
    if (n < 1) throw std::invalid_argument("PermGroup: degree must be positive");
    for (const auto& g : generators)
        if (g.degree() != n)
            throw std::invalid_argument("PermGroup: generator degree mismatch");

    std::set<std::vector<int>> seen;
    std::deque<Permutation> work;
    auto push = [&](const Permutation& g) {
        if (seen.insert(g.images()).second) {
            if (seen.size() > size_cap)
                throw CapExceeded("PermGroup: closure exceeds size cap " +
                                  std::to_string(size_cap));
            work.push_back(g);
        }
    };
    push(Permutation::identity(n));
    for (const auto& g : generators) push(g);
    while (!work.empty()) {
        Permutation e = std::move(work.front());
        work.pop_front();
        for (const auto& g : generators) push(e.compose(g));
    }
    std::vector<Permutation> elems;
    elems.reserve(seen.size());
    for (const auto& img : seen) elems.emplace_back(img);
    return PermGroup(n, std::move(elems));
}

namespace {

std::uint64_t factorial_capped(int n, std::uint64_t cap) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        if (f > cap / static_cast<std::uint64_t>(i)) return cap + 1;
        f *= static_cast<std::uint64_t>(i);
    }
    return f;
}

}  // namespace

PermGroup PermGroup::named(GroupKind kind, int n, std::uint64_t size_cap) {
    if (n < 1) throw std::invalid_argument("PermGroup: degree must be positive");
    switch (kind) {
        case GroupKind::Trivial:
            return PermGroup(n, {Permutation::identity(n)});
        case GroupKind::Symmetric:
        case GroupKind::Alternating: {
            if (factorial_capped(n, size_cap) > size_cap)
                throw CapExceeded("PermGroup: " + std::to_string(n) +
                                  "! exceeds size cap " + std::to_string(size_cap));
            std::vector<int> img(static_cast<std::size_t>(n));
            std::iota(img.begin(), img.end(), 1);
            std::vector<Permutation> elems;
            do {
                Permutation g{std::vector<int>(img)};
                if (kind == GroupKind::Symmetric || g.is_even()) elems.push_back(std::move(g));
            } while (std::next_permutation(img.begin(), img.end()));
            return PermGroup(n, std::move(elems));
        }
        case GroupKind::Cyclic: {
            std::vector<int> rot(static_cast<std::size_t>(n));
            for (int i = 1; i <= n; ++i)
                rot[static_cast<std::size_t>(i - 1)] = i % n + 1;
            return closure({Permutation(std::move(rot))}, n, size_cap);
        }
        case GroupKind::Dihedral: {
            if (n < 3)
                throw std::invalid_argument("PermGroup: dihedral group needs n >= 3");
            std::vector<int> rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
            for (int i = 1; i <= n; ++i) {
                rot[static_cast<std::size_t>(i - 1)] = i % n + 1;
                refl[static_cast<std::size_t>(i - 1)] = n + 1 - i;
            }
            return closure({Permutation(std::move(rot)), Permutation(std::move(refl))}, n,
                           size_cap);
        }
    }
    throw std::invalid_argument("PermGroup: unsupported kind");
}

MultiPoly cycle_index(const PermGroup& g) {
    int n = g.degree();
    auto vars = indexed_vars("x", static_cast<unsigned>(n));
    MultiPoly sum(vars);
    for (const auto& e : g.elements()) {
        CycleType ct = e.cycle_type();
        Monomial m(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            m[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(ct.counts[static_cast<std::size_t>(i)]);
        sum = sum + MultiPoly::monomial(m, Rational(1), vars);
    }
    return sum.scale(Rational(1, static_cast<long>(g.size())));
}

TruncatedSeries symmetric_cycle_index_series(unsigned n_max) {
    auto vars = indexed_vars("x", n_max);
    TruncatedSeries arg(n_max, vars);
    for (unsigned r = 1; r <= n_max; ++r)
        arg.set_coefficient(
            r, MultiPoly::variable(vars[r - 1], vars).scale(Rational(1, static_cast<long>(r))));
    return arg.exp();
}

MultiPoly alternating_cycle_index(int n, std::uint64_t size_cap) {
    if (n < 2)
        throw std::invalid_argument("alternating_cycle_index: defined for n >= 2");
    MultiPoly zs = cycle_index(PermGroup::named(GroupKind::Symmetric, n, size_cap));
    const auto& vars = zs.vars();
    std::map<std::string, MultiPoly> sign_flip;
    for (int r = 2; r <= n; r += 2)
        sign_flip.emplace(vars[static_cast<std::size_t>(r - 1)],
                          -MultiPoly::variable(vars[static_cast<std::size_t>(r - 1)], vars));
    return zs + zs.substitute(sign_flip, vars);
}

bool alternating_series_identity_check(unsigned n_max) {
    if (n_max < 2)
        throw std::invalid_argument("alternating_series_identity_check: need n_max >= 2");
    TruncatedSeries s = symmetric_cycle_index_series(n_max);
    const auto& vars = s.vars();
    TruncatedSeries rhs = s + s.negate_t().inverse();
    rhs.set_coefficient(0, rhs.coefficient(0) - MultiPoly::constant(Rational(1), vars));
    rhs.set_coefficient(1, rhs.coefficient(1) - MultiPoly::variable(vars[0], vars));
    for (unsigned n = 2; n <= n_max; ++n) {
        MultiPoly expected = alternating_cycle_index(static_cast<int>(n)).with_vars(vars);
        if (!(rhs.coefficient(n) == expected)) return false;
    }
    return true;
}

}  // namespace polya
