#include "polya/kunneth.hpp"

#include <stdexcept>

#include "polya/errors.hpp"

namespace polya {

long long q_form(const Permutation& g, const std::vector<int>& degrees) {
    int n = g.degree();
    if (static_cast<int>(degrees.size()) != n)
        throw std::invalid_argument("q_form: degree sequence length mismatch");
    long long q = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (g.apply(i) > g.apply(j))
                q += static_cast<long long>(degrees[static_cast<std::size_t>(i - 1)]) *
                     static_cast<long long>(degrees[static_cast<std::size_t>(j - 1)]);
    return q;
}

TensorPowerBasis::TensorPowerBasis(const GradedSpace& space, unsigned n, std::uint64_t cap)
    : space_(space), n_(n) {
    if (n < 1) throw std::invalid_argument("TensorPowerBasis: n must be >= 1");
    for (int i = 0; i <= space_.top_degree(); ++i)
        for (unsigned k = 0; k < space_.dim(i); ++k) {
            slot_deg_.push_back(i);
            slot_idx_.push_back(static_cast<int>(k));
        }

    std::uint64_t total = 1;
    for (unsigned k = 0; k < n_; ++k) {
        total *= static_cast<std::uint64_t>(slot_deg_.size());
        if (total > cap)
            throw CapExceeded("TensorPowerBasis: tensor power dimension exceeds cap " +
                              std::to_string(cap));
        if (slot_deg_.empty()) { total = 0; break; }
    }

    int top = space_.top_degree() < 0 ? 0 : space_.top_degree();
    pieces_.assign(static_cast<std::size_t>(top) * n_ + 1, {});
    index_.assign(pieces_.size(), {});
    if (slot_deg_.empty()) return;

    std::vector<int> tuple(n_, 0);
    while (true) {
        int r = 0;
        for (int f : tuple) r += slot_deg_[static_cast<std::size_t>(f)];
        auto& piece = pieces_[static_cast<std::size_t>(r)];
        index_[static_cast<std::size_t>(r)].emplace(tuple, static_cast<int>(piece.size()));
        piece.push_back(tuple);
        // lexicographic odometer
        int k = static_cast<int>(n_) - 1;
        while (k >= 0 && tuple[static_cast<std::size_t>(k)] ==
                             static_cast<int>(slot_deg_.size()) - 1) {
            tuple[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
        ++tuple[static_cast<std::size_t>(k)];
    }
}

const std::vector<std::vector<int>>& TensorPowerBasis::piece(int r) const {
    static const std::vector<std::vector<int>> empty;
    if (r < 0 || r >= static_cast<int>(pieces_.size())) return empty;
    return pieces_[static_cast<std::size_t>(r)];
}

std::vector<int> TensorPowerBasis::degree_sequence(int r, int pos) const {
    const auto& tuple = piece(r)[static_cast<std::size_t>(pos)];
    std::vector<int> degs(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i)
        degs[i] = slot_deg_[static_cast<std::size_t>(tuple[i])];
    return degs;
}

std::pair<int, int> TensorPowerBasis::apply(const Permutation& g, int r, int pos) const {
    if (g.degree() != static_cast<int>(n_))
        throw std::invalid_argument("TensorPowerBasis: permutation degree mismatch");
    const auto& tuple = piece(r)[static_cast<std::size_t>(pos)];
    std::vector<int> degs(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i)
        degs[i] = slot_deg_[static_cast<std::size_t>(tuple[i])];
    Permutation ginv = g.inverse();
    std::vector<int> image(tuple.size());
    for (int j = 1; j <= static_cast<int>(n_); ++j)
        image[static_cast<std::size_t>(j - 1)] =
            tuple[static_cast<std::size_t>(ginv.apply(j) - 1)];
    int sign = (q_form(g, degs) % 2 == 0) ? 1 : -1;
    int target = index_[static_cast<std::size_t>(r)].at(image);
    return {target, sign};
}

bool representation_check(const PermGroup& g, const GradedSpace& space, unsigned n,
                          std::uint64_t cap) {
    TensorPowerBasis basis(space, n, cap);
    for (const auto& sigma : g.elements()) {
        for (const auto& tau : g.elements()) {
            Permutation prod = sigma.compose(tau);
            for (int r = 0; r <= basis.max_degree(); ++r) {
                for (int pos = 0; pos < basis.piece_dim(r); ++pos) {
                    auto [p1, s1] = basis.apply(tau, r, pos);
                    auto [p2, s2] = basis.apply(sigma, r, p1);
                    auto [p3, s3] = basis.apply(prod, r, pos);
                    if (p2 != p3 || s1 * s2 != s3) return false;
                }
            }
        }
    }
    return true;
}

SquareMatrix tensor_power_block(const TensorPowerBasis& basis, const GradedMap& phi, int r) {
    if (!(phi.space() == basis.space()))
        throw std::invalid_argument("tensor_power_block: map acts on a different space");
    const auto& tuples = basis.piece(r);
    std::size_t m = tuples.size();
    SquareMatrix out(m, phi.vars());
    for (std::size_t col = 0; col < m; ++col) {
        const auto& t = tuples[col];
        for (std::size_t row = 0; row < m; ++row) {
            const auto& s = tuples[row];
            bool same_degrees = true;
            for (std::size_t k = 0; k < t.size(); ++k)
                if (basis.slot_degree(t[k]) != basis.slot_degree(s[k])) {
                    same_degrees = false;
                    break;
                }
            if (!same_degrees) continue;
            MultiPoly entry = MultiPoly::constant(Rational(1), phi.vars());
            for (std::size_t k = 0; k < t.size() && !entry.is_zero(); ++k) {
                int deg = basis.slot_degree(t[k]);
                entry = entry * phi.block(deg).at(
                                    static_cast<std::size_t>(basis.slot_index(s[k])),
                                    static_cast<std::size_t>(basis.slot_index(t[k])));
            }
            if (!entry.is_zero()) out.set(row, col, std::move(entry));
        }
    }
    return out;
}

SquareMatrix kunneth_action_block(const TensorPowerBasis& basis, const Permutation& g,
                                  int r, const std::vector<std::string>& vars) {
    std::size_t m = static_cast<std::size_t>(basis.piece_dim(r));
    SquareMatrix out(m, vars);
    for (std::size_t col = 0; col < m; ++col) {
        auto [row, sign] = basis.apply(g, r, static_cast<int>(col));
        out.set(static_cast<std::size_t>(row), col,
                MultiPoly::constant(Rational(sign), vars));
    }
    return out;
}

SquareMatrix averaging_projector_block(const TensorPowerBasis& basis, const PermGroup& g,
                                       int r, const std::vector<std::string>& vars) {
    std::size_t m = static_cast<std::size_t>(basis.piece_dim(r));
    std::vector<std::vector<long long>> acc(m, std::vector<long long>(m, 0));
    for (const auto& e : g.elements())
        for (std::size_t col = 0; col < m; ++col) {
            auto [row, sign] = basis.apply(e, r, static_cast<int>(col));
            acc[static_cast<std::size_t>(row)][col] += sign;
        }
    Rational norm(1, static_cast<long>(g.size()));
    SquareMatrix out(m, vars);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (acc[i][j] != 0)
                out.set(i, j, MultiPoly::constant(Rational(acc[i][j]) * norm, vars));
    return out;
}

namespace {

MultiPoly lefschetz_from_piece_traces(const std::vector<MultiPoly>& traces,
                                      const std::vector<std::string>& map_vars) {
    std::vector<std::string> out_vars = map_vars;
    out_vars.push_back(kLefschetzVar);
    MultiPoly total(out_vars);
    for (std::size_t r = 0; r < traces.size(); ++r) {
        if (traces[r].is_zero()) continue;
        Monomial ur(out_vars.size(), 0);
        ur.back() = static_cast<std::uint32_t>(r);
        Rational sign = (r % 2 == 0) ? Rational(1) : Rational(-1);
        total = total + traces[r].with_vars(out_vars) *
                            MultiPoly::monomial(ur, sign, out_vars);
    }
    return total;
}

}  // namespace

MultiPoly oracle_trace(const Permutation& g, const GradedMap& phi, unsigned n,
                       std::uint64_t cap) {
    if (g.degree() != static_cast<int>(n))
        throw std::invalid_argument("oracle_trace: permutation degree differs from n");
    TensorPowerBasis basis(phi.space(), n, cap);
    std::vector<MultiPoly> traces;
    traces.reserve(static_cast<std::size_t>(basis.max_degree()) + 1);
    for (int r = 0; r <= basis.max_degree(); ++r) {
        SquareMatrix composed = kunneth_action_block(basis, g, r, phi.vars()) *
                                tensor_power_block(basis, phi, r);
        traces.push_back(composed.trace());
    }
    return lefschetz_from_piece_traces(traces, phi.vars());
}

MultiPoly invariant_lefschetz_oracle(const PermGroup& g, const GradedMap& phi, unsigned n,
                                     std::uint64_t cap) {
    if (g.degree() != static_cast<int>(n))
        throw std::invalid_argument("invariant_lefschetz_oracle: group degree differs from n");
    TensorPowerBasis basis(phi.space(), n, cap);
    std::vector<MultiPoly> traces;
    traces.reserve(static_cast<std::size_t>(basis.max_degree()) + 1);
    for (int r = 0; r <= basis.max_degree(); ++r) {
        SquareMatrix projector = averaging_projector_block(basis, g, r, phi.vars());
        SquareMatrix power = tensor_power_block(basis, phi, r);
        traces.push_back(trace_of_product(power, projector));
    }
    return lefschetz_from_piece_traces(traces, phi.vars());
}

}  // namespace polya
