#include "polya/graded.hpp"

#include <algorithm>
#include <stdexcept>

namespace polya {

GradedSpace::GradedSpace(std::vector<unsigned> dims) : dims_(std::move(dims)) {
    while (!dims_.empty() && dims_.back() == 0) dims_.pop_back();
}

unsigned GradedSpace::dim(int i) const {
    if (i < 0 || i > top_degree()) return 0;
    return dims_[static_cast<std::size_t>(i)];
}

unsigned GradedSpace::total_dim() const {
    unsigned t = 0;
    for (unsigned d : dims_) t += d;
    return t;
}

long GradedSpace::euler_characteristic() const {
    long chi = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i)
        chi += (i % 2 == 0) ? static_cast<long>(dims_[i]) : -static_cast<long>(dims_[i]);
    return chi;
}

GradedMap::GradedMap(GradedSpace space, std::vector<SquareMatrix> blocks,
                     std::vector<std::string> vars)
    : space_(std::move(space)), blocks_(std::move(blocks)), vars_(std::move(vars)) {
    if (std::find(vars_.begin(), vars_.end(), kLefschetzVar) != vars_.end())
        throw std::invalid_argument("GradedMap: '" + kLefschetzVar +
                                    "' is reserved for Lefschetz polynomials");
    blocks_.resize(static_cast<std::size_t>(space_.top_degree() + 1),
                   SquareMatrix(0, vars_));
    for (int i = 0; i <= space_.top_degree(); ++i) {
        const auto& b = blocks_[static_cast<std::size_t>(i)];
        if (b.dim() != space_.dim(i))
            throw std::invalid_argument("GradedMap: block dimension differs from graded piece");
        if (b.vars() != vars_)
            throw std::invalid_argument("GradedMap: block variable-list mismatch");
    }
}

GradedMap GradedMap::identity(const GradedSpace& space, std::vector<std::string> vars) {
    std::vector<SquareMatrix> blocks;
    for (int i = 0; i <= space.top_degree(); ++i)
        blocks.push_back(SquareMatrix::identity(space.dim(i), vars));
    return GradedMap(space, std::move(blocks), std::move(vars));
}

GradedMap GradedMap::from_betti(const std::vector<unsigned>& betti) {
    return identity(GradedSpace(betti));
}

GradedMap GradedMap::from_hodge(const HodgeDiamond& hodge) {
    std::vector<std::string> vars = {"x", "y"};
    int top = -1;
    for (const auto& [pq, h] : hodge) {
        if (pq.first < 0 || pq.second < 0)
            throw std::invalid_argument("GradedMap: Hodge indices must be nonnegative");
        if (h > 0) top = std::max(top, pq.first + pq.second);
    }
    std::vector<unsigned> dims(static_cast<std::size_t>(top + 1), 0);
    for (const auto& [pq, h] : hodge)
        if (h > 0) dims[static_cast<std::size_t>(pq.first + pq.second)] += h;

    GradedSpace space(dims);
    std::vector<SquareMatrix> blocks;
    for (int i = 0; i <= space.top_degree(); ++i) {
        SquareMatrix b(space.dim(i), vars);
        std::size_t pos = 0;
        for (const auto& [pq, h] : hodge) {  // map order: p ascending, then q
            if (h == 0 || pq.first + pq.second != i) continue;
            Monomial m = {static_cast<std::uint32_t>(pq.first),
                          static_cast<std::uint32_t>(pq.second)};
            MultiPoly entry = MultiPoly::monomial(m, Rational(1), vars);
            for (unsigned k = 0; k < h; ++k, ++pos) b.set(pos, pos, entry);
        }
        blocks.push_back(std::move(b));
    }
    return GradedMap(space, std::move(blocks), vars);
}

const SquareMatrix& GradedMap::block(int i) const {
    if (i < 0 || i > space_.top_degree())
        throw std::out_of_range("GradedMap: block index out of range");
    return blocks_[static_cast<std::size_t>(i)];
}

GradedMap GradedMap::power(unsigned r) const {
    std::vector<SquareMatrix> blocks;
    blocks.reserve(blocks_.size());
    for (const auto& b : blocks_) blocks.push_back(b.pow(r));
    return GradedMap(space_, std::move(blocks), vars_);
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
    if (space_ != o.space_ || vars_ != o.vars_)
        throw std::invalid_argument("GradedMap: space or variable mismatch");
    std::vector<SquareMatrix> blocks;
    blocks.reserve(blocks_.size());
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks.push_back(blocks_[i] + o.blocks_[i]);
    return GradedMap(space_, std::move(blocks), vars_);
}

GradedMap GradedMap::scale(const Rational& c) const {
    std::vector<SquareMatrix> blocks;
    blocks.reserve(blocks_.size());
    for (const auto& b : blocks_) blocks.push_back(b.scale(c));
    return GradedMap(space_, std::move(blocks), vars_);
}

std::vector<std::string> lefschetz_vars(const GradedMap& m) {
    std::vector<std::string> vars = m.vars();
    vars.push_back(kLefschetzVar);
    return vars;
}

MultiPoly lefschetz(const GradedMap& m) {
    auto out_vars = lefschetz_vars(m);
    MultiPoly total(out_vars);
    for (int i = 0; i <= m.space().top_degree(); ++i) {
        MultiPoly tr = m.block(i).trace();
        if (tr.is_zero()) continue;
        Monomial ui(out_vars.size(), 0);
        ui.back() = static_cast<std::uint32_t>(i);
        Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
        total = total + tr.with_vars(out_vars) * MultiPoly::monomial(ui, sign, out_vars);
    }
    return total;
}

MultiPoly lefschetz_at(const GradedMap& m, unsigned r) {
    if (r < 1) throw std::invalid_argument("lefschetz_at: power must be >= 1");
    MultiPoly base = lefschetz(m.power(r));
    const auto& vars = base.vars();
    Monomial ur(vars.size(), 0);
    ur.back() = static_cast<std::uint32_t>(r);
    std::map<std::string, MultiPoly> subst = {
        {kLefschetzVar, MultiPoly::monomial(ur, Rational(1), vars)}};
    return base.substitute(subst, vars);
}

}  // namespace polya
