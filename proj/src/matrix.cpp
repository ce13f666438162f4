#include "polya/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace polya {

SquareMatrix::SquareMatrix(std::size_t dim, std::vector<std::string> vars)
    : dim_(dim), vars_(std::move(vars)), e_(dim * dim, MultiPoly(vars_)) {}

SquareMatrix SquareMatrix::identity(std::size_t dim, const std::vector<std::string>& vars) {
    SquareMatrix m(dim, vars);
    for (std::size_t i = 0; i < dim; ++i)
        m.e_[i * dim + i] = MultiPoly::constant(Rational(1), vars);
    return m;
}

SquareMatrix SquareMatrix::from_rows(std::vector<std::vector<MultiPoly>> rows) {
    std::size_t d = rows.size();
    std::vector<std::string> vars = d > 0 && !rows[0].empty() ? rows[0][0].vars()
                                                              : std::vector<std::string>{};
    SquareMatrix m(d, vars);
    for (std::size_t i = 0; i < d; ++i) {
        if (rows[i].size() != d)
            throw std::invalid_argument("SquareMatrix: not square");
        for (std::size_t j = 0; j < d; ++j) m.set(i, j, std::move(rows[i][j]));
    }
    return m;
}

void SquareMatrix::set(std::size_t i, std::size_t j, MultiPoly v) {
    if (v.vars() != vars_)
        throw std::invalid_argument("SquareMatrix: entry variable-list mismatch");
    e_[i * dim_ + j] = std::move(v);
}

SquareMatrix SquareMatrix::operator+(const SquareMatrix& o) const {
    if (dim_ != o.dim_ || vars_ != o.vars_)
        throw std::invalid_argument("SquareMatrix: shape or variable mismatch");
    SquareMatrix out(dim_, vars_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + o.e_[k];
    return out;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& o) const {
    if (dim_ != o.dim_ || vars_ != o.vars_)
        throw std::invalid_argument("SquareMatrix: shape or variable mismatch");
    SquareMatrix out(dim_, vars_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const MultiPoly& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                const MultiPoly& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                out.e_[i * dim_ + j] = out.e_[i * dim_ + j] + aik * bkj;
            }
        }
    }
    return out;
}

SquareMatrix SquareMatrix::scale(const MultiPoly& c) const {
    SquareMatrix out(dim_, vars_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * c;
    return out;
}

SquareMatrix SquareMatrix::scale(const Rational& c) const {
    SquareMatrix out(dim_, vars_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k].scale(c);
    return out;
}

SquareMatrix SquareMatrix::pow(unsigned e) const {
    SquareMatrix result = identity(dim_, vars_);
    SquareMatrix base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

MultiPoly SquareMatrix::trace() const {
    MultiPoly t(vars_);
    for (std::size_t i = 0; i < dim_; ++i) t = t + at(i, i);
    return t;
}

MultiPoly trace_of_product(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim() != b.dim() || a.vars() != b.vars())
        throw std::invalid_argument("trace_of_product: shape or variable mismatch");
    MultiPoly t(a.vars());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (a.at(i, j).is_zero() || b.at(j, i).is_zero()) continue;
            t = t + a.at(i, j) * b.at(j, i);
        }
    return t;
}

namespace {

// Coefficients c_0..c_d of det(I - tA) from the Newton recurrence
// k*c_k = -(p_1 c_{k-1} + ... + p_k c_0) with p_r = Tr(A^r).
std::vector<MultiPoly> newton_coefficients(const SquareMatrix& a) {
    std::size_t d = a.dim();
    std::vector<MultiPoly> p;  // power sums, p[r-1] = Tr(A^r)
    p.reserve(d);
    SquareMatrix power = a;
    for (std::size_t r = 1; r <= d; ++r) {
        p.push_back(power.trace());
        if (r < d) power = power * a;
    }
    std::vector<MultiPoly> c;
    c.reserve(d + 1);
    c.push_back(MultiPoly::constant(Rational(1), a.vars()));
    for (std::size_t k = 1; k <= d; ++k) {
        MultiPoly acc(a.vars());
        for (std::size_t j = 1; j <= k; ++j) acc = acc + p[j - 1] * c[k - j];
        c.push_back((-acc).scale(Rational(1, static_cast<long>(k))));
    }
    return c;
}

}  // namespace

MultiPoly det_one_minus_tA(const SquareMatrix& a, std::size_t max_degree,
                           const std::string& t_var) {
    if (max_degree < a.dim())
        throw std::invalid_argument("det_one_minus_tA: max_degree below matrix dimension");
    std::vector<std::string> out_vars = a.vars();
    if (std::find(out_vars.begin(), out_vars.end(), t_var) != out_vars.end())
        throw std::invalid_argument("det_one_minus_tA: '" + t_var + "' already a matrix variable");
    out_vars.push_back(t_var);

    std::vector<MultiPoly> c = newton_coefficients(a);
    MultiPoly result(out_vars);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        Monomial tk(out_vars.size(), 0);
        tk.back() = static_cast<std::uint32_t>(k);
        result = result + c[k].with_vars(out_vars) * MultiPoly::monomial(tk, Rational(1), out_vars);
    }
    return result;
}

MultiPoly det_one_minus_tA(const SquareMatrix& a) {
    return det_one_minus_tA(a, a.dim());
}

MultiPoly determinant(const SquareMatrix& a) {
    // det(I - tA) = sum_k c_k t^k with c_d = (-1)^d det(A)
    std::vector<MultiPoly> c = newton_coefficients(a);
    MultiPoly top = c.back();
    return (a.dim() % 2 == 1) ? -top : top;
}

}  // namespace polya
