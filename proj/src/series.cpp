#include "polya/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace polya {

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<std::string> vars)
    : vars_(std::move(vars)), coef_(order + 1, MultiPoly(vars_)) {}

TruncatedSeries::TruncatedSeries(std::vector<MultiPoly> coefficients)
    : coef_(std::move(coefficients)) {
    if (coef_.empty())
        throw std::invalid_argument("TruncatedSeries: need at least the t^0 coefficient");
    vars_ = coef_.front().vars();
    for (const auto& c : coef_)
        if (c.vars() != vars_)
            throw std::invalid_argument("TruncatedSeries: coefficient variable lists differ");
}

TruncatedSeries TruncatedSeries::one(unsigned order, const std::vector<std::string>& vars) {
    return constant(Rational(1), order, vars);
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, unsigned order,
                                          const std::vector<std::string>& vars) {
    TruncatedSeries s(order, vars);
    s.coef_[0] = MultiPoly::constant(c, vars);
    return s;
}

const MultiPoly& TruncatedSeries::coefficient(unsigned n) const {
    if (n >= coef_.size())
        throw std::out_of_range("TruncatedSeries: coefficient beyond truncation order");
    return coef_[n];
}

void TruncatedSeries::set_coefficient(unsigned n, MultiPoly c) {
    if (n >= coef_.size())
        throw std::out_of_range("TruncatedSeries: coefficient beyond truncation order");
    if (c.vars() != vars_)
        throw std::invalid_argument("TruncatedSeries: coefficient variable-list mismatch");
    coef_[n] = std::move(c);
}

void TruncatedSeries::require_compatible(const TruncatedSeries& o) const {
    if (coef_.size() != o.coef_.size())
        throw std::invalid_argument("TruncatedSeries: truncation order mismatch");
    if (vars_ != o.vars_)
        throw std::invalid_argument("TruncatedSeries: variable-list mismatch");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    require_compatible(o);
    TruncatedSeries out = *this;
    for (std::size_t n = 0; n < coef_.size(); ++n) out.coef_[n] = coef_[n] + o.coef_[n];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    require_compatible(o);
    TruncatedSeries out = *this;
    for (std::size_t n = 0; n < coef_.size(); ++n) out.coef_[n] = coef_[n] - o.coef_[n];
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out = *this;
    for (auto& c : out.coef_) c = -c;
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    require_compatible(o);
    TruncatedSeries out(order(), vars_);
    for (std::size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < coef_.size(); ++j) {
            if (o.coef_[j].is_zero()) continue;
            out.coef_[i + j] = out.coef_[i + j] + coef_[i] * o.coef_[j];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::scale(const Rational& c) const {
    TruncatedSeries out = *this;
    for (auto& x : out.coef_) x = x.scale(c);
    return out;
}

TruncatedSeries TruncatedSeries::scale(const MultiPoly& c) const {
    TruncatedSeries out = *this;
    for (auto& x : out.coef_) x = x * c;
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (!coef_[0].is_constant() || coef_[0].is_zero())
        throw std::invalid_argument(
            "TruncatedSeries::inverse: constant term must be a nonzero rational constant");
    Rational c0 = coef_[0].constant_value();
    Rational c0inv = Rational(1) / c0;
    TruncatedSeries out(order(), vars_);
    out.coef_[0] = MultiPoly::constant(c0inv, vars_);
    for (std::size_t n = 1; n < coef_.size(); ++n) {
        MultiPoly acc(vars_);
        for (std::size_t k = 1; k <= n; ++k) {
            if (coef_[k].is_zero()) continue;
            acc = acc + coef_[k] * out.coef_[n - k];
        }
        out.coef_[n] = (-acc).scale(c0inv);
    }
    return out;
}

TruncatedSeries TruncatedSeries::exp() const {
    if (!coef_[0].is_zero())
        throw std::invalid_argument("TruncatedSeries::exp: constant term must vanish");
    TruncatedSeries result = one(order(), vars_);
    TruncatedSeries term = result;
    for (unsigned k = 1; k <= order(); ++k) {
        term = (term * *this).scale(Rational(1, static_cast<long>(k)));
        result = result + term;
    }
    return result;
}

TruncatedSeries TruncatedSeries::pow_int(long e) const {
    if (e < 0) return inverse().pow_int(-e);
    TruncatedSeries result = one(order(), vars_);
    TruncatedSeries base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1ul) result = result * base;
        k >>= 1ul;
        if (k > 0) base = base * base;
    }
    return result;
}

TruncatedSeries TruncatedSeries::negate_t() const {
    TruncatedSeries out = *this;
    for (std::size_t n = 1; n < coef_.size(); n += 2) out.coef_[n] = -out.coef_[n];
    return out;
}

std::vector<std::string> TruncatedSeries::coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(coef_.size());
    for (const auto& c : coef_) out.push_back(c.str());
    return out;
}

TruncatedSeries poly_to_series(const MultiPoly& p, const std::string& t_var, unsigned order) {
    auto split = p.coefficients_of(t_var);
    std::vector<std::string> rest = p.vars();
    rest.erase(std::find(rest.begin(), rest.end(), t_var));
    TruncatedSeries out(order, rest);
    for (const auto& [e, c] : split)
        if (e <= order) out.set_coefficient(e, c);
    return out;
}

}  // namespace polya
