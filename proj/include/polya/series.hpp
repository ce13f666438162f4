#ifndef POLYA_SERIES_HPP
#define POLYA_SERIES_HPP

#include <string>
#include <vector>

#include "polya/multipoly.hpp"

namespace polya {

// Univariate power series in t, truncated at a fixed order N, with MultiPoly
// coefficients over a shared variable list (which never contains t itself).
// Arithmetic never consults coefficients beyond N.
class TruncatedSeries {
public:
    TruncatedSeries(unsigned order, std::vector<std::string> vars);  // zero series
    explicit TruncatedSeries(std::vector<MultiPoly> coefficients);

    static TruncatedSeries one(unsigned order, const std::vector<std::string>& vars);
    static TruncatedSeries constant(const Rational& c, unsigned order,
                                    const std::vector<std::string>& vars);

    unsigned order() const { return static_cast<unsigned>(coef_.size()) - 1; }
    const std::vector<std::string>& vars() const { return vars_; }
    const MultiPoly& coefficient(unsigned n) const;
    void set_coefficient(unsigned n, MultiPoly c);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    // Cauchy product truncated at the shared order.
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scale(const Rational& c) const;
    TruncatedSeries scale(const MultiPoly& c) const;

    bool operator==(const TruncatedSeries& o) const = default;

    // Multiplicative inverse; the constant coefficient must be a nonzero
    // rational constant.
    TruncatedSeries inverse() const;

    // exp of a series with zero constant coefficient.
    TruncatedSeries exp() const;

    // Integer powers; negative exponents go through inverse().
    TruncatedSeries pow_int(long e) const;

    // t -> -t.
    TruncatedSeries negate_t() const;

    std::vector<std::string> coefficient_strings() const;

private:
    std::vector<std::string> vars_;
    std::vector<MultiPoly> coef_;  // coef_[n] is the coefficient of t^n

    void require_compatible(const TruncatedSeries& o) const;
};

// Reads a polynomial containing the series variable `t_var` as a truncated
// series over the remaining variables.  Terms of t-degree above `order` are
// discarded.
TruncatedSeries poly_to_series(const MultiPoly& p, const std::string& t_var, unsigned order);

}  // namespace polya

#endif
