#ifndef POLYA_MATRIX_HPP
#define POLYA_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "polya/multipoly.hpp"

namespace polya {

// Square matrix with exact polynomial entries sharing one variable list.
// Dimension 0 is allowed (empty matrix; det(I - tA) = 1).
class SquareMatrix {
public:
    SquareMatrix(std::size_t dim, std::vector<std::string> vars);  // zero matrix
    static SquareMatrix identity(std::size_t dim, const std::vector<std::string>& vars);
    static SquareMatrix from_rows(std::vector<std::vector<MultiPoly>> rows);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& vars() const { return vars_; }

    const MultiPoly& at(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, MultiPoly v);

    SquareMatrix operator+(const SquareMatrix& o) const;
    SquareMatrix operator*(const SquareMatrix& o) const;
    SquareMatrix scale(const MultiPoly& c) const;
    SquareMatrix scale(const Rational& c) const;
    SquareMatrix pow(unsigned e) const;
    MultiPoly trace() const;

    bool operator==(const SquareMatrix& o) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<std::string> vars_;
    std::vector<MultiPoly> e_;  // row-major
};

// Tr(A*B) without forming the product.
MultiPoly trace_of_product(const SquareMatrix& a, const SquareMatrix& b);

// det(I - tA) as an exact polynomial of degree <= dim(A) in a fresh variable
// t_var appended to the entry variables, computed from the power sums
// Tr(A^r) via the Newton recurrence (exact since coefficients contain Q).
// max_degree must be at least dim(A).
MultiPoly det_one_minus_tA(const SquareMatrix& a, std::size_t max_degree,
                           const std::string& t_var = "t");
MultiPoly det_one_minus_tA(const SquareMatrix& a);

// det(A), recovered from the top Newton coefficient.
MultiPoly determinant(const SquareMatrix& a);

}  // namespace polya

#endif
