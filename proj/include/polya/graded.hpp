#ifndef POLYA_GRADED_HPP
#define POLYA_GRADED_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polya/matrix.hpp"
#include "polya/multipoly.hpp"

namespace polya {

// The formal variable of Lefschetz polynomials; graded map entries must not
// use it.
inline const std::string kLefschetzVar = "u";

// Nonnegatively graded vector space with finitely many nonzero degrees,
// stored as the dimension of each graded piece.  Trailing zero dimensions
// are canonicalized away; the empty space is allowed.
class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(std::vector<unsigned> dims);

    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    unsigned dim(int i) const;
    const std::vector<unsigned>& dims() const { return dims_; }
    unsigned total_dim() const;
    // Alternating sum of dimensions.
    long euler_characteristic() const;

    bool operator==(const GradedSpace&) const = default;

private:
    std::vector<unsigned> dims_;
};

// Hodge numbers h^{p,q}, finitely many nonzero.
using HodgeDiamond = std::map<std::pair<int, int>, unsigned>;

// Degree-0 graded endomorphism: one square matrix per degree, entries exact
// polynomials over a shared variable list (empty list = rational entries).
class GradedMap {
public:
    GradedMap(GradedSpace space, std::vector<SquareMatrix> blocks,
              std::vector<std::string> vars);

    static GradedMap identity(const GradedSpace& space,
                              std::vector<std::string> vars = {});
    // Identity blocks sized by a Betti vector; rational entries.
    static GradedMap from_betti(const std::vector<unsigned>& betti);
    // Block i is diagonal with entry x^p y^q repeated h^{p,q} times for each
    // p+q = i; entries live over {x, y}.
    static GradedMap from_hodge(const HodgeDiamond& hodge);

    const GradedSpace& space() const { return space_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const SquareMatrix& block(int i) const;

    // Blockwise matrix power.
    GradedMap power(unsigned r) const;
    GradedMap operator+(const GradedMap& o) const;
    GradedMap scale(const Rational& c) const;

    bool operator==(const GradedMap&) const = default;

private:
    GradedSpace space_;
    std::vector<SquareMatrix> blocks_;
    std::vector<std::string> vars_;
};

// L_u of a graded map: sum over degrees of (-u)^i Tr(block_i), a polynomial
// over vars(map) + u.
MultiPoly lefschetz(const GradedMap& m);

// L_{u^r} of the r-th blockwise power: sum of (-u^r)^i Tr(block_i^r).
MultiPoly lefschetz_at(const GradedMap& m, unsigned r);

// The variable list of Lefschetz polynomials of a map: vars(map) + u.
std::vector<std::string> lefschetz_vars(const GradedMap& m);

}  // namespace polya

#endif
