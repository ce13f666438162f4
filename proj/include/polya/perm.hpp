#ifndef POLYA_PERM_HPP
#define POLYA_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polya/config.hpp"
#include "polya/multipoly.hpp"
#include "polya/series.hpp"

namespace polya {

// Number of i-cycles of a permutation of {1..n}; counts[i-1] = m_i.
// Fixed points count as 1-cycles, so sum of i*m_i equals n.
struct CycleType {
    std::vector<int> counts;
    int n() const { return static_cast<int>(counts.size()); }
    bool operator==(const CycleType&) const = default;
};

// Permutation of {1..n} with 1-based semantics: apply(i) = g(i).
class Permutation {
public:
    // images[i] = g(i+1), values in 1..n forming a bijection.
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    // Accepts cycle notation "(1 2)(3 4)", "()" for the identity, and
    // one-line image notation "[2,1,3]".  n is the intended degree.
    static Permutation parse(const std::string& text, int n);

    int degree() const { return static_cast<int>(img_.size()); }
    int apply(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return img_; }

    // (g o h)(i) = g(h(i))
    Permutation compose(const Permutation& h) const;
    Permutation inverse() const;
    bool is_identity() const;
    bool is_even() const;
    CycleType cycle_type() const;

    // Nontrivial cycles, each starting at its smallest element, ordered by
    // that element.
    std::vector<std::vector<int>> cycles() const;
    // Cycle notation; the identity prints as "()".
    std::string str() const;

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

enum class GroupKind { Symmetric, Alternating, Cyclic, Dihedral, Trivial };

// Subgroup of S_n stored as an explicit, deduplicated, sorted element list
// containing the identity.
class PermGroup {
public:
    // Breadth-first closure of the generators; throws CapExceeded when the
    // subgroup would outgrow size_cap.
    static PermGroup closure(const std::vector<Permutation>& generators, int n,
                             std::uint64_t size_cap = kDefaultGroupCap);
    // Standard copies inside S_n: alternating = even permutations, cyclic is
    // generated by (1 2 ... n), dihedral adds the reflection i -> n+1-i
    // (requires n >= 3).
    static PermGroup named(GroupKind kind, int n,
                           std::uint64_t size_cap = kDefaultGroupCap);

    int degree() const { return n_; }
    std::size_t size() const { return elems_.size(); }
    const std::vector<Permutation>& elements() const { return elems_; }
    bool contains(const Permutation& g) const;

private:
    PermGroup(int n, std::vector<Permutation> elems);
    int n_ = 1;
    std::vector<Permutation> elems_;
};

// (1/|G|) sum over g of x_1^{m_1(g)} ... x_n^{m_n(g)}, over vars x_1..x_n.
MultiPoly cycle_index(const PermGroup& g);

// Series whose t^n coefficient is the cycle index of the full symmetric
// group on n letters, computed as exp(sum x_r t^r / r); coefficients live
// over x_1..x_N.
TruncatedSeries symmetric_cycle_index_series(unsigned n_max);

// Cycle index of the even permutations via the signed substitution
// x_r -> (-1)^{r+1} x_r applied to the symmetric cycle index; requires n >= 2.
MultiPoly alternating_cycle_index(int n, std::uint64_t size_cap = kDefaultGroupCap);

// Checks, for 2 <= n <= n_max, that the t^n coefficient of
// S(x,t) + 1/S(x,-t) - 1 - x_1 t equals the alternating cycle index, where S
// is the symmetric cycle index series.
bool alternating_series_identity_check(unsigned n_max);

}  // namespace polya

#endif
