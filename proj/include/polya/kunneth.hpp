#ifndef POLYA_KUNNETH_HPP
#define POLYA_KUNNETH_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "polya/config.hpp"
#include "polya/graded.hpp"
#include "polya/perm.hpp"

namespace polya {

// Q_g(d_1,...,d_n) = sum over i < j with g(i) > g(j) of d_i * d_j.  Only the
// parity matters to callers: (-1)^{Q_g} is the sign a permutation picks up
// when it rearranges homogeneous tensor factors with these degrees.
long long q_form(const Permutation& g, const std::vector<int>& degrees);

// Basis of the n-fold tensor power of a graded space, bucketed by total
// degree.  A basis vector is a tuple of n flat indices into the homogeneous
// basis of the underlying space, enumerated lexicographically.  Construction
// refuses (throws CapExceeded) when total_dim^n exceeds the cap.
class TensorPowerBasis {
public:
    TensorPowerBasis(const GradedSpace& space, unsigned n,
                     std::uint64_t cap = kDefaultOracleCap);

    const GradedSpace& space() const { return space_; }
    unsigned n() const { return n_; }
    unsigned flat_dim() const { return static_cast<unsigned>(slot_deg_.size()); }
    int slot_degree(int flat) const { return slot_deg_[static_cast<std::size_t>(flat)]; }
    int slot_index(int flat) const { return slot_idx_[static_cast<std::size_t>(flat)]; }
    int max_degree() const { return static_cast<int>(pieces_.size()) - 1; }

    const std::vector<std::vector<int>>& piece(int r) const;
    int piece_dim(int r) const { return static_cast<int>(piece(r).size()); }

    // Signed image of a basis tuple under the Kunneth action of g: returns
    // the position of the image tuple within the same graded piece and the
    // sign (-1)^{Q_g} evaluated at the tuple's degree sequence.
    std::pair<int, int> apply(const Permutation& g, int r, int pos) const;

    std::vector<int> degree_sequence(int r, int pos) const;

private:
    GradedSpace space_;
    unsigned n_;
    std::vector<int> slot_deg_;   // degree of each flat basis vector
    std::vector<int> slot_idx_;   // index within its degree block
    std::vector<std::vector<std::vector<int>>> pieces_;  // pieces_[r][pos] = tuple
    std::vector<std::map<std::vector<int>, int>> index_;  // tuple -> pos, per piece
};

// Verifies that the signed action is a homomorphism: act(s)(act(t)(b))
// equals act(s*t)(b), positions and signs, for all s, t in G and all basis
// tuples.
bool representation_check(const PermGroup& g, const GradedSpace& space, unsigned n,
                          std::uint64_t cap = kDefaultOracleCap);

// Dense matrix of the n-th tensor power of a graded map on graded piece r.
SquareMatrix tensor_power_block(const TensorPowerBasis& basis, const GradedMap& phi, int r);

// Signed permutation matrix of g on graded piece r, entries 0 / +-1.
SquareMatrix kunneth_action_block(const TensorPowerBasis& basis, const Permutation& g,
                                  int r, const std::vector<std::string>& vars);

// (1/|G|) sum of the action matrices: the idempotent projecting piece r onto
// its G-invariants.
SquareMatrix averaging_projector_block(const TensorPowerBasis& basis, const PermGroup& g,
                                       int r, const std::vector<std::string>& vars);

// L_u(g . phi^{tensor n}) by explicit matrices per graded piece; ground
// truth for the per-element product formula.
MultiPoly oracle_trace(const Permutation& g, const GradedMap& phi, unsigned n,
                       std::uint64_t cap = kDefaultOracleCap);

// L_u of phi^{tensor n} restricted to the G-invariants, computed as the
// full-space trace against the averaging idempotent (valid because the
// projector commutes with the map, so the full-space trace equals the trace
// on its image).
MultiPoly invariant_lefschetz_oracle(const PermGroup& g, const GradedMap& phi, unsigned n,
                                     std::uint64_t cap = kDefaultOracleCap);

}  // namespace polya

#endif
