#pragma once

#include <vector>

#include "chow/monomial.hpp"

namespace chow {

// Total multiplicative well-orders on monomials of a fixed space.
//
//  - lex: lexicographic on the flat variable sequence.
//  - grevlex: graded reverse lexicographic on the flat sequence.
//  - block_elim: blocks compared left-to-right in a given sequence, grevlex
//    inside each block; putting the blocks to eliminate first yields the
//    standard elimination property.
//  - grevlex with a designated last variable: full grevlex on the permuted
//    sequence that moves one variable to the end (saturation trick).
class MonomialOrder {
public:
    enum class Kind { Lex, GrevLex, BlockElim, GrevLexLastVar };

    static MonomialOrder lex(SpacePtr space);
    static MonomialOrder grevlex(SpacePtr space);
    // first_blocks: indices of the blocks compared first, in that order;
    // remaining blocks follow in declared order.
    static MonomialOrder block_elim(SpacePtr space, std::vector<int> first_blocks);
    static MonomialOrder grevlex_last_var(SpacePtr space, int last_var);

    Kind kind() const { return kind_; }
    const SpacePtr& space() const { return space_; }
    const std::vector<int>& block_sequence() const { return block_seq_; }

    // > 0 when a > b, < 0 when a < b, 0 when equal.
    int compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string describe() const;

private:
    MonomialOrder(Kind k, SpacePtr space) : kind_(k), space_(std::move(space)) {}

    Kind kind_;
    SpacePtr space_;
    std::vector<int> block_seq_; // BlockElim: full block sequence
    int last_var_ = -1;          // GrevLexLastVar
};

} // namespace chow
