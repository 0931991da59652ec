#ifndef WILFKIT_DECOMPOSITION_HPP
#define WILFKIT_DECOMPOSITION_HPP

/*
 * Substitution (block) decomposition.
 *
 * An interval of a permutation is a set of contiguous positions whose values
 * are contiguous.  A permutation is simple when it has no proper interval of
 * length strictly between 1 and n (lengths 1 and 2 count as simple by
 * convention; there are none of length 3, and 2413/3142 are the only simple
 * permutations of length 4).
 *
 * Every permutation of length >= 2 is the inflation of a unique simple
 * skeleton: sigma[tau_1, ..., tau_k].  When the skeleton is 12 (or 21) the
 * factorization is made unique by requiring the first block to be sum-
 * (resp. skew-) indecomposable; when the skeleton is simple of length >= 4
 * the blocks are the maximal proper intervals.
 */

#include <cstddef>
#include <vector>

#include "wilfkit/perm.hpp"

namespace wilfkit {

struct Interval {
    std::size_t start = 0;  // 1-based, inclusive
    std::size_t end = 0;    // 1-based, inclusive
    bool operator==(const Interval&) const = default;
};

// All intervals of length strictly between 1 and n, in (start, end) order.
std::vector<Interval> proper_intervals(const Permutation& p);

bool is_simple(const Permutation& p);
bool is_sum_decomposable(const Permutation& p);   // p = a (+) b, direct sum
bool is_skew_decomposable(const Permutation& p);  // p = a (-) b, skew sum

Permutation direct_sum(const Permutation& a, const Permutation& b);
Permutation skew_sum(const Permutation& a, const Permutation& b);

// sigma[tau_1, ..., tau_k]: replace the i-th entry of sigma by a block
// order-isomorphic to tau_i, blocks ordered among themselves like sigma.
// Throws std::invalid_argument if the block count differs from sigma's
// length or any block is empty.
Permutation inflate(const Permutation& skeleton, const std::vector<Permutation>& blocks);

struct BlockDecomposition {
    Permutation skeleton;
    std::vector<Permutation> blocks;
    bool operator==(const BlockDecomposition&) const = default;
};

// Inverse of inflate under the uniqueness conventions above.  For a simple
// input the skeleton is the permutation itself and all blocks are 1.
BlockDecomposition block_decomposition(const Permutation& p);

// Simple members of Av_n(basis), sorted lexicographically.  Lengths < 4 are
// degenerate (1, 12, 21) and excluded by default.
std::vector<Permutation> simples_in_class(std::size_t n, const class PatternSet& basis,
                                          bool include_short = false);

// Skew-merged: a decreasing sequence merged with an increasing one,
// equivalently avoidance of {2143, 3412}.
bool is_skew_merged(const Permutation& p);

}  // namespace wilfkit

#endif
