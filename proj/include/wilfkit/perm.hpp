#ifndef WILFKIT_PERM_HPP
#define WILFKIT_PERM_HPP

/*
 * Permutations in one-line notation, classical pattern containment, and the
 * dihedral symmetry group of the permutation diagram.
 *
 * Conventions used throughout the library:
 *   - positions and values are 1-based at the API surface;
 *   - a permutation of length n holds each of 1..n exactly once;
 *   - the empty permutation is a legal value (length 0);
 *   - sigma contains a pattern p if some subsequence of sigma is order
 *     isomorphic to p.
 *
 * The symmetry group is generated by reverse (r), complement (c) and inverse
 * (i); it has eight elements and acts on the square diagram of a permutation
 * as the dihedral group of the square.  Containment commutes with the action
 * applied simultaneously to host and pattern.
 */

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wilfkit {

class Permutation {
public:
    Permutation() = default;

    // Values must be a rearrangement of 1..n; throws std::invalid_argument.
    explicit Permutation(std::vector<std::uint8_t> values);

    static Permutation identity(std::size_t n);

    std::size_t size() const { return vals_.size(); }
    bool empty() const { return vals_.empty(); }

    // 1-based position access.
    std::uint8_t value_at(std::size_t pos) const { return vals_[pos - 1]; }

    const std::vector<std::uint8_t>& values() const { return vals_; }
    std::span<const std::uint8_t> span() const { return vals_; }

    Permutation reversed() const;
    Permutation complemented() const;
    Permutation inverted() const;

    bool operator==(const Permutation&) const = default;
    // Length first, then lexicographic by values: a total order usable as a
    // canonical order on pattern lists of mixed lengths.
    std::strong_ordering operator<=>(const Permutation& other) const;

    // Digit string for n <= 9, comma-separated values otherwise.
    std::string str() const;

private:
    std::vector<std::uint8_t> vals_;
};

// Inverse of str(): digit string iff n <= 9, otherwise comma-separated
// integers.  Throws std::invalid_argument on empty input, rank out of range
// or non-bijective input.
Permutation parse_perm(const std::string& text);

// Pattern containment (order-isomorphic subsequence), DFS with position and
// value window pruning.  contains(sigma, empty) is true for every sigma.
bool contains(const Permutation& host, const Permutation& pattern);
bool contains(std::span<const std::uint8_t> host, std::span<const std::uint8_t> pattern);

// True iff host contains pattern by an occurrence whose last entry is the
// last entry of host.  This is the incremental check used when growing
// avoiders by appending a rightmost entry: a freshly created occurrence must
// use the new entry, and it can only play the final role.
bool contains_using_last(std::span<const std::uint8_t> host, std::span<const std::uint8_t> pattern);

bool is_involution(const Permutation& p);

struct FramePoints {
    std::vector<std::size_t> lr_min_positions;  // 1-based, increasing
    std::vector<std::size_t> rl_max_positions;  // 1-based, increasing
    bool operator==(const FramePoints&) const = default;
};

// Positions of left-to-right minima and right-to-left maxima.  The first
// position is always a LR-minimum and the last always a RL-maximum; a
// position may be both.  Throws std::invalid_argument on the empty
// permutation (the frame of the empty permutation is not defined).
FramePoints frame_points(const Permutation& p);

/*
 * One of the eight diagram symmetries, in the normal form r^a c^b i^e with
 * the action  apply(g, s) = reverse^a(complement^b(inverse^e(s))).
 * Composition satisfies apply(compose(g,h), s) == apply(g, apply(h, s)).
 */
struct Symmetry {
    bool rev = false;
    bool comp = false;
    bool inv = false;

    bool operator==(const Symmetry&) const = default;

    static Symmetry identity() { return {}; }
    std::string name() const;  // "id", "r", "c", "rc", "i", "ri", "ci", "rci"
};

Symmetry compose(Symmetry g, Symmetry h);
Symmetry inverse_of(Symmetry g);

// Fixed deterministic enumeration order of the whole group.
const std::array<Symmetry, 8>& all_symmetries();

Permutation apply_symmetry(const Permutation& p, Symmetry g);

}  // namespace wilfkit

#endif
