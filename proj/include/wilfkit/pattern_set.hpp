#ifndef WILFKIT_PATTERN_SET_HPP
#define WILFKIT_PATTERN_SET_HPP

/*
 * Finite pattern sets (avoidance bases) with a canonical form under the
 * eight diagram symmetries.  Members are kept deduplicated and sorted by
 * (length, lex); a set need not be an antichain under containment, but
 * is_antichain reports whether it is, and callers that require minimality
 * (the unbalanced-equivalence search) filter on it.
 */

#include <string>
#include <vector>

#include "wilfkit/perm.hpp"

namespace wilfkit {

class PatternSet {
public:
    PatternSet() = default;
    explicit PatternSet(std::vector<Permutation> members);

    static PatternSet parse(const std::string& text);  // see parse_pattern_set

    const std::vector<Permutation>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    // No member contains another member (every member is needed).
    bool is_antichain() const;

    bool operator==(const PatternSet&) const = default;
    std::strong_ordering operator<=>(const PatternSet& other) const;

    std::string str() const;  // members joined by commas (";" when any member needs commas)

private:
    std::vector<Permutation> members_;  // sorted by (length, lex), unique
};

// Grammar: pattern tokens separated by ',' — or by ';' if the text contains
// one, which frees the comma for use inside long (n >= 10) tokens.
PatternSet parse_pattern_set(const std::string& text);

// The image {apply_symmetry(p, g) : p in set} for a single g applied to all
// members uniformly.
PatternSet apply_symmetry(const PatternSet& set, Symmetry g);

// Lexicographically least image of the set under the eight symmetries.
// Idempotent: canonical_set(canonical_set(S)) == canonical_set(S).
PatternSet canonical_set(const PatternSet& set);

// Size of the orbit of `set` under the eight symmetries (1, 2, 4 or 8).
std::size_t symmetry_orbit_size(const PatternSet& set);

}  // namespace wilfkit

#endif
