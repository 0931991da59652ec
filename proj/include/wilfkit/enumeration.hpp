#ifndef WILFKIT_ENUMERATION_HPP
#define WILFKIT_ENUMERATION_HPP

/*
 * Counting pattern avoiders, Wilf-equivalence probing, and the search for
 * unbalanced equivalences (a single pattern against a larger set with the
 * same counting sequence).
 *
 * Enumeration grows avoiders by appending a rightmost entry of a chosen
 * relative rank.  The pattern of any prefix of an avoider is itself an
 * avoider, so the avoiders of all lengths form a tree, and a freshly
 * appended entry can only complete occurrences that use it as their final
 * element — that is the only containment check needed per extension.
 *
 * All counts are exact uint64; lengths are capped (n <= 20) so overflow is
 * impossible by construction.  Every enumeration charges visited tree nodes
 * against a node budget and aborts with BudgetExceededError beyond it.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wilfkit/pattern_set.hpp"
#include "wilfkit/perm.hpp"

namespace wilfkit {

inline constexpr std::size_t kMaxEnumLength = 20;
inline constexpr std::uint64_t kDefaultNodeBudget = 400'000'000;

enum class CountFilter { all, involutions, sum_decomposable, skew_decomposable, simple };

const char* to_string(CountFilter f);
std::optional<CountFilter> parse_count_filter(const std::string& name);

struct EnumOptions {
    unsigned threads = 0;  // 0 = WILFKIT_THREADS env, else hardware concurrency
    std::uint64_t node_budget = kDefaultNodeBudget;
};

class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(std::uint64_t budget)
        : std::runtime_error("node budget exceeded (" + std::to_string(budget) +
                             " nodes); raise the budget to proceed"),
          budget_(budget) {}
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t budget_;
};

struct CountReport {
    PatternSet basis;
    CountFilter filter = CountFilter::all;
    std::size_t n_max = 0;
    std::vector<std::uint64_t> counts;  // counts[i] is the value at n = i + 1

    std::uint64_t at(std::size_t n) const { return counts.at(n - 1); }
};

// Number of permutations of length n avoiding every member of basis and
// passing the filter.  n = 0 gives 1 for filters all/involutions, else 0.
std::uint64_t count_avoiders(std::size_t n, const PatternSet& basis,
                             CountFilter filter = CountFilter::all, const EnumOptions& opts = {});

// Counts for every n = 1..n_max in one pass.
CountReport count_sequence(std::size_t n_max, const PatternSet& basis,
                           CountFilter filter = CountFilter::all, const EnumOptions& opts = {});

// Visit every member of Av_n(basis) in generation order (sequential).
void for_each_avoider(std::size_t n, const PatternSet& basis,
                      const std::function<void(const Permutation&)>& fn,
                      std::uint64_t node_budget = kDefaultNodeBudget);

struct Divergence {
    std::size_t n = 0;
    std::uint64_t left_count = 0;
    std::uint64_t right_count = 0;
    bool operator==(const Divergence&) const = default;
};

// Exactly one outcome holds: full agreement to the probed depth
// (agrees_up_to == n_max, no divergence) or a first divergence
// (agrees_up_to == divergence->n - 1).
struct EquivalenceVerdict {
    std::size_t agrees_up_to = 0;
    std::optional<Divergence> divergence;
    bool agreed() const { return !divergence.has_value(); }
};

EquivalenceVerdict wilf_equal(std::size_t n_max, const PatternSet& left, const PatternSet& right,
                              const EnumOptions& opts = {});

/*
 * Unbalanced-equivalence search.  Left and right candidates are all pattern
 * sets with the requested length multisets, deduplicated by canonical form
 * under the eight symmetries.  Non-antichain right sets (one member contains
 * another, so the larger member is redundant and the comparison reduces to a
 * smaller one) are pruned and reported separately.
 *
 * Count sequences cannot tell Wilf-equivalent left sets apart at any depth,
 * so a finding is keyed by (left counting sequence, right set); the reported
 * representative left set is the matching one with the smallest symmetry
 * orbit (most self-symmetric), ties broken lexicographically, and all other
 * matching left sets are listed as alternatives.
 */
struct SearchFinding {
    PatternSet left;                      // designated representative
    std::vector<PatternSet> left_alternatives;  // other lefts with the same sequence
    PatternSet right;
    std::vector<std::uint64_t> sequence;  // shared counts for n = 1..n_max
    bool operator==(const SearchFinding&) const = default;
};

struct SearchReport {
    std::vector<std::size_t> left_lengths;
    std::vector<std::size_t> right_lengths;
    std::size_t n_max = 0;
    std::vector<SearchFinding> findings;       // sorted by (left, right)
    std::vector<PatternSet> reducible_right;   // canonical non-antichain sets, sorted
    std::uint64_t left_candidates = 0;
    std::uint64_t right_candidates = 0;
    std::uint64_t nodes_visited = 0;
};

SearchReport search_unbalanced(std::vector<std::size_t> left_lengths,
                               std::vector<std::size_t> right_lengths, std::size_t n_max,
                               const EnumOptions& opts = {});

// The eight length-6 patterns x for which {2143, 3142, x} is conjectured to
// be Wilf-equivalent to {2413, 3142} (the Schroder class).
const std::vector<Permutation>& egge_patterns();

struct EggeRow {
    Permutation pattern;
    EquivalenceVerdict verdict;
};

std::vector<EggeRow> egge_check(std::size_t n_max, const EnumOptions& opts = {});

}  // namespace wilfkit

#endif
