#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "wilfkit/decomposition.hpp"
#include "wilfkit/enumeration.hpp"

using namespace wilfkit;

namespace {

std::vector<Permutation> all_perms(std::size_t n) {
    std::vector<std::uint8_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = std::uint8_t(i + 1);
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

bool passes(const Permutation& p, CountFilter f) {
    switch (f) {
        case CountFilter::all: return true;
        case CountFilter::involutions: return is_involution(p);
        case CountFilter::sum_decomposable: return is_sum_decomposable(p);
        case CountFilter::skew_decomposable: return is_skew_decomposable(p);
        case CountFilter::simple: return is_simple(p);
    }
    return false;
}

std::uint64_t naive_count(std::size_t n, const PatternSet& basis, CountFilter f) {
    std::uint64_t total = 0;
    for (const auto& p : all_perms(n)) {
        bool avoids = true;
        for (const auto& b : basis.members()) avoids &= !contains(p, b);
        total += avoids && passes(p, f);
    }
    return total;
}

}  // namespace

TEST_CASE("filter names round-trip") {
    for (auto f : {CountFilter::all, CountFilter::involutions, CountFilter::sum_decomposable,
                   CountFilter::skew_decomposable, CountFilter::simple})
        CHECK(parse_count_filter(to_string(f)) == f);
    CHECK(!parse_count_filter("bogus").has_value());
}

TEST_CASE("tree counts match the permutation-by-permutation oracle") {
    const std::vector<PatternSet> bases{
        PatternSet{},
        parse_pattern_set("21"),
        parse_pattern_set("123"),
        parse_pattern_set("132"),
        parse_pattern_set("1234"),
        parse_pattern_set("2413,3142"),
        parse_pattern_set("2143,3142,246135"),
        parse_pattern_set("1324,3416725"),
    };
    for (const auto& basis : bases)
        for (auto f : {CountFilter::all, CountFilter::involutions, CountFilter::sum_decomposable,
                       CountFilter::skew_decomposable, CountFilter::simple})
            for (std::size_t n = 0; n <= 7; ++n)
                CHECK(count_avoiders(n, basis, f) == naive_count(n, basis, f));
}

TEST_CASE("known counting sequences") {
    // Catalan for a single length-3 pattern.
    const CountReport catalan = count_sequence(8, parse_pattern_set("123"));
    CHECK(catalan.counts ==
          std::vector<std::uint64_t>{1, 2, 5, 14, 42, 132, 429, 1430});

    // 1234-avoiders.
    const CountReport av1234 = count_sequence(8, parse_pattern_set("1234"));
    CHECK(av1234.counts == std::vector<std::uint64_t>{1, 2, 6, 23, 103, 513, 2761, 15767});

    // Separable permutations: large Schroder numbers.
    const CountReport sep = count_sequence(8, parse_pattern_set("2413,3142"));
    CHECK(sep.counts == std::vector<std::uint64_t>{1, 2, 6, 22, 90, 394, 1806, 8558});

    // Degenerate bases.
    CHECK(count_avoiders(5, parse_pattern_set("21")) == 1);
    CHECK(count_avoiders(5, parse_pattern_set("1")) == 0);
    CHECK(count_avoiders(0, parse_pattern_set("1")) == 1);

    // A basis containing the empty pattern excludes everything.
    const PatternSet empty_member{{Permutation()}};
    CHECK(count_avoiders(0, empty_member) == 0);
    CHECK(count_avoiders(3, empty_member) == 0);
}

TEST_CASE("count_sequence agrees with single counts") {
    const PatternSet basis = parse_pattern_set("2143,3142,246135");
    const CountReport r = count_sequence(7, basis, CountFilter::skew_decomposable);
    for (std::size_t n = 1; n <= 7; ++n)
        CHECK(r.at(n) == count_avoiders(n, basis, CountFilter::skew_decomposable));
}

TEST_CASE("involution counts") {
    // With no patterns the counts obey t(n) = t(n-1) + (n-1) t(n-2).
    std::vector<std::uint64_t> t{1, 1};  // t(0), t(1)
    for (std::size_t n = 2; n <= 9; ++n) t.push_back(t[n - 1] + (n - 1) * t[n - 2]);
    for (std::size_t n = 0; n <= 9; ++n)
        CHECK(count_avoiders(n, PatternSet{}, CountFilter::involutions) == t[n]);

    // 4321-avoiding involutions: Motzkin numbers.
    const CountReport motzkin = count_sequence(7, parse_pattern_set("4321"), CountFilter::involutions);
    CHECK(motzkin.counts == std::vector<std::uint64_t>{1, 2, 4, 9, 21, 51, 127});

    // Against the oracle for the mixed-length basis.
    const PatternSet basis = parse_pattern_set("4231,5276143");
    for (std::size_t n = 0; n <= 7; ++n)
        CHECK(count_avoiders(n, basis, CountFilter::involutions) ==
              naive_count(n, basis, CountFilter::involutions));
}

TEST_CASE("determinism across thread counts") {
    const PatternSet basis = parse_pattern_set("132");
    const CountReport a = count_sequence(8, basis, CountFilter::all, EnumOptions{1});
    const CountReport b = count_sequence(8, basis, CountFilter::all, EnumOptions{4});
    const CountReport c = count_sequence(8, basis, CountFilter::all, EnumOptions{3});
    CHECK(a.counts == b.counts);
    CHECK(a.counts == c.counts);

    const CountReport d = count_sequence(7, PatternSet{}, CountFilter::simple, EnumOptions{5});
    const CountReport e = count_sequence(7, PatternSet{}, CountFilter::simple, EnumOptions{1});
    CHECK(d.counts == e.counts);
}

TEST_CASE("node budget is enforced") {
    bool thrown = false;
    try {
        count_avoiders(10, PatternSet{}, CountFilter::all, EnumOptions{0, 100});
    } catch (const BudgetExceededError& ex) {
        thrown = true;
        CHECK(ex.budget() == 100);
    }
    CHECK(thrown);

    // A budget ample for the job does not fire.
    CHECK(count_avoiders(5, parse_pattern_set("132"), CountFilter::all, EnumOptions{0, 100'000}) == 42);
}

TEST_CASE("for_each_avoider visits exactly the avoiders") {
    const PatternSet basis = parse_pattern_set("132");
    for (std::size_t n = 0; n <= 6; ++n) {
        std::vector<Permutation> got, expected;
        for_each_avoider(n, basis, [&](const Permutation& p) { got.push_back(p); });
        for (const auto& p : all_perms(n))
            if (!contains(p, parse_perm("132"))) expected.push_back(p);
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
}

TEST_CASE("wilf equivalence verdicts") {
    // 123 and 132 are classically equivalent.
    const EquivalenceVerdict same =
        wilf_equal(8, parse_pattern_set("123"), parse_pattern_set("132"));
    CHECK(same.agreed());
    CHECK(same.agrees_up_to == 8);

    // 123 against 1234 diverges already at n = 3 (5 vs 6 avoiders).
    const EquivalenceVerdict diff =
        wilf_equal(8, parse_pattern_set("123"), parse_pattern_set("1234"));
    CHECK(!diff.agreed());
    CHECK(diff.agrees_up_to == 2);
    CHECK(diff.divergence == Divergence{3, 5, 6});

    // The unbalanced pair at desk depth.
    const EquivalenceVerdict unb =
        wilf_equal(8, parse_pattern_set("1234"), parse_pattern_set("1324,3416725"));
    CHECK(unb.agreed());
}

TEST_CASE("search on a toy instance finds nothing") {
    const SearchReport r = search_unbalanced({3}, {3, 4}, 6);
    CHECK(r.findings.empty());
    CHECK(r.left_candidates == 2);  // canonical singletons {123} and {132}
    CHECK(r.right_candidates > 0);
    CHECK(!r.reducible_right.empty());  // e.g. {123, 1234}
    for (const auto& s : r.reducible_right) CHECK(!s.is_antichain());
    CHECK(r.nodes_visited > 0);
    CHECK(r.left_lengths == std::vector<std::size_t>{3});
    CHECK(r.right_lengths == std::vector<std::size_t>{3, 4});
}

TEST_CASE("search input validation and budget") {
    CHECK_THROWS(search_unbalanced({}, {3}, 5));
    CHECK_THROWS(search_unbalanced({3}, {}, 5));
    CHECK_THROWS(search_unbalanced({3}, {3, 10}, 5));   // patterns are capped at length 9
    CHECK_THROWS(search_unbalanced({3}, {3, 4}, 25));   // depth cap
    CHECK_THROWS_AS(search_unbalanced({3}, {3, 4}, 6, EnumOptions{0, 50}), BudgetExceededError);
}

TEST_CASE("egge pattern list") {
    const auto& pats = egge_patterns();
    CHECK(pats.size() == 8);
    for (const auto& p : pats) CHECK(p.size() == 6);
    CHECK(std::count(pats.begin(), pats.end(), parse_perm("246135")) == 1);
    std::vector<Permutation> sorted = pats;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::unique(sorted.begin(), sorted.end()) == sorted.end());

    const auto rows = egge_check(5);
    CHECK(rows.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(rows[i].pattern == pats[i]);
        CHECK(rows[i].verdict.agreed());
        CHECK(rows[i].verdict.agrees_up_to == 5);
    }
}
