#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "wilfkit/board.hpp"
#include "wilfkit/perm.hpp"

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

/*
 * Reference filled-board containment: choose the pattern_r host columns and
 * rows as independent subsets and check the two conditions directly.  The
 * library version only iterates over column subsets because the rows are
 * forced by the rook condition; this version does not use that shortcut.
 */
bool naive_filled_contains(const FilledBoard& host, const FilledBoard& pat) {
    const std::size_t R = host.board.r(), k = pat.board.r();
    if (k == 0) return true;
    if (k > R) return false;
    for (std::uint32_t cm = 0; cm < (1u << R); ++cm) {
        if (std::size_t(__builtin_popcount(cm)) != k) continue;
        std::vector<std::size_t> cols;
        for (std::size_t i = 1; i <= R; ++i)
            if (cm & (1u << (i - 1))) cols.push_back(i);
        for (std::uint32_t rm = 0; rm < (1u << R); ++rm) {
            if (std::size_t(__builtin_popcount(rm)) != k) continue;
            std::vector<std::size_t> rows;
            for (std::size_t j = 1; j <= R; ++j)
                if (rm & (1u << (j - 1))) rows.push_back(j);
            bool ok = true;
            for (std::size_t i = 1; ok && i <= k; ++i) {
                for (std::size_t j = 1; ok && j <= k; ++j)
                    if (pat.board.cell_present(i, j) &&
                        !host.board.cell_present(cols[i - 1], rows[j - 1]))
                        ok = false;
                if (ok && host.filling.row_of(cols[i - 1]) != rows[pat.filling.row_of(i) - 1])
                    ok = false;
            }
            if (ok) return true;
        }
    }
    return false;
}

std::vector<Filling> fittings(const NiceBoard& b) {
    std::vector<std::size_t> rows(b.r());
    for (std::size_t i = 0; i < b.r(); ++i) rows[i] = i + 1;
    std::vector<Filling> out;
    do {
        Filling f(rows);
        if (filling_fits(b, f)) out.push_back(f);
    } while (std::next_permutation(rows.begin(), rows.end()));
    return out;
}

/*
 * A frame realizing a given nice board.  One LR-minimum per distinct bottom
 * value g, placed just before the first column with that bottom and with its
 * value in the gap below the g-th free value; one RL-maximum per distinct
 * top value h, just after the last column with that top and just above the
 * h-th free value.  When a bottom gap and a top gap coincide the maximum
 * takes the larger value.  Nonincreasing bottoms/tops make both position
 * lists increasing and both value lists decreasing, and a constructed
 * maximum left of a constructed minimum always has the larger value, so the
 * result passes frame validation; scanning it back yields the board again.
 */
Frame witness_frame(const NiceBoard& b) {
    const std::size_t r = b.r();
    std::vector<bool> bot_used(r + 1, false), top_used(r + 1, false);
    for (std::size_t i = 1; i <= r; ++i) {
        bot_used[b.bottom(i)] = true;
        top_used[b.top(i)] = true;
    }
    std::vector<std::size_t> lr_val(r + 1, 0), rl_val(r + 1, 0);
    std::size_t next = 1;
    for (std::size_t g = 1; g <= r; ++g) {
        if (bot_used[g]) lr_val[g] = next++;
        if (g >= 2 && top_used[g - 1]) rl_val[g - 1] = next++;
        ++next;  // the g-th free value
    }
    if (top_used[r]) rl_val[r] = next++;
    const std::size_t n = next - 1;

    std::vector<FramePoint> mins, maxs;
    std::size_t pos = 1;
    for (std::size_t i = 1; i <= r; ++i) {
        if (i == 1 || b.bottom(i) != b.bottom(i - 1)) mins.push_back({pos++, lr_val[b.bottom(i)]});
        ++pos;  // the i-th free position
        if (i == r || b.top(i + 1) != b.top(i)) maxs.push_back({pos++, rl_val[b.top(i)]});
    }
    return Frame(n, mins, maxs);
}

}  // namespace

TEST_CASE("nice board validation") {
    CHECK(NiceBoard{}.r() == 0);
    CHECK(NiceBoard({1, 1}, {2, 2}).cell_count() == 4);
    CHECK(NiceBoard({2, 1}, {2, 1}).cell_count() == 2);  // just the antidiagonal
    CHECK(NiceBoard({2, 1, 1}, {3, 3, 2}).cell_count() == 7);

    CHECK_THROWS(NiceBoard({1}, {1, 2}));     // size mismatch
    CHECK_THROWS(NiceBoard({1, 2}, {2, 2}));  // bottom not nonincreasing
    CHECK_THROWS(NiceBoard({1, 1}, {1, 1}));  // misses the antidiagonal cell of column 1
    CHECK_THROWS(NiceBoard({2, 2}, {2, 2}));  // misses the antidiagonal cell of column 2
    CHECK_THROWS(NiceBoard({0, 1}, {2, 1}));  // rows start at 1
    CHECK_THROWS(NiceBoard({1, 1}, {3, 1}));  // top exceeds r
}

TEST_CASE("nice board enumeration counts are squared Catalan numbers") {
    const std::vector<std::size_t> expected{1, 1, 4, 25, 196, 1764, 17424};
    for (std::size_t r = 0; r <= 6; ++r) {
        const auto boards = enumerate_nice_boards(r, 6);
        CHECK(boards.size() == expected[r]);
        CHECK(std::is_sorted(boards.begin(), boards.end()));
        CHECK(std::set<NiceBoard>(boards.begin(), boards.end()).size() == boards.size());
        for (const auto& b : boards) CHECK(b.r() == r);
    }
    CHECK_THROWS(enumerate_nice_boards(7));  // default cap
    CHECK_THROWS(enumerate_nice_boards(8, 7));
}

TEST_CASE("reference boards") {
    CHECK(board_of_1234() == FilledBoard{NiceBoard({1, 1}, {2, 2}), Filling({1, 2})});
    CHECK(board_of_1324() == FilledBoard{NiceBoard({1, 1}, {2, 2}), Filling({2, 1})});
    CHECK(board_of_3416725() ==
          FilledBoard{NiceBoard({2, 1, 1}, {3, 3, 2}), Filling({2, 3, 1})});
}

TEST_CASE("board_of round-trips through reconstruct") {
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& p : all_perms(n)) {
            const FrameAndBoard fb = board_of(p);
            CHECK(reconstruct(fb.frame, fb.filling) == p);
            CHECK(filling_fits(fb.board, fb.filling));
            CHECK(board_from_frame(fb.frame) == fb.board);
            CHECK(fb.frame == frame_of(p));

            // The frame points are exactly the extreme entries.
            const FramePoints pts = frame_points(p);
            CHECK(fb.frame.lr_mins().size() == pts.lr_min_positions.size());
            for (std::size_t i = 0; i < pts.lr_min_positions.size(); ++i) {
                CHECK(fb.frame.lr_mins()[i].pos == pts.lr_min_positions[i]);
                CHECK(fb.frame.lr_mins()[i].val == p.value_at(pts.lr_min_positions[i]));
            }
        }
    CHECK_THROWS(board_of(Permutation()));
    CHECK_THROWS(frame_of(Permutation()));
}

TEST_CASE("filled containment against the two-subset oracle") {
    std::vector<FilledBoard> patterns{board_of_1234(), board_of_1324(), board_of_3416725()};
    for (const auto& q : all_perms(4)) {
        const FilledBoard f = board_of(q).filled();
        if (std::find(patterns.begin(), patterns.end(), f) == patterns.end()) patterns.push_back(f);
    }
    for (std::size_t n = 5; n <= 6; ++n)
        for (const auto& p : all_perms(n)) {
            const FrameAndBoard fb = board_of(p);
            for (const auto& pat : patterns) {
                const bool got = filled_contains(fb.filled(), pat);
                CHECK(got == naive_filled_contains(fb.filled(), pat));
                CHECK(got == filled_contains(fb, pat));
            }
        }
}

TEST_CASE("pattern avoidance equals board avoidance") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& p : all_perms(n)) {
            const auto [mono, pair] = board_avoidance_consistency(p);
            CHECK(mono);
            CHECK(pair);
        }
}

TEST_CASE("antidiagonal and greedy fillings") {
    // 2x2 full square: the tie k == l is resolved toward the bottom row, so
    // the greedy filling is the increasing one, the antidiagonal filling the
    // decreasing one.
    const NiceBoard square({1, 1}, {2, 2});
    CHECK(greedy_filling(square) == Filling({1, 2}));
    CHECK(antidiagonal_filling(square) == Filling({2, 1}));

    CHECK(greedy_filling(NiceBoard({2, 1, 1}, {3, 3, 2})) == Filling({3, 1, 2}));

    for (std::size_t r = 0; r <= 4; ++r)
        for (const auto& b : enumerate_nice_boards(r)) {
            const Filling anti = antidiagonal_filling(b);
            const Filling greedy = greedy_filling(b);
            CHECK(filling_fits(b, anti));
            CHECK(filling_fits(b, greedy));
            for (std::size_t i = 1; i <= r; ++i) CHECK(anti.row_of(i) == r + 1 - i);

            // Among all fillings of the board, each reference family has a
            // unique avoider: the antidiagonal one and the greedy one.
            std::vector<Filling> anti_avoiders, greedy_avoiders;
            for (const auto& f : fittings(b)) {
                if (!filled_contains({b, f}, board_of_1234())) anti_avoiders.push_back(f);
                if (!filled_contains({b, f}, board_of_1324()) &&
                    !filled_contains({b, f}, board_of_3416725()))
                    greedy_avoiders.push_back(f);
            }
            CHECK(anti_avoiders == std::vector<Filling>{anti});
            CHECK(greedy_avoiders == std::vector<Filling>{greedy});
        }
}

TEST_CASE("antidiagonal reflection") {
    // The example shape is its own reflection.
    const NiceBoard shape({2, 1, 1}, {3, 3, 2});
    CHECK(reflect_antidiagonal(shape, greedy_filling(shape)).first == shape);
    CHECK(reflect_antidiagonal(NiceBoard({1, 1}, {2, 2}), Filling({1, 2})) ==
          std::pair(NiceBoard({1, 1}, {2, 2}), Filling({1, 2})));

    // Reflection is an involution on every board.
    for (std::size_t r = 0; r <= 4; ++r)
        for (const auto& b : enumerate_nice_boards(r))
            for (const auto& f : {antidiagonal_filling(b), greedy_filling(b)}) {
                const auto [rb, rf] = reflect_antidiagonal(b, f);
                CHECK(filling_fits(rb, rf));
                CHECK(reflect_antidiagonal(rb, rf) == std::pair(b, f));
            }

    // On permutation boards the reflection realizes reverse-complement-
    // inverse of the underlying permutation.
    const Symmetry rci{true, true, true};
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& p : all_perms(n)) {
            const FrameAndBoard fb = board_of(p);
            const FrameAndBoard fq = board_of(apply_symmetry(p, rci));
            CHECK(reflect_antidiagonal(fb.board, fb.filling) == std::pair(fq.board, fq.filling));
        }
}

TEST_CASE("the map between the two classes") {
    const Permutation p1234 = parse_perm("1234"), p1324 = parse_perm("1324"),
                      p7 = parse_perm("3416725");
    auto in_1234_class = [&](const Permutation& p) { return !contains(p, p1234); };
    auto in_1324_class = [&](const Permutation& p) {
        return !contains(p, p1324) && !contains(p, p7);
    };

    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<Permutation> image;
        for (const auto& p : all_perms(n)) {
            if (!in_1234_class(p)) continue;
            const Permutation q = map_bijection(p, MapDirection::to_1324_class);
            CHECK(q.size() == n);
            CHECK(in_1324_class(q));
            CHECK(map_bijection(q, MapDirection::to_1234_class) == p);
            CHECK(board_of(p).frame == board_of(q).frame);
            CHECK(board_of(p).board == board_of(q).board);
            image.push_back(q);
        }
        // The image is exactly the companion class.
        std::vector<Permutation> target;
        for (const auto& q : all_perms(n))
            if (in_1324_class(q)) target.push_back(q);
        std::sort(image.begin(), image.end());
        CHECK(image == target);
    }

    CHECK(map_bijection(Permutation(), MapDirection::to_1324_class) == Permutation());
    CHECK(map_bijection(parse_perm("1"), MapDirection::to_1324_class) == parse_perm("1"));
    CHECK(map_bijection(parse_perm("321"), MapDirection::to_1234_class) == parse_perm("321"));

    CHECK_THROWS(map_bijection(parse_perm("1234"), MapDirection::to_1324_class));
    CHECK_THROWS(map_bijection(parse_perm("1324"), MapDirection::to_1234_class));
    CHECK_THROWS(map_bijection(parse_perm("3416725"), MapDirection::to_1234_class));
}

TEST_CASE("ascii rendering") {
    CHECK(render_ascii(NiceBoard{}, Filling{}) == "");
    CHECK(render_ascii(NiceBoard({1, 1}, {2, 2}), Filling({1, 2})) == ".*\n*.");
    // Board of 3416725 with its own filling.
    CHECK(render_ascii(NiceBoard({2, 1, 1}, {3, 3, 2}), Filling({2, 3, 1})) ==
          ".* \n*..\n .*");
}

TEST_CASE("hand-built frames") {
    // A valid frame whose spanned region has an empty column: minima (1,3)
    // and (3,1), maximum (4,4); free position 2 would need a free value
    // strictly between 3 and 4.
    const Frame gap(4, {{1, 3}, {3, 1}}, {{4, 4}});
    CHECK_THROWS(board_from_frame(gap));

    CHECK_THROWS(Frame(3, {{1, 2}}, {{3, 3}}));          // value 1 not a minimum
    CHECK_THROWS(Frame(3, {{1, 1}}, {{2, 3}}));          // position 3 not a maximum
    CHECK_THROWS(Frame(4, {{1, 2}, {2, 1}}, {{3, 4}, {4, 2}}));  // value 2 on both lists as different points
    CHECK_THROWS(Frame(4, {{1, 2}, {3, 1}}, {{2, 3}, {4, 4}}));  // maxima values must decrease rightward
}

TEST_CASE("every nice board is the board of some frame") {
    for (std::size_t r = 0; r <= 5; ++r)
        for (const auto& b : enumerate_nice_boards(r)) {
            if (r == 0) continue;
            const Frame w = witness_frame(b);
            CHECK(board_from_frame(w) == b);

            // Full loop through an actual permutation.
            const Permutation p = reconstruct(w, greedy_filling(b));
            const FrameAndBoard fb = board_of(p);
            CHECK(fb.frame == w);
            CHECK(fb.board == b);
            CHECK(fb.filling == greedy_filling(b));
        }
}
