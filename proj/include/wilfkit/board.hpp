#ifndef WILFKIT_BOARD_HPP
#define WILFKIT_BOARD_HPP

/*
 * Nice boards and the board view of a permutation.
 *
 * Delete from the diagram of sigma every left-to-right minimum and every
 * right-to-left maximum (the frame), and keep only the cells that have a
 * frame minimum strictly below-left and a frame maximum strictly above-right.
 * After renumbering the surviving columns (positions, left to right) and rows
 * (values, bottom to top) consecutively, the surviving cells form a "nice"
 * board: a staircase-convex shape with equally many rows and columns whose
 * column i occupies rows bottom[i]..top[i], both sequences nonincreasing,
 * and which contains the full antidiagonal (bottom[i] <= r+1-i <= top[i]).
 * The non-frame entries of sigma place one 1 per row and column: a rook
 * filling.
 *
 * Permutations sharing a frame correspond bijectively to rook fillings of
 * the shared board, and pattern avoidance turns into filled-board avoidance:
 *   - sigma avoids 1234 iff its filled board avoids the filled 2x2 square
 *     with increasing 1s (the board of 1234);
 *   - sigma avoids {1324, 3416725} iff its filled board avoids the boards of
 *     1324 and of 3416725.
 * Each nice board has exactly one filling of the first kind (the
 * antidiagonal) and exactly one of the second kind (computed greedily), so
 * swapping the two fillings per frame is a bijection between Av(1234) and
 * Av(1324, 3416725) that preserves frame and shape.  Reflection across the
 * antidiagonal realizes the reverse-complement-inverse symmetry; conjugating
 * everything by reversal turns that into plain inversion, which is how the
 * same filling swap restricts to involutions of the reversed classes
 * Av(4321) and Av(4231, 5276143).
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wilfkit/perm.hpp"

namespace wilfkit {

class NiceBoard {
public:
    NiceBoard() = default;  // the empty board, r = 0

    // Column i (1-based) spans rows bottom[i-1]..top[i-1].  Validates all
    // shape invariants; throws std::invalid_argument on violation.
    NiceBoard(std::vector<std::size_t> bottom, std::vector<std::size_t> top);

    std::size_t r() const { return bottom_.size(); }
    std::size_t bottom(std::size_t col) const { return bottom_.at(col - 1); }
    std::size_t top(std::size_t col) const { return top_.at(col - 1); }
    const std::vector<std::size_t>& bottoms() const { return bottom_; }
    const std::vector<std::size_t>& tops() const { return top_; }

    bool cell_present(std::size_t col, std::size_t row) const {
        return col >= 1 && col <= r() && bottom_[col - 1] <= row && row <= top_[col - 1];
    }

    std::size_t cell_count() const;

    bool operator==(const NiceBoard&) const = default;
    std::strong_ordering operator<=>(const NiceBoard&) const = default;  // (bottom, top) lex

private:
    std::vector<std::size_t> bottom_;
    std::vector<std::size_t> top_;
};

class Filling {
public:
    Filling() = default;

    // row_of[i-1] is the row of the single 1 in column i; must be a
    // bijection onto 1..r (throws std::invalid_argument otherwise).
    explicit Filling(std::vector<std::size_t> row_of);

    std::size_t r() const { return row_of_.size(); }
    std::size_t row_of(std::size_t col) const { return row_of_.at(col - 1); }
    const std::vector<std::size_t>& rows() const { return row_of_; }

    bool operator==(const Filling&) const = default;

private:
    std::vector<std::size_t> row_of_;
};

// Every 1 of the filling lies on a present cell of the board.
bool filling_fits(const NiceBoard& board, const Filling& filling);

struct FilledBoard {
    NiceBoard board;
    Filling filling;
    bool operator==(const FilledBoard&) const = default;
};

struct FramePoint {
    std::size_t pos = 0;   // 1-based position
    std::size_t val = 0;   // 1-based value
    bool operator==(const FramePoint&) const = default;
};

/*
 * The left-to-right minima and right-to-left maxima of a permutation, as
 * (position, value) points.  Validated to be realizable as the frame of an
 * actual permutation: positions strictly increase and values strictly
 * decrease within each list; position 1 is a minimum and position n a
 * maximum; value 1 belongs to the minima and value n to the maxima; a
 * position or value shared between the lists must be the same point; and a
 * maximum strictly left of a minimum must have the strictly larger value.
 */
class Frame {
public:
    Frame() = default;
    Frame(std::size_t n, std::vector<FramePoint> lr_mins, std::vector<FramePoint> rl_maxs);

    std::size_t n() const { return n_; }
    const std::vector<FramePoint>& lr_mins() const { return lr_mins_; }
    const std::vector<FramePoint>& rl_maxs() const { return rl_maxs_; }

    // Positions (resp. values) not used by any frame point, ascending.
    std::vector<std::size_t> free_positions() const;
    std::vector<std::size_t> free_values() const;

    bool operator==(const Frame&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<FramePoint> lr_mins_;
    std::vector<FramePoint> rl_maxs_;
};

Frame frame_of(const Permutation& p);  // throws on the empty permutation

// The nice board a frame spans: columns are the free positions, rows the
// free values, and a cell survives iff some minimum is strictly below-left
// and some maximum strictly above-right of it.  Throws std::invalid_argument
// if the surviving cells do not form a nice board (possible for hand-built
// frames; never for frame_of output).
NiceBoard board_from_frame(const Frame& frame);

struct FrameAndBoard {
    Frame frame;
    NiceBoard board;
    Filling filling;

    FilledBoard filled() const { return {board, filling}; }
    bool operator==(const FrameAndBoard&) const = default;
};

// Frame, board and rook filling of a permutation (throws on empty input).
FrameAndBoard board_of(const Permutation& p);

// All nice boards with r rows, in lexicographic (bottom, top) order.
// Guarded by a cap because the count grows like the square of the Catalan
// numbers; throws std::invalid_argument when r > cap.
std::vector<NiceBoard> enumerate_nice_boards(std::size_t r, std::size_t cap = 6);

/*
 * Filled-board pattern containment: an order-preserving choice of pattern_r
 * host columns and rows such that every cell of the pattern maps to a
 * present host cell and every 1 of the pattern to a host 1.  Cells of the
 * pattern that hold no 1 may map to host 1s or not — with full rook
 * fillings on both sides the 0s are forced once the 1s match, so the
 * relaxation does not change the relation.
 */
bool filled_contains(const FilledBoard& host, const FilledBoard& pattern);
bool filled_contains(const FrameAndBoard& host, const FilledBoard& pattern);

// Reference filled boards of the three patterns, built from the patterns
// themselves on first use.
const FilledBoard& board_of_1234();
const FilledBoard& board_of_1324();
const FilledBoard& board_of_3416725();

// Consistency of the two avoidance views for one permutation:
//   first  = (p avoids 1234)           == (board of p avoids board_of_1234)
//   second = (p avoids 1324, 3416725)  == (board of p avoids both other boards)
// Both components are expected to be true for every permutation.
std::pair<bool, bool> board_avoidance_consistency(const Permutation& p);

// The unique filling avoiding board_of_1234: 1s exactly on the antidiagonal.
Filling antidiagonal_filling(const NiceBoard& board);

/*
 * The unique filling avoiding both board_of_1324 and board_of_3416725.
 * Recursion: with k cells in the bottom row and l in the rightmost column,
 * place a 1 in the leftmost bottom-row cell if k <= l, else in the top cell
 * of the rightmost column; delete that row and column and continue.  The
 * residual board is validated to be nice at every step.
 */
Filling greedy_filling(const NiceBoard& board);

// Permutation with the given frame whose non-frame entries realize the
// filling on board_from_frame(frame).  Inverse of board_of: reconstructing
// from board_of(p) returns p.  Throws if the filling does not fit the board.
Permutation reconstruct(const Frame& frame, const Filling& filling);

enum class MapDirection { to_1324_class, to_1234_class };

// The bijection: keep the frame and board of p, swap the filling for the
// greedy one (to_1324_class, input must avoid 1234) or the antidiagonal one
// (to_1234_class, input must avoid 1324 and 3416725).  The two directions
// are mutually inverse; frame and board are preserved.
Permutation map_bijection(const Permutation& p, MapDirection direction);

// Reflection across the antidiagonal: cell (col, row) maps to
// (r+1-row, r+1-col).  On the underlying permutation this is the
// reverse-complement-inverse symmetry.  Shape niceness is preserved;
// applying it twice is the identity.
std::pair<NiceBoard, Filling> reflect_antidiagonal(const NiceBoard& board, const Filling& filling);

// Debug rendering, top row first: '.' empty cell, '*' cell holding a 1,
// space outside the board.
std::string render_ascii(const NiceBoard& board, const Filling& filling);

}  // namespace wilfkit

#endif
