#include "wilfkit/board.hpp"

#include <algorithm>
#include <stdexcept>

namespace wilfkit {

NiceBoard::NiceBoard(std::vector<std::size_t> bottom, std::vector<std::size_t> top)
    : bottom_(std::move(bottom)), top_(std::move(top)) {
    if (bottom_.size() != top_.size())
        throw std::invalid_argument("nice board: bottom/top length mismatch");
    const std::size_t r = bottom_.size();
    for (std::size_t i = 0; i < r; ++i) {
        if (bottom_[i] < 1 || top_[i] > r)
            throw std::invalid_argument("nice board: row index out of range");
        if (i > 0 && (bottom_[i] > bottom_[i - 1] || top_[i] > top_[i - 1]))
            throw std::invalid_argument("nice board: bottom/top must be nonincreasing");
        const std::size_t anti = r - i;  // row of the antidiagonal in column i+1
        if (bottom_[i] > anti || top_[i] < anti)
            throw std::invalid_argument("nice board: antidiagonal not contained");
    }
}

std::size_t NiceBoard::cell_count() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < r(); ++i) total += top_[i] - bottom_[i] + 1;
    return total;
}

Filling::Filling(std::vector<std::size_t> row_of) : row_of_(std::move(row_of)) {
    std::vector<bool> seen(row_of_.size(), false);
    for (std::size_t row : row_of_) {
        if (row < 1 || row > row_of_.size() || seen[row - 1])
            throw std::invalid_argument("filling: row_of is not a bijection");
        seen[row - 1] = true;
    }
}

bool filling_fits(const NiceBoard& board, const Filling& filling) {
    if (board.r() != filling.r()) return false;
    for (std::size_t col = 1; col <= board.r(); ++col)
        if (!board.cell_present(col, filling.row_of(col))) return false;
    return true;
}

namespace {

void check_point_list(const std::vector<FramePoint>& pts, std::size_t n, const char* what) {
    if (pts.empty()) throw std::invalid_argument(std::string("frame: no ") + what);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].pos < 1 || pts[i].pos > n || pts[i].val < 1 || pts[i].val > n)
            throw std::invalid_argument(std::string("frame: ") + what + " point out of range");
        if (i > 0 && (pts[i].pos <= pts[i - 1].pos || pts[i].val >= pts[i - 1].val))
            throw std::invalid_argument(std::string("frame: ") + what +
                                        " must have increasing positions and decreasing values");
    }
}

}  // namespace

Frame::Frame(std::size_t n, std::vector<FramePoint> lr_mins, std::vector<FramePoint> rl_maxs)
    : n_(n), lr_mins_(std::move(lr_mins)), rl_maxs_(std::move(rl_maxs)) {
    if (n_ == 0) throw std::invalid_argument("frame: empty permutation has no frame");
    check_point_list(lr_mins_, n_, "minima");
    check_point_list(rl_maxs_, n_, "maxima");
    if (lr_mins_.front().pos != 1)
        throw std::invalid_argument("frame: position 1 must be a minimum");
    if (rl_maxs_.back().pos != n_)
        throw std::invalid_argument("frame: position n must be a maximum");
    if (lr_mins_.back().val != 1)
        throw std::invalid_argument("frame: value 1 must be a minimum");
    if (rl_maxs_.front().val != n_)
        throw std::invalid_argument("frame: value n must be a maximum");
    for (const FramePoint& mx : rl_maxs_)
        for (const FramePoint& mn : lr_mins_) {
            if ((mx.pos == mn.pos) != (mx.val == mn.val))
                throw std::invalid_argument("frame: shared position or value must be a shared point");
            // a maximum strictly left of a minimum sees it on its right
            if (mx.pos < mn.pos && mx.val <= mn.val)
                throw std::invalid_argument("frame: maximum left of a minimum must be larger");
        }
}

namespace {

std::vector<std::size_t> complement_of(std::size_t n, const std::vector<bool>& used) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= n; ++i)
        if (!used[i - 1]) out.push_back(i);
    return out;
}

}  // namespace

std::vector<std::size_t> Frame::free_positions() const {
    std::vector<bool> used(n_, false);
    for (const auto& p : lr_mins_) used[p.pos - 1] = true;
    for (const auto& p : rl_maxs_) used[p.pos - 1] = true;
    return complement_of(n_, used);
}

std::vector<std::size_t> Frame::free_values() const {
    std::vector<bool> used(n_, false);
    for (const auto& p : lr_mins_) used[p.val - 1] = true;
    for (const auto& p : rl_maxs_) used[p.val - 1] = true;
    return complement_of(n_, used);
}

Frame frame_of(const Permutation& p) {
    const FramePoints fp = frame_points(p);  // throws on empty permutation
    std::vector<FramePoint> mins, maxs;
    for (std::size_t pos : fp.lr_min_positions) mins.push_back({pos, p.value_at(pos)});
    for (std::size_t pos : fp.rl_max_positions) maxs.push_back({pos, p.value_at(pos)});
    return Frame(p.size(), std::move(mins), std::move(maxs));
}

NiceBoard board_from_frame(const Frame& frame) {
    const std::vector<std::size_t> free_pos = frame.free_positions();
    const std::vector<std::size_t> free_val = frame.free_values();
    const std::size_t r = free_pos.size();
    if (r == 0) return NiceBoard();
    std::vector<std::size_t> bottom(r), top(r);
    for (std::size_t i = 0; i < r; ++i) {
        const std::size_t p = free_pos[i];
        // cell (column of p, row of v) survives iff lo < v < hi where lo is
        // the lowest minimum value strictly left of p and hi the highest
        // maximum value strictly right of p
        std::size_t lo = 0, hi = 0;
        bool has_lo = false, has_hi = false;
        for (const auto& mn : frame.lr_mins())
            if (mn.pos < p) { lo = mn.val; has_lo = true; }  // values decrease: last wins
        for (const auto& mx : frame.rl_maxs())
            if (mx.pos > p && !has_hi) { hi = mx.val; has_hi = true; }  // first wins
        if (!has_lo || !has_hi)
            throw std::invalid_argument("frame does not span a nice board (empty column)");
        auto first = std::lower_bound(free_val.begin(), free_val.end(), lo + 1);
        auto last = std::lower_bound(free_val.begin(), free_val.end(), hi);
        if (first >= last)
            throw std::invalid_argument("frame does not span a nice board (empty column)");
        bottom[i] = std::size_t(first - free_val.begin()) + 1;
        top[i] = std::size_t(last - free_val.begin());
    }
    return NiceBoard(std::move(bottom), std::move(top));  // validates niceness
}

FrameAndBoard board_of(const Permutation& p) {
    Frame frame = frame_of(p);
    NiceBoard board = board_from_frame(frame);
    const std::vector<std::size_t> free_pos = frame.free_positions();
    const std::vector<std::size_t> free_val = frame.free_values();
    std::vector<std::size_t> row_of(free_pos.size());
    for (std::size_t i = 0; i < free_pos.size(); ++i) {
        const std::size_t v = p.value_at(free_pos[i]);
        auto it = std::lower_bound(free_val.begin(), free_val.end(), v);
        row_of[i] = std::size_t(it - free_val.begin()) + 1;
    }
    Filling filling(std::move(row_of));
    if (!filling_fits(board, filling))
        throw std::logic_error("board_of: an interior entry escaped its board");
    return {std::move(frame), std::move(board), std::move(filling)};
}

std::vector<NiceBoard> enumerate_nice_boards(std::size_t r, std::size_t cap) {
    if (r > cap) throw std::invalid_argument("enumerate_nice_boards: r exceeds the cap");
    std::vector<NiceBoard> out;
    if (r == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<std::size_t> bottom(r), top(r);
    // bottoms: nonincreasing, 1 <= bottom[i] <= r-i (0-based antidiagonal bound)
    auto gen_tops = [&](auto&& self, std::size_t i) -> void {
        if (i == r) {
            out.emplace_back(bottom, top);
            return;
        }
        const std::size_t low = r - i;
        const std::size_t high = (i == 0) ? r : std::min<std::size_t>(top[i - 1], r);
        for (std::size_t t = low; t <= high; ++t) {
            top[i] = t;
            self(self, i + 1);
        }
    };
    auto gen_bottoms = [&](auto&& self, std::size_t i) -> void {
        if (i == r) {
            gen_tops(gen_tops, 0);
            return;
        }
        const std::size_t high = std::min(r - i, (i == 0) ? r : bottom[i - 1]);
        for (std::size_t b = 1; b <= high; ++b) {
            bottom[i] = b;
            self(self, i + 1);
        }
    };
    gen_bottoms(gen_bottoms, 0);
    return out;
}

bool filled_contains(const FilledBoard& host, const FilledBoard& pattern) {
    const std::size_t k = pattern.board.r();
    const std::size_t R = host.board.r();
    if (k == 0) return true;
    if (k > R) return false;
    // pattern column whose 1 sits in row j
    std::vector<std::size_t> col_of_row(k + 1);
    for (std::size_t i = 1; i <= k; ++i) col_of_row[pattern.filling.row_of(i)] = i;

    std::vector<std::size_t> cols(k);
    auto full_check = [&]() {
        // host rows are forced by the matched 1s; they must come out ordered
        std::vector<std::size_t> rows(k);
        for (std::size_t j = 1; j <= k; ++j) {
            rows[j - 1] = host.filling.row_of(cols[col_of_row[j] - 1]);
            if (j > 1 && rows[j - 1] <= rows[j - 2]) return false;
        }
        for (std::size_t i = 1; i <= k; ++i)
            for (std::size_t j = pattern.board.bottom(i); j <= pattern.board.top(i); ++j)
                if (!host.board.cell_present(cols[i - 1], rows[j - 1])) return false;
        return true;
    };
    auto choose = [&](auto&& self, std::size_t slot, std::size_t from) -> bool {
        if (slot == k) return full_check();
        for (std::size_t c = from; c + (k - slot - 1) <= R; ++c) {
            cols[slot] = c;
            if (self(self, slot + 1, c + 1)) return true;
        }
        return false;
    };
    return choose(choose, 0, 1);
}

bool filled_contains(const FrameAndBoard& host, const FilledBoard& pattern) {
    return filled_contains(host.filled(), pattern);
}

namespace {

FilledBoard filled_board_of(const char* text) {
    FrameAndBoard fb = board_of(parse_perm(text));
    return {std::move(fb.board), std::move(fb.filling)};
}

}  // namespace

const FilledBoard& board_of_1234() {
    static const FilledBoard fb = filled_board_of("1234");
    return fb;
}

const FilledBoard& board_of_1324() {
    static const FilledBoard fb = filled_board_of("1324");
    return fb;
}

const FilledBoard& board_of_3416725() {
    static const FilledBoard fb = filled_board_of("3416725");
    return fb;
}

std::pair<bool, bool> board_avoidance_consistency(const Permutation& p) {
    static const Permutation p1234 = parse_perm("1234");
    static const Permutation p1324 = parse_perm("1324");
    static const Permutation p3416725 = parse_perm("3416725");
    const FrameAndBoard fb = board_of(p);
    const FilledBoard filled = fb.filled();
    const bool avoids_mono = !contains(p, p1234);
    const bool board_mono = !filled_contains(filled, board_of_1234());
    const bool avoids_pair = !contains(p, p1324) && !contains(p, p3416725);
    const bool board_pair =
        !filled_contains(filled, board_of_1324()) && !filled_contains(filled, board_of_3416725());
    return {avoids_mono == board_mono, avoids_pair == board_pair};
}

Filling antidiagonal_filling(const NiceBoard& board) {
    std::vector<std::size_t> row_of(board.r());
    for (std::size_t i = 0; i < board.r(); ++i) row_of[i] = board.r() - i;
    return Filling(std::move(row_of));
}

Filling greedy_filling(const NiceBoard& board) {
    std::vector<std::size_t> result(board.r(), 0);
    std::vector<std::size_t> cols(board.r()), rows(board.r());
    for (std::size_t i = 0; i < board.r(); ++i) cols[i] = rows[i] = i + 1;
    std::vector<std::size_t> bottom = board.bottoms(), top = board.tops();
    while (!bottom.empty()) {
        const std::size_t r = bottom.size();
        // cells with bottom == 1 are a suffix of the columns
        std::size_t first_bottom = 0;
        while (bottom[first_bottom] != 1) ++first_bottom;
        const std::size_t k = r - first_bottom;          // cells in the bottom row
        const std::size_t l = top[r - 1] - bottom[r - 1] + 1;  // cells in the last column
        std::size_t ci, ri;  // chosen cell in current local coordinates
        if (k <= l) {
            ci = first_bottom + 1;  // leftmost cell of the bottom row
            ri = 1;
        } else {
            ci = r;                 // top cell of the rightmost column
            ri = top[r - 1];
        }
        result[cols[ci - 1] - 1] = rows[ri - 1];
        cols.erase(cols.begin() + std::ptrdiff_t(ci - 1));
        rows.erase(rows.begin() + std::ptrdiff_t(ri - 1));
        std::vector<std::size_t> nb, nt;
        nb.reserve(r - 1);
        nt.reserve(r - 1);
        for (std::size_t i = 0; i < r; ++i) {
            if (i == ci - 1) continue;
            nb.push_back(bottom[i] - (bottom[i] > ri ? 1 : 0));
            nt.push_back(top[i] - (top[i] >= ri ? 1 : 0));
        }
        // the residual shape must still be a nice board; the constructor
        // enforces it, so a broken recursion cannot go unnoticed
        NiceBoard sub(std::move(nb), std::move(nt));
        bottom = sub.bottoms();
        top = sub.tops();
    }
    return Filling(std::move(result));
}

Permutation reconstruct(const Frame& frame, const Filling& filling) {
    const NiceBoard board = board_from_frame(frame);
    if (!filling_fits(board, filling))
        throw std::invalid_argument("reconstruct: filling does not fit the frame's board");
    std::vector<std::uint8_t> vals(frame.n(), 0);
    for (const auto& p : frame.lr_mins()) vals[p.pos - 1] = std::uint8_t(p.val);
    for (const auto& p : frame.rl_maxs()) vals[p.pos - 1] = std::uint8_t(p.val);
    const std::vector<std::size_t> free_pos = frame.free_positions();
    const std::vector<std::size_t> free_val = frame.free_values();
    for (std::size_t i = 0; i < free_pos.size(); ++i)
        vals[free_pos[i] - 1] = std::uint8_t(free_val[filling.row_of(i + 1) - 1]);
    return Permutation(std::move(vals));
}

Permutation map_bijection(const Permutation& p, MapDirection direction) {
    static const Permutation p1234 = parse_perm("1234");
    static const Permutation p1324 = parse_perm("1324");
    static const Permutation p3416725 = parse_perm("3416725");
    if (p.empty()) return p;
    if (direction == MapDirection::to_1324_class) {
        if (contains(p, p1234))
            throw std::invalid_argument("map_bijection: input must avoid 1234");
    } else {
        if (contains(p, p1324) || contains(p, p3416725))
            throw std::invalid_argument("map_bijection: input must avoid 1324 and 3416725");
    }
    const FrameAndBoard fb = board_of(p);
    const Filling target = direction == MapDirection::to_1324_class
                               ? greedy_filling(fb.board)
                               : antidiagonal_filling(fb.board);
    return reconstruct(fb.frame, target);
}

std::pair<NiceBoard, Filling> reflect_antidiagonal(const NiceBoard& board, const Filling& filling) {
    if (!filling_fits(board, filling))
        throw std::invalid_argument("reflect_antidiagonal: filling does not fit the board");
    const std::size_t r = board.r();
    std::vector<std::size_t> bottom(r), top(r);
    for (std::size_t col = 1; col <= r; ++col) {
        // reflected cell (col, row) <-> original cell (r+1-row, r+1-col)
        std::size_t lo = 0, hi = 0;
        for (std::size_t row = 1; row <= r; ++row)
            if (board.cell_present(r + 1 - row, r + 1 - col)) {
                if (lo == 0) lo = row;
                hi = row;
            }
        if (lo == 0) throw std::logic_error("reflect_antidiagonal: empty reflected column");
        for (std::size_t row = lo; row <= hi; ++row)
            if (!board.cell_present(r + 1 - row, r + 1 - col))
                throw std::logic_error("reflect_antidiagonal: reflected column not contiguous");
        bottom[col - 1] = lo;
        top[col - 1] = hi;
    }
    std::vector<std::size_t> row_of(r);
    for (std::size_t col = 1; col <= r; ++col)
        row_of[r - filling.row_of(col)] = r + 1 - col;
    return {NiceBoard(std::move(bottom), std::move(top)), Filling(std::move(row_of))};
}

std::string render_ascii(const NiceBoard& board, const Filling& filling) {
    std::string out;
    for (std::size_t row = board.r(); row >= 1; --row) {
        for (std::size_t col = 1; col <= board.r(); ++col) {
            if (!board.cell_present(col, row)) out += ' ';
            else if (filling.row_of(col) == row) out += '*';
            else out += '.';
        }
        if (row > 1) out += '\n';
    }
    return out;
}

}  // namespace wilfkit
