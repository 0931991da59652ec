#include "wilfkit/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

#include "wilfkit/enumeration.hpp"
#include "wilfkit/pattern_set.hpp"

namespace wilfkit {

std::vector<Interval> proper_intervals(const Permutation& p) {
    const auto& v = p.values();
    const std::size_t n = v.size();
    std::vector<Interval> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t lo = v[i], hi = v[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            lo = std::min(lo, v[j]);
            hi = std::max(hi, v[j]);
            const std::size_t len = j - i + 1;
            if (len == n) break;
            if (std::size_t(hi - lo) + 1 == len) out.push_back({i + 1, j + 1});
        }
    }
    return out;
}

bool is_simple(const Permutation& p) {
    const auto& v = p.values();
    const std::size_t n = v.size();
    if (n <= 2) return true;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t lo = v[i], hi = v[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            lo = std::min(lo, v[j]);
            hi = std::max(hi, v[j]);
            const std::size_t len = j - i + 1;
            if (len == n) break;
            if (std::size_t(hi - lo) + 1 == len) return false;
        }
    }
    return true;
}

bool is_sum_decomposable(const Permutation& p) {
    const auto& v = p.values();
    std::uint8_t mx = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        mx = std::max(mx, v[i]);
        if (mx == i + 1) return true;  // prefix holds exactly {1..i+1}
    }
    return false;
}

bool is_skew_decomposable(const Permutation& p) {
    const auto& v = p.values();
    const std::size_t n = v.size();
    std::uint8_t mn = 255;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        mn = std::min(mn, v[i]);
        if (mn == n - i) return true;  // prefix holds exactly {n-i .. n}
    }
    return false;
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
    std::vector<std::uint8_t> v = a.values();
    for (std::uint8_t x : b.values()) v.push_back(std::uint8_t(x + a.size()));
    return Permutation(std::move(v));
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
    std::vector<std::uint8_t> v;
    v.reserve(a.size() + b.size());
    for (std::uint8_t x : a.values()) v.push_back(std::uint8_t(x + b.size()));
    for (std::uint8_t x : b.values()) v.push_back(x);
    return Permutation(std::move(v));
}

Permutation inflate(const Permutation& skeleton, const std::vector<Permutation>& blocks) {
    if (blocks.size() != skeleton.size())
        throw std::invalid_argument("inflate: block count does not match skeleton length");
    std::size_t total = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("inflate: empty block");
        total += b.size();
    }
    // value offset of block i = total size of blocks whose skeleton entry is smaller
    const std::size_t k = skeleton.size();
    std::vector<std::size_t> offset(k, 0);
    for (std::size_t rank = 1, acc = 0; rank <= k; ++rank) {
        for (std::size_t i = 0; i < k; ++i) {
            if (skeleton.values()[i] == rank) {
                offset[i] = acc;
                acc += blocks[i].size();
            }
        }
    }
    std::vector<std::uint8_t> v;
    v.reserve(total);
    for (std::size_t i = 0; i < k; ++i)
        for (std::uint8_t x : blocks[i].values()) v.push_back(std::uint8_t(x + offset[i]));
    return Permutation(std::move(v));
}

namespace {

// Pattern of the sub-word at positions [start, end], 1-based inclusive.
Permutation flatten_range(const Permutation& p, std::size_t start, std::size_t end) {
    std::vector<std::uint8_t> part(p.values().begin() + (start - 1), p.values().begin() + end);
    std::vector<std::uint8_t> sorted = part;
    std::sort(sorted.begin(), sorted.end());
    for (auto& x : part)
        x = std::uint8_t(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin() + 1);
    return Permutation(std::move(part));
}

}  // namespace

BlockDecomposition block_decomposition(const Permutation& p) {
    const std::size_t n = p.size();
    if (n == 0) throw std::invalid_argument("block_decomposition: empty permutation");
    if (n == 1) return {p, {p}};

    const auto& v = p.values();
    // Sum case: cut at the shortest prefix holding {1..i}; that prefix is
    // sum-indecomposable, which is what makes the 12-factorization unique.
    {
        std::uint8_t mx = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            mx = std::max(mx, v[i]);
            if (mx == i + 1)
                return {Permutation({1, 2}), {flatten_range(p, 1, i + 1), flatten_range(p, i + 2, n)}};
        }
    }
    // Skew case, mirror of the above.
    {
        std::uint8_t mn = 255;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            mn = std::min(mn, v[i]);
            if (mn == n - i)
                return {Permutation({2, 1}), {flatten_range(p, 1, i + 1), flatten_range(p, i + 2, n)}};
        }
    }

    std::vector<Interval> ivs = proper_intervals(p);
    if (ivs.empty()) {
        // simple input: skeleton is p itself, all blocks trivial
        std::vector<Permutation> ones(n, Permutation({1}));
        return {p, std::move(ones)};
    }

    // Simple skeleton of length >= 4: blocks are the maximal proper
    // intervals, which are pairwise disjoint in this case; uncovered
    // positions become singleton blocks.
    std::vector<Interval> maximal;
    for (const auto& a : ivs) {
        bool covered = false;
        for (const auto& b : ivs)
            if ((b.start < a.start && a.end <= b.end) || (b.start <= a.start && a.end < b.end)) {
                covered = true;
                break;
            }
        if (!covered) maximal.push_back(a);
    }
    std::sort(maximal.begin(), maximal.end(),
              [](const Interval& a, const Interval& b) { return a.start < b.start; });

    std::vector<Permutation> blocks;
    std::vector<std::uint8_t> skeleton_word;
    std::size_t pos = 1;
    for (const auto& iv : maximal) {
        if (iv.start < pos) throw std::logic_error("block_decomposition: overlapping maximal intervals");
        while (pos < iv.start) {
            blocks.push_back(Permutation({1}));
            skeleton_word.push_back(v[pos - 1]);
            ++pos;
        }
        blocks.push_back(flatten_range(p, iv.start, iv.end));
        skeleton_word.push_back(*std::min_element(v.begin() + (iv.start - 1), v.begin() + iv.end));
        pos = iv.end + 1;
    }
    while (pos <= n) {
        blocks.push_back(Permutation({1}));
        skeleton_word.push_back(v[pos - 1]);
        ++pos;
    }

    // flatten the representative word into the skeleton
    std::vector<std::uint8_t> sorted = skeleton_word;
    std::sort(sorted.begin(), sorted.end());
    for (auto& x : skeleton_word)
        x = std::uint8_t(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin() + 1);
    Permutation skeleton(std::move(skeleton_word));

    if (skeleton.size() < 4 || !is_simple(skeleton))
        throw std::logic_error("block_decomposition: skeleton is not simple of length >= 4");
    BlockDecomposition out{std::move(skeleton), std::move(blocks)};
    if (inflate(out.skeleton, out.blocks) != p)
        throw std::logic_error("block_decomposition: inflate round trip failed");
    return out;
}

std::vector<Permutation> simples_in_class(std::size_t n, const PatternSet& basis, bool include_short) {
    if (n < 4 && !include_short) return {};
    std::vector<Permutation> out;
    for_each_avoider(n, basis, [&](const Permutation& p) {
        if (is_simple(p)) out.push_back(p);
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool is_skew_merged(const Permutation& p) {
    static const Permutation p2143({2, 1, 4, 3}), p3412({3, 4, 1, 2});
    return !contains(p, p2143) && !contains(p, p3412);
}

}  // namespace wilfkit
