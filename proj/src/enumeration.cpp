#include "wilfkit/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "wilfkit/decomposition.hpp"

namespace wilfkit {

const char* to_string(CountFilter f) {
    switch (f) {
        case CountFilter::all: return "all";
        case CountFilter::involutions: return "involutions";
        case CountFilter::sum_decomposable: return "sum-decomposable";
        case CountFilter::skew_decomposable: return "skew-decomposable";
        case CountFilter::simple: return "simple";
    }
    return "?";
}

std::optional<CountFilter> parse_count_filter(const std::string& name) {
    if (name == "all") return CountFilter::all;
    if (name == "involutions") return CountFilter::involutions;
    if (name == "sum-decomposable") return CountFilter::sum_decomposable;
    if (name == "skew-decomposable") return CountFilter::skew_decomposable;
    if (name == "simple") return CountFilter::simple;
    return std::nullopt;
}

namespace {

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("WILFKIT_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0 && v <= 256) return unsigned(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

struct BudgetCounter {
    std::atomic<std::uint64_t> used{0};
    std::uint64_t limit;

    explicit BudgetCounter(std::uint64_t lim) : limit(lim) {}

    void charge() {
        if (used.fetch_add(1, std::memory_order_relaxed) + 1 > limit)
            throw BudgetExceededError(limit);
    }
};

struct PatternTable {
    // raw words sorted by length so the applicable prefix per level is contiguous
    std::vector<std::vector<std::uint8_t>> words;
    bool has_empty = false;

    explicit PatternTable(const PatternSet& basis) {
        for (const auto& p : basis.members()) {
            if (p.empty()) has_empty = true;
            else words.push_back(p.values());
        }
        std::sort(words.begin(), words.end(),
                  [](const auto& a, const auto& b) { return a.size() < b.size(); });
    }

    // true iff some pattern occurs in `child` using its last entry
    bool last_entry_hits(std::span<const std::uint8_t> child) const {
        for (const auto& w : words) {
            if (w.size() > child.size()) break;
            if (contains_using_last(child, w)) return true;
        }
        return false;
    }
};

// Depth-first growth of the avoider tree from the node stored in buf[m].
// visit(level, span) runs for every avoider encountered, levels m+1..n_max.
template <class F>
void dfs_grow(std::vector<std::vector<std::uint8_t>>& buf, std::size_t m, std::size_t n_max,
              const PatternTable& pats, BudgetCounter& budget, F&& visit) {
    const auto& cur = buf[m];
    auto& child = buf[m + 1];
    for (std::uint8_t v = 1; v <= m + 1; ++v) {
        for (std::size_t i = 0; i < m; ++i)
            child[i] = std::uint8_t(cur[i] + (cur[i] >= v ? 1 : 0));
        child[m] = v;
        if (pats.last_entry_hits({child.data(), m + 1})) continue;
        budget.charge();
        visit(m + 1, std::span<const std::uint8_t>{child.data(), m + 1});
        if (m + 1 < n_max) dfs_grow(buf, m + 1, n_max, pats, budget, visit);
    }
}

std::vector<std::vector<std::uint8_t>> make_buffers(std::size_t n_max) {
    std::vector<std::vector<std::uint8_t>> buf(n_max + 1);
    for (std::size_t m = 0; m <= n_max; ++m) buf[m].resize(m);
    return buf;
}

void check_n_max(std::size_t n_max) {
    if (n_max > kMaxEnumLength)
        throw std::invalid_argument("length cap is " + std::to_string(kMaxEnumLength));
}

bool filter_passes(CountFilter f, std::span<const std::uint8_t> word) {
    if (f == CountFilter::all) return true;
    Permutation p(std::vector<std::uint8_t>(word.begin(), word.end()));
    switch (f) {
        case CountFilter::involutions: return is_involution(p);
        case CountFilter::sum_decomposable: return is_sum_decomposable(p);
        case CountFilter::skew_decomposable: return is_skew_decomposable(p);
        case CountFilter::simple: return is_simple(p);
        default: return true;
    }
}

// Tree counting with an optional per-level filter; parallelises over the
// avoiding prefixes of depth min(4, n_max), aggregating per-task counts in
// fixed slot order so results do not depend on the thread count.
std::vector<std::uint64_t> tree_counts(std::size_t n_max, const PatternSet& basis, CountFilter filter,
                                       unsigned threads, BudgetCounter& budget) {
    std::vector<std::uint64_t> counts(n_max + 1, 0);
    PatternTable pats(basis);
    if (pats.has_empty) return counts;  // the empty pattern occurs in everything
    counts[0] = filter_passes(filter, {}) ? 1 : 0;  // e.g. the empty involution
    if (n_max == 0) return counts;

    const std::size_t d0 = std::min<std::size_t>(4, n_max);
    auto buf = make_buffers(n_max);
    std::vector<std::vector<std::uint8_t>> prefixes;
    dfs_grow(buf, 0, d0, pats, budget, [&](std::size_t lvl, std::span<const std::uint8_t> w) {
        if (filter_passes(filter, w)) ++counts[lvl];
        if (lvl == d0 && d0 < n_max) prefixes.emplace_back(w.begin(), w.end());
    });
    if (prefixes.empty()) return counts;

    const unsigned T = std::min<unsigned>(resolve_threads(threads), unsigned(prefixes.size()));
    if (T <= 1) {
        for (const auto& pre : prefixes) {
            buf[d0] = pre;
            dfs_grow(buf, d0, n_max, pats, budget, [&](std::size_t lvl, std::span<const std::uint8_t> w) {
                if (filter_passes(filter, w)) ++counts[lvl];
            });
        }
        return counts;
    }

    std::vector<std::vector<std::uint64_t>> slot(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    auto worker = [&] {
        auto wbuf = make_buffers(n_max);
        try {
            for (;;) {
                const std::size_t idx = next.fetch_add(1);
                if (idx >= prefixes.size()) return;
                std::vector<std::uint64_t> local(n_max + 1, 0);
                wbuf[d0] = prefixes[idx];
                dfs_grow(wbuf, d0, n_max, pats, budget,
                         [&](std::size_t lvl, std::span<const std::uint8_t> w) {
                             if (filter_passes(filter, w)) ++local[lvl];
                         });
                slot[idx] = std::move(local);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!err) err = std::current_exception();
            next.store(prefixes.size());  // drain remaining work
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < T; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    for (const auto& local : slot)
        for (std::size_t i = 0; i <= n_max; ++i) counts[i] += local.empty() ? 0 : local[i];
    return counts;
}

// All involutions of S_n by choosing, for the smallest unassigned position,
// a fixed point or a partner to its right.
template <class F>
void gen_involutions(std::size_t n, std::vector<std::uint8_t>& val, std::size_t from, F&& out) {
    std::size_t i = from;
    while (i < n && val[i] != 0) ++i;
    if (i == n) {
        out(std::span<const std::uint8_t>{val.data(), n});
        return;
    }
    val[i] = std::uint8_t(i + 1);
    gen_involutions(n, val, i + 1, out);
    val[i] = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
        if (val[j] != 0) continue;
        val[i] = std::uint8_t(j + 1);
        val[j] = std::uint8_t(i + 1);
        gen_involutions(n, val, i + 1, out);
        val[i] = val[j] = 0;
    }
}

std::uint64_t count_involution_avoiders(std::size_t n, const PatternSet& basis, BudgetCounter& budget) {
    PatternTable pats(basis);
    if (pats.has_empty) return 0;
    std::uint64_t count = 0;
    std::vector<std::uint8_t> val(n, 0);
    gen_involutions(n, val, 0, [&](std::span<const std::uint8_t> w) {
        budget.charge();
        for (const auto& p : pats.words)
            if (contains(w, p)) return;
        ++count;
    });
    return count;
}

// Level-synchronous counting by iterative deepening: pass k charges the
// whole tree to depth k but reports the completed level-k count, letting the
// caller stop at the first level that disagrees with its expectation.
void level_counts_until(std::size_t n_max, const PatternSet& basis, BudgetCounter& budget,
                        const std::function<bool(std::size_t, std::uint64_t)>& on_level) {
    PatternTable pats(basis);
    auto buf = make_buffers(n_max);
    for (std::size_t k = 1; k <= n_max; ++k) {
        std::uint64_t c = 0;
        if (!pats.has_empty) {
            dfs_grow(buf, 0, k, pats, budget, [&](std::size_t lvl, std::span<const std::uint8_t>) {
                if (lvl == k) ++c;
            });
        }
        if (!on_level(k, c)) return;
    }
}

}  // namespace

std::uint64_t count_avoiders(std::size_t n, const PatternSet& basis, CountFilter filter,
                             const EnumOptions& opts) {
    check_n_max(n);
    BudgetCounter budget(opts.node_budget);
    if (filter == CountFilter::involutions)
        return count_involution_avoiders(n, basis, budget);
    return tree_counts(n, basis, filter, opts.threads, budget)[n];
}

CountReport count_sequence(std::size_t n_max, const PatternSet& basis, CountFilter filter,
                           const EnumOptions& opts) {
    check_n_max(n_max);
    CountReport report{basis, filter, n_max, {}};
    BudgetCounter budget(opts.node_budget);
    if (filter == CountFilter::involutions) {
        for (std::size_t n = 1; n <= n_max; ++n)
            report.counts.push_back(count_involution_avoiders(n, basis, budget));
        return report;
    }
    auto counts = tree_counts(n_max, basis, filter, opts.threads, budget);
    report.counts.assign(counts.begin() + 1, counts.end());
    return report;
}

void for_each_avoider(std::size_t n, const PatternSet& basis,
                      const std::function<void(const Permutation&)>& fn, std::uint64_t node_budget) {
    check_n_max(n);
    BudgetCounter budget(node_budget);
    PatternTable pats(basis);
    if (pats.has_empty) return;
    if (n == 0) {
        fn(Permutation());
        return;
    }
    auto buf = make_buffers(n);
    dfs_grow(buf, 0, n, pats, budget, [&](std::size_t lvl, std::span<const std::uint8_t> w) {
        if (lvl == n) fn(Permutation(std::vector<std::uint8_t>(w.begin(), w.end())));
    });
}

EquivalenceVerdict wilf_equal(std::size_t n_max, const PatternSet& left, const PatternSet& right,
                              const EnumOptions& opts) {
    check_n_max(n_max);
    CountReport lhs = count_sequence(n_max, left, CountFilter::all, opts);
    EquivalenceVerdict verdict;
    BudgetCounter budget(opts.node_budget);
    verdict.agrees_up_to = n_max;
    level_counts_until(n_max, right, budget, [&](std::size_t n, std::uint64_t c) {
        if (lhs.at(n) != c) {
            verdict.divergence = Divergence{n, lhs.at(n), c};
            verdict.agrees_up_to = n - 1;
            return false;
        }
        return true;
    });
    return verdict;
}

namespace {

// Every pattern set with the given length multiset, one representative per
// symmetry class, sorted.
std::vector<PatternSet> candidate_sets(std::vector<std::size_t> lengths) {
    std::sort(lengths.begin(), lengths.end());
    std::set<PatternSet> out;
    std::vector<Permutation> chosen(lengths.size());
    auto rec = [&](auto&& self, std::size_t slot) -> void {
        if (slot == lengths.size()) {
            PatternSet set(chosen);
            if (set.size() == lengths.size()) out.insert(canonical_set(set));
            return;
        }
        std::vector<std::uint8_t> word(lengths[slot]);
        for (std::size_t i = 0; i < word.size(); ++i) word[i] = std::uint8_t(i + 1);
        do {
            chosen[slot] = Permutation(word);
            self(self, slot + 1);
        } while (std::next_permutation(word.begin(), word.end()));
    };
    rec(rec, 0);
    return {out.begin(), out.end()};
}

// Canonical form of the ordered pair under simultaneous symmetry.
std::pair<PatternSet, PatternSet> pair_canonical(const PatternSet& a, const PatternSet& b) {
    std::pair<PatternSet, PatternSet> best{a, b};
    for (Symmetry g : all_symmetries()) {
        std::pair<PatternSet, PatternSet> img{apply_symmetry(a, g), apply_symmetry(b, g)};
        if (img < best) best = img;
    }
    return best;
}

struct LeftGroup {
    std::vector<std::uint64_t> sequence;
    std::vector<PatternSet> members;
};

}  // namespace

SearchReport search_unbalanced(std::vector<std::size_t> left_lengths,
                               std::vector<std::size_t> right_lengths, std::size_t n_max,
                               const EnumOptions& opts) {
    check_n_max(n_max);
    if (left_lengths.empty() || right_lengths.empty())
        throw std::invalid_argument("search_unbalanced: empty length multiset");
    for (std::size_t l : left_lengths)
        if (l < 1 || l > 9) throw std::invalid_argument("search_unbalanced: pattern lengths must be 1..9");
    for (std::size_t l : right_lengths)
        if (l < 1 || l > 9) throw std::invalid_argument("search_unbalanced: pattern lengths must be 1..9");

    SearchReport report;
    report.left_lengths = left_lengths;
    report.right_lengths = right_lengths;
    report.n_max = n_max;
    std::sort(report.left_lengths.begin(), report.left_lengths.end());
    std::sort(report.right_lengths.begin(), report.right_lengths.end());

    BudgetCounter budget(opts.node_budget);

    const std::vector<PatternSet> lefts = candidate_sets(left_lengths);
    report.left_candidates = lefts.size();

    // group Wilf-indistinguishable lefts by their full counting sequence
    std::map<std::vector<std::uint64_t>, LeftGroup> groups;
    for (const auto& L : lefts) {
        if (!L.is_antichain()) continue;  // some member is redundant; comparison is not new
        std::vector<std::uint64_t> seq(n_max + 1, 0);
        PatternTable pats(L);
        auto buf = make_buffers(n_max);
        if (!pats.has_empty)
            dfs_grow(buf, 0, n_max, pats, budget,
                     [&](std::size_t lvl, std::span<const std::uint8_t>) { ++seq[lvl]; });
        std::vector<std::uint64_t> key(seq.begin() + 1, seq.end());
        auto& g = groups[key];
        g.sequence = key;
        g.members.push_back(L);
    }
    std::vector<LeftGroup> left_groups;
    for (auto& [key, g] : groups) {
        std::sort(g.members.begin(), g.members.end());
        left_groups.push_back(std::move(g));
    }

    const std::vector<PatternSet> rights = candidate_sets(right_lengths);
    report.right_candidates = rights.size();
    std::vector<const PatternSet*> active;
    for (const auto& R : rights) {
        if (R.is_antichain()) active.push_back(&R);
        else report.reducible_right.push_back(R);
    }

    // Upfront feasibility estimate: each candidate tree is bounded by the
    // avoider tree of its shortest member alone, and a right set whose long
    // member is absent below length L matches or diverges by depth L + 1.
    {
        const std::size_t longest = report.right_lengths.back();
        const std::size_t K = std::min(n_max, longest + 1);
        std::map<Permutation, std::uint64_t> bound_cache;  // sum of tree sizes to depth K
        std::uint64_t estimate = 0;
        for (const PatternSet* R : active) {
            const Permutation& shortest = R->members().front();
            auto it = bound_cache.find(shortest);
            if (it == bound_cache.end()) {
                std::uint64_t total = 0;
                PatternTable pats(PatternSet({shortest}));
                auto buf = make_buffers(K);
                dfs_grow(buf, 0, K, pats, budget,
                         [&](std::size_t, std::span<const std::uint8_t>) { ++total; });
                it = bound_cache.emplace(shortest, total).first;
            }
            estimate += it->second;
        }
        if (budget.used.load() + estimate > opts.node_budget)
            throw BudgetExceededError(opts.node_budget);
    }

    for (const PatternSet* R : active) {
        std::vector<std::size_t> alive(left_groups.size());
        for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
        level_counts_until(n_max, *R, budget, [&](std::size_t n, std::uint64_t c) {
            std::vector<std::size_t> keep;
            for (std::size_t gi : alive)
                if (left_groups[gi].sequence[n - 1] == c) keep.push_back(gi);
            alive = std::move(keep);
            return !alive.empty();
        });
        for (std::size_t gi : alive) {
            const LeftGroup& g = left_groups[gi];
            // representative: smallest symmetry orbit first (most symmetric), then lex
            const PatternSet* rep = &g.members.front();
            std::size_t rep_orbit = symmetry_orbit_size(*rep);
            for (const auto& m : g.members) {
                const std::size_t orb = symmetry_orbit_size(m);
                if (orb < rep_orbit || (orb == rep_orbit && m < *rep)) {
                    rep = &m;
                    rep_orbit = orb;
                }
            }
            SearchFinding f;
            auto [cl, cr] = pair_canonical(*rep, *R);
            f.left = std::move(cl);
            f.right = std::move(cr);
            for (const auto& m : g.members)
                if (m != *rep) f.left_alternatives.push_back(m);
            f.sequence = g.sequence;
            report.findings.push_back(std::move(f));
        }
    }
    std::sort(report.findings.begin(), report.findings.end(),
              [](const SearchFinding& a, const SearchFinding& b) {
                  if (a.left != b.left) return a.left < b.left;
                  return a.right < b.right;
              });
    report.nodes_visited = budget.used.load();
    return report;
}

const std::vector<Permutation>& egge_patterns() {
    static const std::vector<Permutation> pats = [] {
        std::vector<Permutation> v;
        for (const char* s : {"246135", "254613", "263514", "362415", "461325", "524361",
                              "546132", "614352"})
            v.push_back(parse_perm(s));
        return v;
    }();
    return pats;
}

std::vector<EggeRow> egge_check(std::size_t n_max, const EnumOptions& opts) {
    const PatternSet schroeder_basis = parse_pattern_set("2413,3142");
    std::vector<EggeRow> rows;
    for (const auto& x : egge_patterns()) {
        PatternSet trio({parse_perm("2143"), parse_perm("3142"), x});
        rows.push_back({x, wilf_equal(n_max, trio, schroeder_basis, opts)});
    }
    return rows;
}

}  // namespace wilfkit
