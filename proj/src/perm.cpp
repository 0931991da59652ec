#include "wilfkit/perm.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace wilfkit {

namespace {

void require_bijection(const std::vector<std::uint8_t>& vals) {
    const std::size_t n = vals.size();
    std::vector<bool> seen(n + 1, false);
    for (std::uint8_t v : vals) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation rank out of range: " + std::to_string(int(v)));
        if (seen[v])
            throw std::invalid_argument("not a permutation: rank " + std::to_string(int(v)) + " repeated");
        seen[v] = true;
    }
}

}  // namespace

Permutation::Permutation(std::vector<std::uint8_t> values) : vals_(std::move(values)) {
    require_bijection(vals_);
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint8_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = std::uint8_t(i + 1);
    return Permutation(std::move(v));
}

Permutation Permutation::reversed() const {
    std::vector<std::uint8_t> v(vals_.rbegin(), vals_.rend());
    return Permutation(std::move(v));
}

Permutation Permutation::complemented() const {
    const std::size_t n = vals_.size();
    std::vector<std::uint8_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = std::uint8_t(n + 1 - vals_[i]);
    return Permutation(std::move(v));
}

Permutation Permutation::inverted() const {
    const std::size_t n = vals_.size();
    std::vector<std::uint8_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[vals_[i] - 1] = std::uint8_t(i + 1);
    return Permutation(std::move(v));
}

std::strong_ordering Permutation::operator<=>(const Permutation& other) const {
    if (auto c = vals_.size() <=> other.vals_.size(); c != 0) return c;
    for (std::size_t i = 0; i < vals_.size(); ++i)
        if (auto c = vals_[i] <=> other.vals_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string Permutation::str() const {
    std::ostringstream out;
    if (vals_.size() <= 9) {
        for (std::uint8_t v : vals_) out << int(v);
    } else {
        for (std::size_t i = 0; i < vals_.size(); ++i) {
            if (i) out << ',';
            out << int(vals_[i]);
        }
    }
    return out.str();
}

Permutation parse_perm(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty permutation token");
    std::vector<std::uint8_t> vals;
    if (text.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string::npos) next = text.size();
            std::string tok = text.substr(pos, next - pos);
            // tolerate surrounding blanks in comma form
            while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
            while (!tok.empty() && tok.back() == ' ') tok.pop_back();
            if (tok.empty()) throw std::invalid_argument("empty permutation token");
            int v = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || p != tok.data() + tok.size())
                throw std::invalid_argument("bad permutation token: " + tok);
            if (v < 1 || v > 255)
                throw std::invalid_argument("permutation rank out of range: " + tok);
            vals.push_back(std::uint8_t(v));
            pos = next + 1;
            if (next == text.size()) break;
        }
    } else {
        // digit string form, only meaningful for n <= 9
        if (text.size() > 9)
            throw std::invalid_argument("digit-string form needs n <= 9; use comma-separated values");
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument(std::string("bad digit in permutation: ") + c);
            vals.push_back(std::uint8_t(c - '0'));
        }
    }
    return Permutation(std::move(vals));
}

namespace {

// Window-pruned DFS.  Slot t of the pattern is matched to a host position
// right of all earlier matches whose value lies in the open interval forced
// by the already matched slots.  `pinned` marks the last slot as preassigned
// (to the final host entry) rather than free.
bool match_from(std::span<const std::uint8_t> host, std::span<const std::uint8_t> pat,
                std::uint8_t* vals, std::size_t t, std::size_t start, std::size_t free_slots,
                bool pinned) {
    // slots t+1..free_slots-1 still need distinct positions right of i
    const std::size_t limit = host.size() - (free_slots - t) + 1;  // exclusive upper bound on i
    for (std::size_t i = start; i < limit; ++i) {
        const std::uint8_t v = host[i];
        bool ok = true;
        for (std::size_t s = 0; s < t; ++s) {
            if ((pat[s] < pat[t]) != (vals[s] < v)) { ok = false; break; }
        }
        if (ok && pinned) {
            const std::size_t last = pat.size() - 1;
            if ((pat[t] < pat[last]) != (v < vals[last])) ok = false;
        }
        if (!ok) continue;
        vals[t] = v;
        if (t + 1 == free_slots) return true;
        if (match_from(host, pat, vals, t + 1, i + 1, free_slots, pinned)) return true;
    }
    return false;
}

}  // namespace

bool contains(std::span<const std::uint8_t> host, std::span<const std::uint8_t> pattern) {
    const std::size_t k = pattern.size();
    if (k == 0) return true;
    if (k > host.size()) return false;
    if (k > 32) throw std::invalid_argument("pattern longer than 32 not supported");
    std::uint8_t vals[32];
    return match_from(host, pattern, vals, 0, 0, k, false);
}

bool contains(const Permutation& host, const Permutation& pattern) {
    return contains(host.span(), pattern.span());
}

bool contains_using_last(std::span<const std::uint8_t> host, std::span<const std::uint8_t> pattern) {
    const std::size_t k = pattern.size();
    if (k == 0 || k > host.size()) return false;
    if (k > 32) throw std::invalid_argument("pattern longer than 32 not supported");
    std::uint8_t vals[32];
    vals[k - 1] = host[host.size() - 1];
    if (k == 1) return true;
    // match the first k-1 slots inside host minus its last entry
    return match_from(host.first(host.size() - 1), pattern, vals, 0, 0, k - 1, true);
}

bool is_involution(const Permutation& p) {
    const auto& v = p.values();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[v[i] - 1] != i + 1) return false;
    return true;
}

FramePoints frame_points(const Permutation& p) {
    if (p.empty()) throw std::invalid_argument("frame_points: empty permutation has no frame");
    const auto& v = p.values();
    const std::size_t n = v.size();
    FramePoints f;
    std::uint8_t mn = 255;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] < mn) { mn = v[i]; f.lr_min_positions.push_back(i + 1); }
    }
    std::uint8_t mx = 0;
    std::vector<std::size_t> rl;
    for (std::size_t i = n; i-- > 0;) {
        if (v[i] > mx) { mx = v[i]; rl.push_back(i + 1); }
    }
    f.rl_max_positions.assign(rl.rbegin(), rl.rend());
    return f;
}

std::string Symmetry::name() const {
    if (!rev && !comp && !inv) return "id";
    std::string s;
    if (rev) s += 'r';
    if (comp) s += 'c';
    if (inv) s += 'i';
    return s;
}

// In the normal form r^a c^b i^e the generators satisfy rc = cr, ir = ci,
// ic = ri and i^2 = id, which gives a closed composition law: moving h's r/c
// part past g's trailing i swaps the two reflection bits.
Symmetry compose(Symmetry g, Symmetry h) {
    Symmetry out;
    out.rev = g.rev ^ (g.inv ? h.comp : h.rev);
    out.comp = g.comp ^ (g.inv ? h.rev : h.comp);
    out.inv = g.inv ^ h.inv;
    return out;
}

Symmetry inverse_of(Symmetry g) {
    if (!g.inv) return g;
    return Symmetry{g.comp, g.rev, true};
}

const std::array<Symmetry, 8>& all_symmetries() {
    static const std::array<Symmetry, 8> all = {{
        {false, false, false}, {true, false, false}, {false, true, false}, {true, true, false},
        {false, false, true}, {true, false, true}, {false, true, true}, {true, true, true},
    }};
    return all;
}

Permutation apply_symmetry(const Permutation& p, Symmetry g) {
    Permutation out = p;
    if (g.inv) out = out.inverted();
    if (g.comp) out = out.complemented();
    if (g.rev) out = out.reversed();
    return out;
}

}  // namespace wilfkit
