#include "wilfkit/pattern_set.hpp"

#include <algorithm>
#include <set>

namespace wilfkit {

PatternSet::PatternSet(std::vector<Permutation> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

PatternSet PatternSet::parse(const std::string& text) { return parse_pattern_set(text); }

bool PatternSet::is_antichain() const {
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = 0; j < members_.size(); ++j)
            if (i != j && contains(members_[i], members_[j])) return false;
    return true;
}

std::strong_ordering PatternSet::operator<=>(const PatternSet& other) const {
    const std::size_t n = std::min(members_.size(), other.members_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = members_[i] <=> other.members_[i]; c != 0) return c;
    return members_.size() <=> other.members_.size();
}

std::string PatternSet::str() const {
    bool need_semi = false;
    for (const auto& p : members_)
        if (p.size() > 9) need_semi = true;
    std::string out;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += need_semi ? ';' : ',';
        out += members_[i].str();
    }
    return out;
}

PatternSet parse_pattern_set(const std::string& text) {
    std::vector<Permutation> members;
    const char sep = text.find(';') != std::string::npos ? ';' : ',';
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(sep, pos);
        if (next == std::string::npos) next = text.size();
        members.push_back(parse_perm(text.substr(pos, next - pos)));
        if (next == text.size()) break;
        pos = next + 1;
    }
    return PatternSet(std::move(members));
}

PatternSet apply_symmetry(const PatternSet& set, Symmetry g) {
    std::vector<Permutation> out;
    out.reserve(set.size());
    for (const auto& p : set.members()) out.push_back(apply_symmetry(p, g));
    return PatternSet(std::move(out));
}

PatternSet canonical_set(const PatternSet& set) {
    PatternSet best = set;
    for (Symmetry g : all_symmetries()) {
        PatternSet img = apply_symmetry(set, g);
        if (img < best) best = img;
    }
    return best;
}

std::size_t symmetry_orbit_size(const PatternSet& set) {
    std::set<PatternSet> orbit;
    for (Symmetry g : all_symmetries()) orbit.insert(apply_symmetry(set, g));
    return orbit.size();
}

}  // namespace wilfkit
