#include "safenum/vertex_set.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "safenum/error.hpp"

namespace safenum {

VertexSet::VertexSet(int universe) : universe_(universe) {
    if (universe < 0) throw invalid_input_error("universe size must be non-negative");
}

VertexSet::VertexSet(int universe, std::vector<int> members)
    : universe_(universe), members_(std::move(members)) {
    if (universe < 0) throw invalid_input_error("universe size must be non-negative");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && (members_.front() < 0 || members_.back() >= universe_))
        throw invalid_input_error("vertex index outside the universe");
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    s.members_.resize(static_cast<std::size_t>(universe));
    std::iota(s.members_.begin(), s.members_.end(), 0);
    return s;
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

namespace {

void require_same_universe(const VertexSet& a, const VertexSet& b) {
    if (a.universe() != b.universe())
        throw invalid_input_error("vertex sets over different universes");
}

}  // namespace

VertexSet VertexSet::set_union(const VertexSet& other) const {
    require_same_universe(*this, other);
    VertexSet out(universe_);
    out.members_.reserve(members_.size() + other.members_.size());
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(out.members_));
    return out;
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
    require_same_universe(*this, other);
    VertexSet out(universe_);
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out.members_));
    return out;
}

VertexSet VertexSet::complement() const {
    VertexSet out(universe_);
    out.members_.reserve(static_cast<std::size_t>(universe_) - members_.size());
    auto it = members_.begin();
    for (int v = 0; v < universe_; ++v) {
        if (it != members_.end() && *it == v) {
            ++it;
            continue;
        }
        out.members_.push_back(v);
    }
    return out;
}

bool VertexSet::intersects(const VertexSet& other) const {
    require_same_universe(*this, other);
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
        if (*a == *b) return true;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    require_same_universe(*this, other);
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
}

} // namespace safenum
