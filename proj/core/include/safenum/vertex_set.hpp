#pragma once

#include <vector>

namespace safenum {

/// A set of vertex indices drawn from a fixed universe {0, ..., universe-1}.
/// Members are kept sorted ascending and duplicate-free; all operations are
/// exact set operations. Binary operations require matching universes.
class VertexSet {
public:
    /// Empty set over the given universe size (>= 0).
    explicit VertexSet(int universe);

    /// Set holding the given members; sorts, drops duplicates, and rejects
    /// members outside the universe.
    VertexSet(int universe, std::vector<int> members);

    /// The full set {0, ..., universe-1}.
    static VertexSet full(int universe);

    int universe() const { return universe_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool contains(int v) const;

    /// Members in ascending order.
    const std::vector<int>& members() const { return members_; }

    VertexSet set_union(const VertexSet& other) const;
    VertexSet set_difference(const VertexSet& other) const;
    VertexSet complement() const;
    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    int universe_ = 0;
    std::vector<int> members_;
};

} // namespace safenum
