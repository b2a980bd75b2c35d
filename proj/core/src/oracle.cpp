#include "safenum/oracle.hpp"

#include <array>
#include <bit>
#include <string>
#include <vector>

#include "safenum/error.hpp"

namespace safenum {

namespace {

/// Bitmask view of a graph of order <= 63, for fast component sweeps.
struct MaskContext {
    int n = 0;
    std::vector<std::uint64_t> nbr;  ///< nbr[v]: neighbourhood of v as a bitmask
    std::uint64_t all = 0;
};

/// Connected components of the subgraph induced by `within`, as bitmasks.
struct CompList {
    std::array<std::uint64_t, 64> comp{};
    int count = 0;
};

CompList mask_components(const MaskContext& ctx, std::uint64_t within) {
    CompList out;
    std::uint64_t left = within;
    while (left != 0) {
        std::uint64_t comp = left & (~left + 1);  // lowest set bit
        std::uint64_t frontier = comp;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f != 0; f &= f - 1)
                next |= ctx.nbr[static_cast<std::size_t>(std::countr_zero(f))];
            next &= within & ~comp;
            comp |= next;
            frontier = next;
        }
        out.comp[static_cast<std::size_t>(out.count++)] = comp;
        left &= ~comp;
    }
    return out;
}

bool subset_is_safe(const MaskContext& ctx, std::uint64_t smask, bool require_connected) {
    const CompList inside = mask_components(ctx, smask);
    if (require_connected && inside.count != 1) return false;
    const CompList outside = mask_components(ctx, ctx.all & ~smask);
    for (int i = 0; i < inside.count; ++i) {
        const std::uint64_t c = inside.comp[static_cast<std::size_t>(i)];
        std::uint64_t adj = 0;
        for (std::uint64_t f = c; f != 0; f &= f - 1)
            adj |= ctx.nbr[static_cast<std::size_t>(std::countr_zero(f))];
        const int c_size = std::popcount(c);
        for (int j = 0; j < outside.count; ++j) {
            const std::uint64_t d = outside.comp[static_cast<std::size_t>(j)];
            if ((adj & d) != 0 && c_size < std::popcount(d)) return false;
        }
    }
    return true;
}

}  // namespace

SearchResult min_safe_set(const Graph& g, bool require_connected, int vertex_cap) {
    if (vertex_cap < 1 || vertex_cap > 63)
        throw invalid_input_error("the vertex cap must lie between 1 and 63");
    const int n = g.order();
    if (n > vertex_cap)
        throw resource_limit_error("graph order " + std::to_string(n) +
                                   " exceeds the search cap of " + std::to_string(vertex_cap) +
                                   "; raise the cap to search anyway");
    if (!is_connected(g))
        throw unsupported_input_error("exhaustive search requires a connected graph");

    MaskContext ctx;
    ctx.n = n;
    ctx.nbr.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) ctx.nbr[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
    ctx.all = (std::uint64_t{1} << n) - 1;

    std::uint64_t examined = 0;
    std::vector<int> idx;
    for (int k = 1; k <= n; ++k) {
        idx.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::uint64_t mask = 0;
            for (int v : idx) mask |= std::uint64_t{1} << v;
            ++examined;
            if (subset_is_safe(ctx, mask, require_connected))
                return {k, VertexSet(n, idx), examined};
            // step to the next index list in lexicographic order
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    throw internal_error("no safe set found; the full vertex set always qualifies");
}

OracleResult exhaustive_safe_numbers(const Graph& g, int vertex_cap) {
    SearchResult plain = min_safe_set(g, false, vertex_cap);
    SearchResult connected = min_safe_set(g, true, vertex_cap);
    OracleResult out;
    out.s_value = plain.size;
    out.cs_value = connected.size;
    out.s_witness = plain.witness;
    out.cs_witness = connected.witness;
    out.subsets_examined = plain.subsets_examined + connected.subsets_examined;
    return out;
}

} // namespace safenum
