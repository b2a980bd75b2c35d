#include "safenum/construct.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "safenum/error.hpp"
#include "safenum/safe_number.hpp"
#include "safenum/safety.hpp"

namespace safenum {

std::string_view recipe_name(Recipe r) {
    switch (r) {
        case Recipe::trivial_m1: return "trivial-m1";
        case Recipe::row_m2: return "row-m2";
        case Recipe::two_block_plus_one: return "two-block-plus-one";
        case Recipe::two_block_minus_nu: return "two-block-minus-nu";
        case Recipe::half_cut: return "half-cut";
    }
    throw internal_error("unknown recipe");
}

namespace {

/// Packs cells into a set and re-verifies the promised postconditions.
Construction finish(const ProductGraph& p, const std::vector<ProductCoord>& cells,
                    Recipe recipe, long long want_size) {
    Construction c{p.set_of(cells), recipe};
    if (c.size() != want_size)
        throw internal_error("construction has the wrong size");
    if (!verify_safe_set(p.graph(), c.set).is_connected_safe)
        throw internal_error("construction failed safety verification");
    return c;
}

}  // namespace

Construction construct_min(int m, int n) {
    if (m < 1) throw invalid_input_error("grid sides must be at least 1");
    if (n < m) throw invalid_input_error("construct_min expects m <= n");
    ProductGraph p(m, n);

    if (m == 1) {
        std::vector<ProductCoord> cells;
        for (int j = 1; j <= (n + 1) / 2; ++j) cells.push_back({1, j});
        return finish(p, cells, Recipe::trivial_m1, (n + 1) / 2);
    }
    if (m == 2) {
        std::vector<ProductCoord> cells;
        for (int j = 1; j <= n; ++j) cells.push_back({1, j});
        return finish(p, cells, Recipe::row_m2, n);
    }

    const BlockOptimum opt = block_minimum(m, n);
    // Place the block with the positive deficit (if any) top-left; the grid is
    // symmetric under reversing the row and column orders, so swapping the two
    // blocks preserves the objective value.
    int a1 = opt.argmin.m1;
    int b1 = opt.argmin.n1;
    long long nu = opt.deficit1;
    if (opt.deficit2 >= 1) {
        a1 = opt.argmin.m2;
        b1 = opt.argmin.n2;
        nu = opt.deficit2;
    }

    // The frame: everything outside the two complementary blocks.
    std::vector<ProductCoord> cells;
    for (int i = 1; i <= a1; ++i)
        for (int j = b1 + 1; j <= n; ++j) cells.push_back({i, j});
    for (int i = a1 + 1; i <= m; ++i)
        for (int j = 1; j <= b1; ++j) cells.push_back({i, j});

    if (nu <= 0) {
        // Neither block is oversized: the corner cell joins the two frame legs.
        cells.push_back({1, 1});
        return finish(p, cells, Recipe::two_block_plus_one, opt.value);
    }

    // Top-left block oversized by nu: give back its first nu cells, taken
    // column-major so they stay attached to the frame leg below the block.
    const long long q = nu / a1;
    const long long r = nu % a1;
    for (int j = 1; j <= q; ++j)
        for (int i = 1; i <= a1; ++i) cells.push_back({i, j});
    for (int i = 1; i <= r; ++i) cells.push_back({i, static_cast<int>(q) + 1});
    return finish(p, cells, Recipe::two_block_minus_nu, opt.value);
}

Construction construct_half_cut(int m, int n) {
    if (m < 1 || n < 1) throw invalid_input_error("grid sides must be at least 1");
    if (m < 3 || n < m)
        throw unsupported_input_error("the near-half cut requires 3 <= m <= n");
    if (m == 3 && n == 3)
        throw unsupported_input_error("the near-half cut does not cover the 3x3 grid");

    const long long total = static_cast<long long>(m) * n;
    const long long half = (total - 1) / 2;
    const long long q = half / (n - 1);  // full removed rows, from the bottom
    const long long r = half % (n - 1);  // removed cells of the next row up

    std::vector<char> removed(static_cast<std::size_t>(total), 0);
    ProductGraph p(m, n);
    auto mark = [&](int i, int j) { removed[static_cast<std::size_t>(p.index_of({i, j}))] = 1; };
    mark(1, 1);
    for (int i = m - static_cast<int>(q) + 1; i <= m; ++i)
        for (int j = 2; j <= n; ++j) mark(i, j);
    for (int j = n - static_cast<int>(r) + 1; j <= n; ++j) mark(m - static_cast<int>(q), j);

    std::vector<ProductCoord> cells;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            if (!removed[static_cast<std::size_t>(p.index_of({i, j}))]) cells.push_back({i, j});

    Construction c{p.set_of(cells), Recipe::half_cut};
    if (c.size() != total - 1 - half)
        throw internal_error("near-half cut has the wrong size");
    SafetyReport rep = verify_safe_set(p.graph(), c.set);
    if (!rep.is_connected_safe)
        throw internal_error("near-half cut failed safety verification");
    if (rep.components_of_rest.size() != 2)
        throw internal_error("near-half cut does not leave exactly two components");
    std::vector<long long> sizes = {rep.components_of_rest[0].size(),
                                    rep.components_of_rest[1].size()};
    std::sort(sizes.begin(), sizes.end());
    if (sizes[0] != 1 || sizes[1] != half)
        throw internal_error("near-half cut leaves the wrong component sizes");
    return c;
}

} // namespace safenum
