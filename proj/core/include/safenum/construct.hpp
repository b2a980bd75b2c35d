#pragma once

#include <string_view>

#include "safenum/product.hpp"
#include "safenum/vertex_set.hpp"

namespace safenum {

/// Which construction produced a witness set.
enum class Recipe {
    trivial_m1,          ///< single-row product: the first ceil(n/2) cells of the row
    row_m2,              ///< two-row product: one full row
    two_block_plus_one,  ///< grid minus two blocks, plus the corner cell
    two_block_minus_nu,  ///< grid minus two blocks, plus a sliver of block 1
    half_cut,            ///< complement of a near-half region and one corner cell
};

/// Stable external name of a recipe, as emitted in JSON output.
std::string_view recipe_name(Recipe r);

/// A witness vertex set over a rook graph, with the recipe that built it.
struct Construction {
    VertexSet set;  ///< flat indices into the product graph
    Recipe recipe;

    int size() const { return set.size(); }
};

/// Builds a minimum connected safe set of the m-by-n rook graph (1 <= m <= n).
/// Deterministic: the underlying minimisation breaks ties toward the first
/// block partition in enumeration order. The result is re-verified before it
/// is returned; a verification failure is an internal error.
Construction construct_min(int m, int n);

/// Builds a connected safe set of size ceil((m*n - 1) / 2) that is also a
/// vertex cut, for n >= m >= 3 and (m, n) != (3, 3). Removal leaves exactly
/// two components, of sizes 1 and floor((m*n - 1) / 2). Re-verified before it
/// is returned.
Construction construct_half_cut(int m, int n);

} // namespace safenum
