#pragma once

#include <vector>

namespace safenum {

/// Mathematical ceiling of num / den for den > 0: rounds toward +infinity,
/// also for negative numerators (ceil_div(-3, 2) == -1).
long long ceil_div(long long num, long long den);

/// An ordered split of an m-by-n grid into two complementary blocks:
/// m = m1 + m2 and n = n1 + n2 with all four parts positive. Block 1 is
/// m1 x n1 cells, block 2 is m2 x n2 cells; the rest of the grid has
/// m*n - m1*n1 - m2*n2 = m1*n2 + m2*n1 cells.
struct BlockPartition {
    int m1 = 0, m2 = 0, n1 = 0, n2 = 0;
    friend bool operator==(const BlockPartition&, const BlockPartition&) = default;
};

/// All block partitions of an m-by-n grid (m, n >= 2), ascending in (m1, n1).
/// There are exactly (m-1)*(n-1).
std::vector<BlockPartition> enumerate_block_partitions(int m, int n);

/// Result of minimising the two-block objective over all block partitions.
struct BlockOptimum {
    long long value = 0;        ///< the minimum objective value
    BlockPartition argmin;      ///< first partition attaining it, in enumeration order
    long long deficit1 = 0;     ///< per-block deficits at the argmin; may be negative
    long long deficit2 = 0;
    bool clamp_active = false;  ///< true when the floor of 1, not a deficit, set the last term
};

/// Minimum over all block partitions of an m-by-n grid (m, n >= 3) of
///
///   m*n - (m1*n1 + m2*n2)
///     + max( ceil( (max(m1*n1, m2*n2) - (m*n - m1*n1 - m2*n2)) / 2 ), 1 )
///
/// using the mathematical ceiling. The deficit of block t is
/// ceil((mt*nt - (m*n - m1*n1 - m2*n2)) / 2); at most one deficit is >= 1,
/// and the last term equals max(deficit1, deficit2, 1). The minimum equals
/// the safe number (= connected safe number) of the m-by-n rook graph.
BlockOptimum block_minimum(int m, int n);

/// Closed-form safe number of the m-by-n rook graph for 1 <= m <= 4, n >= m:
///   m = 1: ceil(n / 2)
///   m = 2: n
///   m = 3: n + floor(n / 3) + 1
///   m = 4: n + 4 * floor(n / 5) + max(n mod 5, 1)
long long closed_form(int m, int n);

/// Safe number (= connected safe number) of the m-by-n rook graph for any
/// m, n >= 1. Symmetric in m and n.
long long safe_number(int m, int n);

/// True when at most one of the two blocks of p is larger than the rest of
/// the grid, i.e. at most one j in {1, 2} has m*n - m1*n1 - m2*n2 < mj*nj.
/// This holds for every block partition.
bool at_most_one_oversized_block(const BlockPartition& p, int m, int n);

} // namespace safenum
