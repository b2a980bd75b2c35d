#include "safenum/safe_number.hpp"

#include <algorithm>
#include <string>

#include "safenum/error.hpp"

namespace safenum {

long long ceil_div(long long num, long long den) {
    if (den <= 0) throw invalid_input_error("ceil_div needs a positive denominator");
    long long q = num / den;
    if (num % den > 0) ++q;  // truncation already equals the ceiling for num <= 0
    return q;
}

std::vector<BlockPartition> enumerate_block_partitions(int m, int n) {
    if (m < 2 || n < 2)
        throw invalid_input_error("block partitions need both sides at least 2");
    std::vector<BlockPartition> out;
    out.reserve(static_cast<std::size_t>(m - 1) * static_cast<std::size_t>(n - 1));
    for (int m1 = 1; m1 < m; ++m1)
        for (int n1 = 1; n1 < n; ++n1) out.push_back({m1, m - m1, n1, n - n1});
    return out;
}

BlockOptimum block_minimum(int m, int n) {
    if (m < 3 || n < 3)
        throw invalid_input_error("block optimisation needs both sides at least 3");
    const long long total = static_cast<long long>(m) * n;
    bool have_best = false;
    BlockOptimum best;
    for (int m1 = 1; m1 < m; ++m1)
        for (int n1 = 1; n1 < n; ++n1) {
            const long long s1 = static_cast<long long>(m1) * n1;
            const long long s2 = static_cast<long long>(m - m1) * (n - n1);
            const long long rest = total - s1 - s2;
            const long long nu1 = ceil_div(s1 - rest, 2);
            const long long nu2 = ceil_div(s2 - rest, 2);
            const long long value = rest + std::max({nu1, nu2, 1LL});
            if (!have_best || value < best.value) {
                have_best = true;
                best.value = value;
                best.argmin = {m1, m - m1, n1, n - n1};
                best.deficit1 = nu1;
                best.deficit2 = nu2;
                best.clamp_active = std::max(nu1, nu2) < 1;
            }
        }
    if ((best.deficit1 >= 1) + (best.deficit2 >= 1) > 1)
        throw internal_error("both blocks of the optimum are oversized");
    return best;
}

long long closed_form(int m, int n) {
    if (m < 1 || m > 4)
        throw unsupported_input_error("no closed form for m=" + std::to_string(m));
    if (n < m)
        throw unsupported_input_error("closed forms require n >= m");
    const long long ln = n;
    switch (m) {
        case 1: return (ln + 1) / 2;
        case 2: return ln;
        case 3: return ln + ln / 3 + 1;
        default: return ln + 4 * (ln / 5) + std::max(ln % 5, 1LL);
    }
}

long long safe_number(int m, int n) {
    if (m < 1 || n < 1) throw invalid_input_error("grid sides must be at least 1");
    const int a = std::min(m, n);
    const int b = std::max(m, n);
    if (a <= 2) return closed_form(a, b);
    return block_minimum(a, b).value;
}

bool at_most_one_oversized_block(const BlockPartition& p, int m, int n) {
    if (p.m1 < 1 || p.m2 < 1 || p.n1 < 1 || p.n2 < 1)
        throw invalid_input_error("block partition parts must be positive");
    if (p.m1 + p.m2 != m || p.n1 + p.n2 != n)
        throw invalid_input_error("block partition does not split the given grid");
    const long long total = static_cast<long long>(m) * n;
    const long long s1 = static_cast<long long>(p.m1) * p.n1;
    const long long s2 = static_cast<long long>(p.m2) * p.n2;
    const long long rest = total - s1 - s2;
    return ((rest < s1 ? 1 : 0) + (rest < s2 ? 1 : 0)) <= 1;
}

} // namespace safenum
