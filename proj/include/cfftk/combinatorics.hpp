#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "cfftk/index_subset.hpp"

namespace cfftk {

/// Largest ground set handled by the mask-based enumerators.
inline constexpr int kMaxMaskGround = 63;

/// Documented practical ceiling on t. C(30, 15) still fits in 64 bits, and
/// the implicit bi-intersection graph stays enumerable on commodity hardware.
inline constexpr int kMaxGroundSet = 30;

/// a * b, throwing std::overflow_error instead of wrapping.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
/// a + b, throwing std::overflow_error instead of wrapping.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

/// Exact C(n, k); 0 when k > n. Throws std::overflow_error if the value
/// does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Colexicographic rank of a k-subset: sum over sorted elements s_1 < ... < s_k
/// of C(s_i, i). Independent of the ground-set size.
std::uint64_t rank_colex(const IndexSubset& s);
std::uint64_t rank_colex_mask(std::uint64_t mask);

/// Inverse of rank_colex among the k-subsets of {0, ..., t-1}.
/// Throws std::domain_error when rank >= C(t, k).
IndexSubset unrank_colex(std::uint64_t rank, int k, int t);
std::uint64_t unrank_colex_mask(std::uint64_t rank, int k, int t);

/// Scatters the low bits of `bits` onto the set positions of `mask`
/// (software PDEP). Order preserving: colex order on the source maps to
/// colex order on the image.
constexpr std::uint64_t deposit_bits(std::uint64_t bits, std::uint64_t mask) noexcept {
    std::uint64_t out = 0;
    while (mask && bits) {
        const std::uint64_t low = mask & (~mask + 1);
        if (bits & 1u) out |= low;
        bits >>= 1;
        mask &= mask - 1;
    }
    return out;
}

/// Next larger integer with the same popcount (Gosper's hack); x must be nonzero.
constexpr std::uint64_t next_k_subset(std::uint64_t x) noexcept {
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

/// Calls fn(mask) for every k-subset of {0, ..., t-1} in colex order
/// (which is increasing numeric order of the masks).
template <typename Fn>
void for_each_k_subset(int t, int k, Fn&& fn) {
    if (k < 0 || t < 0 || k > t) return;
    if (k == 0) {
        fn(std::uint64_t{0});
        return;
    }
    const std::uint64_t limit = std::uint64_t{1} << t;
    std::uint64_t x = (std::uint64_t{1} << k) - 1;
    while (x < limit) {
        fn(x);
        x = next_k_subset(x);
    }
}

/// Calls fn(mask) for every k-subset of the set bits of `within`, in colex order.
template <typename Fn>
void for_each_k_subset_of(std::uint64_t within, int k, Fn&& fn) {
    const int size = std::popcount(within);
    for_each_k_subset(size, k, [&](std::uint64_t local) { fn(deposit_bits(local, within)); });
}

/// C(x, r) * C(t - x, w): the edge count of the maximal biclique generated by
/// an x-subset in the bi-intersection graph.
std::uint64_t profile_value(int x, int t, int r, int w);

/// Every x in [r, t - w] attaining the maximum of profile_value, ascending.
/// Requires r >= 1, w >= 1, t >= r + w.
std::vector<int> profile_maximizers(int t, int r, int w);

/// Throws std::domain_error unless 1 <= r, 1 <= w, r + w <= t <= kMaxMaskGround.
void require_graph_params(int t, int r, int w);

}  // namespace cfftk
