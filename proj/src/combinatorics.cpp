#include "cfftk/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace cfftk {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow: " + std::to_string(a) + " * " +
                                  std::to_string(b));
    return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow: " + std::to_string(a) + " + " +
                                  std::to_string(b));
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    // Partial products C(n-k+i, i) increase with i, so the 128-bit
    // intermediate only has to hold (value <= 2^64) * (factor < 2^64).
    u128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial(" + std::to_string(n) + ", " +
                                      std::to_string(k) + ") exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t rank_colex(const IndexSubset& s) {
    std::uint64_t rank = 0;
    std::uint64_t i = 1;
    for (auto e : s.elements()) rank = checked_add(rank, binomial(e, i++));
    return rank;
}

std::uint64_t rank_colex_mask(std::uint64_t mask) {
    std::uint64_t rank = 0;
    std::uint64_t i = 1;
    while (mask) {
        rank += binomial(static_cast<std::uint64_t>(std::countr_zero(mask)), i++);
        mask &= mask - 1;
    }
    return rank;
}

std::uint64_t unrank_colex_mask(std::uint64_t rank, int k, int t) {
    if (k < 0 || t < 0 || t > kMaxMaskGround)
        throw std::domain_error("unrank_colex: invalid (k, t) = (" + std::to_string(k) + ", " +
                                std::to_string(t) + ")");
    const auto total = binomial(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(k));
    if (rank >= total)
        throw std::domain_error("unrank_colex: rank " + std::to_string(rank) +
                                " out of range for C(" + std::to_string(t) + ", " +
                                std::to_string(k) + ") = " + std::to_string(total));
    std::uint64_t mask = 0;
    int bound = t;  // next element is strictly below this
    for (int i = k; i >= 1; --i) {
        // Largest c < bound with C(c, i) <= rank. C(i-1, i) = 0, so c >= i-1.
        int c = bound - 1;
        while (binomial(static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(i)) > rank) --c;
        mask |= std::uint64_t{1} << c;
        rank -= binomial(static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(i));
        bound = c;
    }
    return mask;
}

IndexSubset unrank_colex(std::uint64_t rank, int k, int t) {
    return IndexSubset::from_mask(static_cast<std::size_t>(t), unrank_colex_mask(rank, k, t));
}

void require_graph_params(int t, int r, int w) {
    if (r < 1 || w < 1 || t < r + w || t > kMaxMaskGround)
        throw std::domain_error("invalid parameters (t, r, w) = (" + std::to_string(t) + ", " +
                                std::to_string(r) + ", " + std::to_string(w) +
                                "): need r >= 1, w >= 1, r + w <= t <= " +
                                std::to_string(kMaxMaskGround));
}

std::uint64_t profile_value(int x, int t, int r, int w) {
    if (x < 0 || x > t) return 0;
    return checked_mul(binomial(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(r)),
                       binomial(static_cast<std::uint64_t>(t - x), static_cast<std::uint64_t>(w)));
}

std::vector<int> profile_maximizers(int t, int r, int w) {
    require_graph_params(t, r, w);
    std::vector<int> best;
    std::uint64_t best_value = 0;
    for (int x = r; x <= t - w; ++x) {
        const auto v = profile_value(x, t, r, w);
        if (v > best_value) {
            best_value = v;
            best.assign(1, x);
        } else if (v == best_value) {
            best.push_back(x);
        }
    }
    return best;
}

}  // namespace cfftk
