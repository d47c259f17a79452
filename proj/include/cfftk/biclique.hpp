#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "cfftk/cff.hpp"
#include "cfftk/combinatorics.hpp"
#include "cfftk/index_subset.hpp"

namespace cfftk {

/// A d-biclique cover of the bi-intersection graph I_t(r, w), given by its
/// generator sets. Generator A stands for the maximal biclique with sides
/// (r-subsets of A) x (w-subsets of the complement of A). Generators form a
/// multiset.
struct BicliqueCoverCert {
    int t = 0;
    int r = 0;
    int w = 0;
    std::uint64_t d = 0;
    std::vector<IndexSubset> generators;
    /// Points dropped by cover_from_cff because their signature was out of range.
    std::uint64_t rejected_points = 0;

    /// Throws std::domain_error on bad parameters or a generator outside
    /// [t] or with size outside [r, t - w].
    void validate() const;

    friend bool operator==(const BicliqueCoverCert&, const BicliqueCoverCert&) = default;
};

struct GraphStats {
    int t = 0;
    int r = 0;
    int w = 0;
    std::uint64_t edge_count = 0;          ///< C(t, r) C(t - r, w)
    std::uint64_t max_biclique_edges = 0;  ///< max over x in [r, t - w] of C(x, r) C(t - x, w)

    /// ceil(d * edge_count / max_biclique_edges)
    std::uint64_t cover_lower_bound(std::uint64_t d) const;
};

/// An edge of I_t(r, w): an r-subset and a disjoint w-subset, as bit masks.
struct EdgeMasks {
    std::uint64_t L = 0;
    std::uint64_t M = 0;
    friend bool operator==(const EdgeMasks&, const EdgeMasks&) = default;
};

/// An edge as a pair of IndexSubset values over [t].
struct Edge {
    IndexSubset L;
    IndexSubset M;
};

/// Calls fn(EdgeMasks) for every edge of I_t(r, w): colex over L, then colex
/// over M. This is the canonical order used by every verifier and the search.
template <typename Fn>
void for_each_edge(int t, int r, int w, Fn&& fn);

/// Lazily generated edges of I_t(r, w) in canonical order. The graph is never
/// materialized.
class EdgeStream {
public:
    class iterator {
    public:
        using value_type = Edge;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = Edge;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        Edge operator*() const;
        EdgeMasks masks() const noexcept { return current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) noexcept {
            return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
        }

    private:
        friend class EdgeStream;
        iterator(int t, int r, int w);
        int t_ = 0;
        int r_ = 0;
        int w_ = 0;
        EdgeMasks current_;
        std::uint64_t local_m_ = 0;  ///< M as a w-subset of the complement positions
        bool done_ = true;
    };

    EdgeStream(int t, int r, int w);
    iterator begin() const { return iterator(t_, r_, w_); }
    iterator end() const { return iterator(); }

private:
    int t_;
    int r_;
    int w_;
};

EdgeStream enumerate_edges(int t, int r, int w);

GraphStats graph_stats(int t, int r, int w);

std::uint64_t counting_lower_bound(int t, int r, int w, std::uint64_t d);

/// For every edge (L, M), counts generators A with L subset of A and M
/// disjoint from A; passes iff each count is >= d (AtLeast) or == d (Exact).
VerificationReport verify_cover(const BicliqueCoverCert& cert, CoverMode mode);

/// Point x becomes generator S_x = { i : x in B_i }. Points whose signature
/// has fewer than r or more than t - w elements are dropped and counted in
/// `rejected_points`.
BicliqueCoverCert cover_from_cff(const CffInstance& f, int r, int w, std::uint64_t d);

/// Generator j becomes point j, and point j lies in block i iff i is in A_j.
CffInstance cff_from_cover(const BicliqueCoverCert& cert);

// --- implementation ------------------------------------------------------

template <typename Fn>
void for_each_edge(int t, int r, int w, Fn&& fn) {
    const std::uint64_t all = (std::uint64_t{1} << t) - 1;
    for_each_k_subset(t, r, [&](std::uint64_t lmask) {
        for_each_k_subset_of(all & ~lmask, w,
                             [&](std::uint64_t mmask) { fn(EdgeMasks{lmask, mmask}); });
    });
}

}  // namespace cfftk
