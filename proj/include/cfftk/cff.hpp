#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cfftk/index_subset.hpp"

namespace cfftk {

/// A block system (X, B): `point_count` points and an ordered list of blocks,
/// each a subset of the points. Blocks are labeled by position and may repeat.
class CffInstance {
public:
    /// Throws std::domain_error if there are no blocks or a block's ground set
    /// is not the point set.
    CffInstance(std::size_t point_count, std::vector<IndexSubset> blocks);

    std::size_t point_count() const noexcept { return point_count_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const std::vector<IndexSubset>& blocks() const noexcept { return blocks_; }
    const IndexSubset& block(std::size_t i) const { return blocks_.at(i); }

    /// S_x: indices of the blocks containing point x, over ground set [t].
    IndexSubset point_signature(std::size_t x) const;

    /// Copy with point x removed and the remaining points relabeled downwards.
    CffInstance without_point(std::size_t x) const;

    friend bool operator==(const CffInstance&, const CffInstance&) = default;

private:
    std::size_t point_count_;
    std::vector<IndexSubset> blocks_;
};

enum class CoverMode { AtLeast, Exact };

/// Parameters of an optimal family from the maximizer construction.
struct TheoremParams {
    int r = 0;
    int w = 0;
    int t = 0;
    int t_prime = 0;
    std::uint64_t d = 0;                ///< C(t - r - w, t' - r)
    std::uint64_t t_double_prime = 0;   ///< C(t, t'), the optimal point count

    friend bool operator==(const TheoremParams&, const TheoremParams&) = default;
};

/// First violating pair found by a canonical-order scan.
struct Witness {
    IndexSubset L;
    IndexSubset M;
    std::uint64_t residual = 0;
};

/// Outcome of an exhaustive scan over all disjoint (L, M) pairs. Shared by the
/// family verifier and the biclique-cover verifier, where "residual" is the
/// number of generators covering the edge.
struct VerificationReport {
    bool passed = true;
    std::uint64_t min_residual = 0;
    std::uint64_t max_residual = 0;
    std::optional<Witness> witness;
    std::uint64_t pairs_checked = 0;
};

/// |(intersection of B_l, l in L) minus (union of B_m, m in M)|.
/// L and M are subsets of the block indices; both nonempty and disjoint.
std::uint64_t residual(const CffInstance& f, const IndexSubset& L, const IndexSubset& M);

/// Checks the (r, w; d) cover-free condition for every disjoint pair with
/// |L| = r, |M| = w. Scan order is colex over L, then colex over M; the
/// witness is the first violation in that order. The scan always completes.
VerificationReport verify_cff(const CffInstance& f, int r, int w, std::uint64_t d, CoverMode mode);

TheoremParams theorem_params(int r, int w, int t, std::optional<int> t_prime = std::nullopt);

/// The optimal family: one point per t'-subset A of [t], labeled by the colex
/// rank of A, and block i = { A : i in A }.
std::pair<CffInstance, TheoremParams> construct_optimal_cff(int r, int w, int t,
                                                            std::optional<int> t_prime = std::nullopt);

}  // namespace cfftk
