#pragma once

#include <cstdint>
#include <optional>

#include "cfftk/biclique.hpp"

namespace cfftk {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

enum class SearchStatus { ProvenOptimal, UpperBoundOnly };

struct SearchResult {
    std::uint64_t optimum = 0;
    BicliqueCoverCert certificate;
    /// Branch-and-bound nodes visited. Informational only.
    std::uint64_t nodes_explored = 0;
    SearchStatus status = SearchStatus::UpperBoundOnly;
    /// Global counting bound ceil(d |E| / B) used for pruning.
    std::uint64_t lower_bound = 0;
};

/// Exact minimum size of a multiset of maximal-biclique generators covering
/// every edge of I_t(r, w) at least d times, i.e. N((r, w; d), t).
///
/// Branches on the first edge (canonical order) with unmet demand, trying the
/// generators that cover it in order of decreasing remaining coverage. A
/// generator rejected at a branch point stays excluded in the later sibling
/// subtrees, so each multiset is reached once. Nodes are pruned with
/// ceil(remaining demand / B). The initial incumbent is the seed when given,
/// otherwise d copies of every complement of a w-subset (or of every r-subset,
/// whichever is smaller).
///
/// When the node budget runs out the best incumbent is returned with status
/// UpperBoundOnly, unless it already meets the counting bound.
SearchResult min_cover_size(int t, int r, int w, std::uint64_t d,
                            std::uint64_t node_budget = kDefaultNodeBudget,
                            const std::optional<BicliqueCoverCert>& seed = std::nullopt);

}  // namespace cfftk
