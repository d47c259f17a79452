#include "cfftk/cff.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "cfftk/combinatorics.hpp"

namespace cfftk {

CffInstance::CffInstance(std::size_t point_count, std::vector<IndexSubset> blocks)
    : point_count_(point_count), blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw std::domain_error("CffInstance: at least one block required");
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i].ground_size() != point_count_)
            throw std::domain_error("CffInstance: block " + std::to_string(i) +
                                    " is not over " + std::to_string(point_count_) + " points");
}

IndexSubset CffInstance::point_signature(std::size_t x) const {
    if (x >= point_count_)
        throw std::domain_error("point_signature: point " + std::to_string(x) + " out of range");
    IndexSubset s(blocks_.size());
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i].contains(x)) s.insert(i);
    return s;
}

CffInstance CffInstance::without_point(std::size_t x) const {
    if (x >= point_count_)
        throw std::domain_error("without_point: point " + std::to_string(x) + " out of range");
    std::vector<IndexSubset> blocks;
    blocks.reserve(blocks_.size());
    for (const auto& b : blocks_) {
        IndexSubset nb(point_count_ - 1);
        for (auto p : b.elements())
            if (p != x) nb.insert(p < x ? p : p - 1);
        blocks.push_back(std::move(nb));
    }
    return CffInstance(point_count_ - 1, std::move(blocks));
}

std::uint64_t residual(const CffInstance& f, const IndexSubset& L, const IndexSubset& M) {
    const auto t = f.block_count();
    if (L.ground_size() != t || M.ground_size() != t)
        throw std::domain_error("residual: index sets must range over the " + std::to_string(t) +
                                " block indices");
    if (L.empty() || M.empty()) throw std::domain_error("residual: L and M must be nonempty");
    if (L.intersects(M)) throw std::domain_error("residual: L and M must be disjoint");

    IndexSubset survivors = IndexSubset::full(f.point_count());
    for (auto l : L.elements()) survivors &= f.block(l);
    for (auto m : M.elements()) survivors -= f.block(m);
    return survivors.count();
}

VerificationReport verify_cff(const CffInstance& f, int r, int w, std::uint64_t d, CoverMode mode) {
    const int t = static_cast<int>(f.block_count());
    if (d == 0) throw std::domain_error("verify_cff: d must be positive");
    require_graph_params(t, r, w);

    VerificationReport report;
    report.min_residual = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t all = (std::uint64_t{1} << t) - 1;

    for_each_k_subset(t, r, [&](std::uint64_t lmask) {
        // The r-fold intersection is shared by every companion M.
        IndexSubset common = IndexSubset::full(f.point_count());
        for (std::uint64_t b = lmask; b; b &= b - 1) common &= f.block(std::countr_zero(b));

        for_each_k_subset_of(all & ~lmask, w, [&](std::uint64_t mmask) {
            IndexSubset covered(f.point_count());
            for (std::uint64_t b = mmask; b; b &= b - 1) covered |= f.block(std::countr_zero(b));
            const std::uint64_t res = common.difference_count(covered);

            ++report.pairs_checked;
            report.min_residual = std::min(report.min_residual, res);
            report.max_residual = std::max(report.max_residual, res);
            const bool ok = mode == CoverMode::Exact ? res == d : res >= d;
            if (!ok && !report.witness) {
                report.passed = false;
                report.witness = Witness{IndexSubset::from_mask(t, lmask),
                                         IndexSubset::from_mask(t, mmask), res};
            }
        });
    });
    if (report.pairs_checked == 0) report.min_residual = 0;
    return report;
}

TheoremParams theorem_params(int r, int w, int t, std::optional<int> t_prime) {
    const auto maximizers = profile_maximizers(t, r, w);
    int chosen = maximizers.front();
    if (t_prime) {
        if (std::find(maximizers.begin(), maximizers.end(), *t_prime) == maximizers.end()) {
            std::string list;
            for (auto x : maximizers) list += (list.empty() ? "" : ",") + std::to_string(x);
            throw std::domain_error("t' = " + std::to_string(*t_prime) +
                                    " does not maximize C(x,r)C(t-x,w); maximizers: " + list);
        }
        chosen = *t_prime;
    }
    TheoremParams p;
    p.r = r;
    p.w = w;
    p.t = t;
    p.t_prime = chosen;
    p.d = binomial(static_cast<std::uint64_t>(t - r - w), static_cast<std::uint64_t>(chosen - r));
    p.t_double_prime = binomial(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(chosen));
    return p;
}

std::pair<CffInstance, TheoremParams> construct_optimal_cff(int r, int w, int t,
                                                            std::optional<int> t_prime) {
    auto params = theorem_params(r, w, t, t_prime);
    const auto n = static_cast<std::size_t>(params.t_double_prime);

    std::vector<IndexSubset> blocks(static_cast<std::size_t>(t), IndexSubset(n));
    std::size_t point = 0;  // colex rank of the current t'-subset
    for_each_k_subset(t, params.t_prime, [&](std::uint64_t a) {
        for (std::uint64_t b = a; b; b &= b - 1)
            blocks[static_cast<std::size_t>(std::countr_zero(b))].insert(point);
        ++point;
    });
    return {CffInstance(n, std::move(blocks)), params};
}

}  // namespace cfftk
