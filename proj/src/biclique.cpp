#include "cfftk/biclique.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace cfftk {

void BicliqueCoverCert::validate() const {
    require_graph_params(t, r, w);
    if (d == 0) throw std::domain_error("biclique cover: d must be positive");
    for (std::size_t j = 0; j < generators.size(); ++j) {
        const auto& a = generators[j];
        if (a.ground_size() != static_cast<std::size_t>(t))
            throw std::domain_error("biclique cover: generator " + std::to_string(j) +
                                    " is not a subset of [" + std::to_string(t) + "]");
        const auto size = static_cast<int>(a.count());
        if (size < r || size > t - w)
            throw std::domain_error("biclique cover: generator " + std::to_string(j) + " has size " +
                                    std::to_string(size) + ", outside [" + std::to_string(r) +
                                    ", " + std::to_string(t - w) + "]");
    }
}

std::uint64_t GraphStats::cover_lower_bound(std::uint64_t d) const {
    const auto demand = checked_mul(d, edge_count);
    return demand / max_biclique_edges + (demand % max_biclique_edges != 0 ? 1 : 0);
}

EdgeStream::EdgeStream(int t, int r, int w) : t_(t), r_(r), w_(w) {
    require_graph_params(t, r, w);
}

EdgeStream::iterator::iterator(int t, int r, int w) : t_(t), r_(r), w_(w), done_(false) {
    current_.L = (std::uint64_t{1} << r) - 1;
    local_m_ = (std::uint64_t{1} << w) - 1;
    const std::uint64_t all = (std::uint64_t{1} << t) - 1;
    current_.M = deposit_bits(local_m_, all & ~current_.L);
}

Edge EdgeStream::iterator::operator*() const {
    return Edge{IndexSubset::from_mask(static_cast<std::size_t>(t_), current_.L),
                IndexSubset::from_mask(static_cast<std::size_t>(t_), current_.M)};
}

EdgeStream::iterator& EdgeStream::iterator::operator++() {
    if (done_) return *this;
    const std::uint64_t all = (std::uint64_t{1} << t_) - 1;
    local_m_ = next_k_subset(local_m_);
    if (local_m_ >= (std::uint64_t{1} << (t_ - r_))) {
        current_.L = next_k_subset(current_.L);
        if (current_.L > all) {
            done_ = true;
            return *this;
        }
        local_m_ = (std::uint64_t{1} << w_) - 1;
    }
    current_.M = deposit_bits(local_m_, all & ~current_.L);
    return *this;
}

EdgeStream enumerate_edges(int t, int r, int w) { return EdgeStream(t, r, w); }

GraphStats graph_stats(int t, int r, int w) {
    require_graph_params(t, r, w);
    GraphStats s;
    s.t = t;
    s.r = r;
    s.w = w;
    s.edge_count = checked_mul(binomial(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(r)),
                               binomial(static_cast<std::uint64_t>(t - r), static_cast<std::uint64_t>(w)));
    for (int x = r; x <= t - w; ++x) s.max_biclique_edges = std::max(s.max_biclique_edges, profile_value(x, t, r, w));
    return s;
}

std::uint64_t counting_lower_bound(int t, int r, int w, std::uint64_t d) {
    if (d == 0) throw std::domain_error("counting_lower_bound: d must be positive");
    return graph_stats(t, r, w).cover_lower_bound(d);
}

VerificationReport verify_cover(const BicliqueCoverCert& cert, CoverMode mode) {
    cert.validate();
    std::vector<std::uint64_t> gens;
    gens.reserve(cert.generators.size());
    for (const auto& a : cert.generators) gens.push_back(a.mask());

    VerificationReport report;
    report.min_residual = std::numeric_limits<std::uint64_t>::max();
    for_each_edge(cert.t, cert.r, cert.w, [&](EdgeMasks e) {
        std::uint64_t covering = 0;
        for (auto a : gens)
            if ((e.L & ~a) == 0 && (e.M & a) == 0) ++covering;

        ++report.pairs_checked;
        report.min_residual = std::min(report.min_residual, covering);
        report.max_residual = std::max(report.max_residual, covering);
        const bool ok = mode == CoverMode::Exact ? covering == cert.d : covering >= cert.d;
        if (!ok && !report.witness) {
            report.passed = false;
            report.witness = Witness{IndexSubset::from_mask(static_cast<std::size_t>(cert.t), e.L),
                                     IndexSubset::from_mask(static_cast<std::size_t>(cert.t), e.M),
                                     covering};
        }
    });
    return report;
}

BicliqueCoverCert cover_from_cff(const CffInstance& f, int r, int w, std::uint64_t d) {
    BicliqueCoverCert cert;
    cert.t = static_cast<int>(f.block_count());
    cert.r = r;
    cert.w = w;
    cert.d = d;
    require_graph_params(cert.t, r, w);
    if (d == 0) throw std::domain_error("cover_from_cff: d must be positive");

    for (std::size_t x = 0; x < f.point_count(); ++x) {
        auto sig = f.point_signature(x);
        const auto size = static_cast<int>(sig.count());
        if (size < r || size > cert.t - w) {
            ++cert.rejected_points;
            continue;
        }
        cert.generators.push_back(std::move(sig));
    }
    return cert;
}

CffInstance cff_from_cover(const BicliqueCoverCert& cert) {
    cert.validate();
    const auto n = cert.generators.size();
    std::vector<IndexSubset> blocks(static_cast<std::size_t>(cert.t), IndexSubset(n));
    for (std::size_t j = 0; j < n; ++j)
        for (auto i : cert.generators[j].elements()) blocks[i].insert(j);
    return CffInstance(n, std::move(blocks));
}

}  // namespace cfftk
