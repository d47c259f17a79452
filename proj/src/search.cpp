#include "cfftk/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace cfftk {

namespace {

class CoverSearch {
public:
    CoverSearch(int t, int r, int w, std::uint64_t d, std::uint64_t budget)
        : budget_(budget) {
        const auto stats = graph_stats(t, r, w);
        max_cover_ = stats.max_biclique_edges;
        lower_bound_ = stats.cover_lower_bound(d);

        std::vector<EdgeMasks> edges;
        for_each_edge(t, r, w, [&](EdgeMasks e) { edges.push_back(e); });
        demand_.assign(edges.size(), d);
        remaining_ = checked_mul(d, edges.size());

        const std::uint64_t limit = std::uint64_t{1} << t;
        for (std::uint64_t a = 0; a < limit; ++a) {
            const int size = std::popcount(a);
            if (size >= r && size <= t - w) candidates_.push_back(a);
        }
        covers_.resize(candidates_.size());
        covered_by_.resize(edges.size());
        for (std::size_t c = 0; c < candidates_.size(); ++c) {
            const auto a = candidates_[c];
            for (std::size_t e = 0; e < edges.size(); ++e)
                if ((edges[e].L & ~a) == 0 && (edges[e].M & a) == 0) {
                    covers_[c].push_back(static_cast<std::uint32_t>(e));
                    covered_by_[e].push_back(static_cast<std::uint32_t>(c));
                }
        }
        excluded_.assign(candidates_.size(), 0);
    }

    std::uint64_t lower_bound() const { return lower_bound_; }

    void set_incumbent(std::vector<std::uint64_t> gens) {
        best_ = std::move(gens);
        best_size_ = best_.size();
    }

    /// Returns false if the budget ran out.
    bool run() {
        if (best_size_ > lower_bound_) dfs();
        return !aborted_;
    }

    std::uint64_t nodes() const { return nodes_; }
    const std::vector<std::uint64_t>& best() const { return best_; }

private:
    std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) const { return a / b + (a % b != 0); }

    void dfs() {
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        if (remaining_ == 0) {
            if (chosen_.size() < best_size_) {
                best_.clear();
                for (auto c : chosen_) best_.push_back(candidates_[c]);
                best_size_ = best_.size();
            }
            return;
        }
        if (chosen_.size() + ceil_div(remaining_, max_cover_) >= best_size_) return;

        std::size_t edge = 0;
        while (demand_[edge] == 0) ++edge;

        // Most remaining-demand edges first; ties go to the candidate whose
        // edges carry more outstanding demand, then to the smaller mask.
        struct Option {
            std::uint32_t candidate;
            std::uint64_t gain;
            std::uint64_t weight;
        };
        std::vector<Option> options;
        for (auto c : covered_by_[edge]) {
            if (excluded_[c]) continue;
            std::uint64_t gain = 0;
            std::uint64_t weight = 0;
            for (auto e : covers_[c]) {
                gain += demand_[e] > 0;
                weight += demand_[e];
            }
            options.push_back({c, gain, weight});
        }
        std::stable_sort(options.begin(), options.end(), [](const Option& a, const Option& b) {
            return a.gain != b.gain ? a.gain > b.gain : a.weight > b.weight;
        });

        std::size_t tried = 0;
        for (const auto& opt : options) {
            apply(opt.candidate);
            dfs();
            undo();
            ++excluded_[opt.candidate];
            ++tried;
            if (aborted_ || best_size_ <= lower_bound_) break;
            if (chosen_.size() + ceil_div(remaining_, max_cover_) >= best_size_) break;
        }
        for (std::size_t i = 0; i < tried; ++i) --excluded_[options[i].candidate];
    }

    void apply(std::uint32_t c) {
        chosen_.push_back(c);
        trail_marks_.push_back(trail_.size());
        for (auto e : covers_[c])
            if (demand_[e] > 0) {
                --demand_[e];
                --remaining_;
                trail_.push_back(e);
            }
    }

    void undo() {
        const auto mark = trail_marks_.back();
        trail_marks_.pop_back();
        for (auto i = mark; i < trail_.size(); ++i) {
            ++demand_[trail_[i]];
            ++remaining_;
        }
        trail_.resize(mark);
        chosen_.pop_back();
    }

    std::uint64_t budget_;
    std::uint64_t max_cover_ = 1;
    std::uint64_t lower_bound_ = 0;

    std::vector<std::uint64_t> candidates_;
    std::vector<std::vector<std::uint32_t>> covers_;      // candidate -> edges
    std::vector<std::vector<std::uint32_t>> covered_by_;  // edge -> candidates
    std::vector<std::uint64_t> demand_;
    std::uint64_t remaining_ = 0;
    std::vector<std::uint32_t> excluded_;

    std::vector<std::uint32_t> chosen_;
    std::vector<std::uint32_t> trail_;
    std::vector<std::size_t> trail_marks_;

    std::vector<std::uint64_t> best_;
    std::uint64_t best_size_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

std::vector<std::uint64_t> trivial_cover(int t, int r, int w, std::uint64_t d) {
    // A = L covers exactly the edges at L; A = [t] \ M covers exactly those at M.
    const std::uint64_t all = (std::uint64_t{1} << t) - 1;
    std::vector<std::uint64_t> sides;
    const bool by_r = binomial(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(r)) <=
                      binomial(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(w));
    if (by_r)
        for_each_k_subset(t, r, [&](std::uint64_t l) { sides.push_back(l); });
    else
        for_each_k_subset(t, w, [&](std::uint64_t m) { sides.push_back(all & ~m); });

    std::vector<std::uint64_t> gens;
    gens.reserve(checked_mul(sides.size(), d));
    for (std::uint64_t copy = 0; copy < d; ++copy) gens.insert(gens.end(), sides.begin(), sides.end());
    return gens;
}

}  // namespace

SearchResult min_cover_size(int t, int r, int w, std::uint64_t d, std::uint64_t node_budget,
                            const std::optional<BicliqueCoverCert>& seed) {
    require_graph_params(t, r, w);
    if (d == 0) throw std::domain_error("min_cover_size: d must be positive");
    if (node_budget == 0) throw std::domain_error("min_cover_size: node budget must be positive");

    CoverSearch search(t, r, w, d, node_budget);
    if (seed) {
        if (seed->t != t || seed->r != r || seed->w != w || seed->d != d)
            throw std::domain_error("min_cover_size: seed certificate parameters do not match");
        if (!verify_cover(*seed, CoverMode::AtLeast).passed)
            throw std::domain_error("min_cover_size: seed certificate is not a valid cover");
        std::vector<std::uint64_t> gens;
        for (const auto& a : seed->generators) gens.push_back(a.mask());
        auto fallback = trivial_cover(t, r, w, d);
        search.set_incumbent(gens.size() <= fallback.size() ? std::move(gens) : std::move(fallback));
    } else {
        search.set_incumbent(trivial_cover(t, r, w, d));
    }

    const bool completed = search.run();

    SearchResult result;
    result.lower_bound = search.lower_bound();
    result.nodes_explored = search.nodes();
    result.optimum = search.best().size();
    result.status = completed || result.optimum <= result.lower_bound ? SearchStatus::ProvenOptimal
                                                                      : SearchStatus::UpperBoundOnly;
    auto& cert = result.certificate;
    cert.t = t;
    cert.r = r;
    cert.w = w;
    cert.d = d;
    auto gens = search.best();
    std::sort(gens.begin(), gens.end());
    for (auto a : gens) cert.generators.push_back(IndexSubset::from_mask(static_cast<std::size_t>(t), a));
    return result;
}

}  // namespace cfftk
