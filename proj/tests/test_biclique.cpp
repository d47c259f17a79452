#include <algorithm>
#include <map>
#include <random>

#include "cfftk/biclique.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cfftk;

namespace {

BicliqueCoverCert all_subsets_cert(int t, int size, int r, int w, std::uint64_t d) {
    BicliqueCoverCert c{t, r, w, d, {}, 0};
    for (const auto& a : oracle::colex_subsets(t, size))
        c.generators.emplace_back(static_cast<std::size_t>(t), std::vector<std::size_t>(a.begin(), a.end()));
    return c;
}

std::map<IndexSubset::word_type, int> signature_multiset(const CffInstance& f) {
    std::map<IndexSubset::word_type, int> out;
    for (std::size_t x = 0; x < f.point_count(); ++x) ++out[f.point_signature(x).mask()];
    return out;
}

std::vector<int> to_ints(const IndexSubset& s) {
    std::vector<int> v;
    for (auto e : s.elements()) v.push_back(static_cast<int>(e));
    return v;
}

}  // namespace

static_assert(std::input_iterator<EdgeStream::iterator>);

TEST_CASE("enumerate_edges examples") {
    std::vector<std::pair<IndexSubset, IndexSubset>> seen;
    for (const auto& e : enumerate_edges(2, 1, 1)) seen.emplace_back(e.L, e.M);
    REQUIRE(seen.size() == 2);
    CHECK(seen[0].first == IndexSubset(2, {0}));
    CHECK(seen[0].second == IndexSubset(2, {1}));
    CHECK(seen[1].first == IndexSubset(2, {1}));
    CHECK(seen[1].second == IndexSubset(2, {0}));

    CHECK(std::distance(enumerate_edges(4, 1, 1).begin(), enumerate_edges(4, 1, 1).end()) == 12);
    CHECK(std::distance(enumerate_edges(5, 2, 1).begin(), enumerate_edges(5, 2, 1).end()) == 30);
    CHECK_THROWS_AS(enumerate_edges(3, 2, 2), std::domain_error);
}

TEST_CASE("edge stream follows the canonical order of the brute-force edge list") {
    for (int t = 2; t <= 8; ++t)
        for (int r = 1; r < t; ++r)
            for (int w = 1; r + w <= t; ++w) {
                const auto expected = oracle::edges(t, r, w);
                std::size_t i = 0;
                std::vector<EdgeMasks> from_visitor;
                for_each_edge(t, r, w, [&](EdgeMasks e) { from_visitor.push_back(e); });
                for (auto it = enumerate_edges(t, r, w).begin(); it != enumerate_edges(t, r, w).end(); ++it, ++i) {
                    REQUIRE(i < expected.size());
                    const auto e = *it;
                    REQUIRE(to_ints(e.L) == expected[i].first);
                    REQUIRE(to_ints(e.M) == expected[i].second);
                    REQUIRE(it.masks() == from_visitor[i]);
                }
                REQUIRE(i == expected.size());
                REQUIRE(i == graph_stats(t, r, w).edge_count);
            }
}

TEST_CASE("graph_stats examples") {
    auto s = graph_stats(4, 1, 1);
    CHECK(s.edge_count == 12);
    CHECK(s.max_biclique_edges == 4);
    s = graph_stats(7, 1, 1);
    CHECK(s.edge_count == 42);
    CHECK(s.max_biclique_edges == 12);
    for (int r = 1; r <= 4; ++r)
        for (int w = 1; w <= 4; ++w) {
            s = graph_stats(r + w, r, w);
            CHECK(s.edge_count == oracle::pascal(r + w, r));
            CHECK(s.max_biclique_edges == 1);
        }
}

TEST_CASE("counting_lower_bound examples") {
    CHECK(counting_lower_bound(4, 1, 1, 2) == 6);
    CHECK(counting_lower_bound(7, 1, 1, 2) == 7);
    CHECK(counting_lower_bound(2, 1, 1, 1) == 2);
    CHECK_THROWS_AS(counting_lower_bound(4, 1, 1, 0), std::domain_error);
}

TEST_CASE("counting bound equals C(t, t') with no remainder at the theorem's d") {
    for (int r = 1; r <= 4; ++r)
        for (int w = 1; w <= 4; ++w)
            for (int t = r + w; t <= 20; ++t)
                for (int tp : profile_maximizers(t, r, w)) {
                    const auto p = theorem_params(r, w, t, tp);
                    const auto s = graph_stats(t, r, w);
                    REQUIRE(checked_mul(p.d, s.edge_count) % s.max_biclique_edges == 0);
                    REQUIRE(counting_lower_bound(t, r, w, p.d) == p.t_double_prime);
                }
}

TEST_CASE("verify_cover examples") {
    auto rep = verify_cover(all_subsets_cert(4, 2, 1, 1, 2), CoverMode::Exact);
    CHECK(rep.passed);
    CHECK(rep.min_residual == 2);

    rep = verify_cover(all_subsets_cert(5, 4, 2, 1, 1), CoverMode::Exact);
    CHECK(rep.passed);
    CHECK(rep.max_residual == 1);

    BicliqueCoverCert single{2, 1, 1, 1, {IndexSubset(2, {0})}, 0};
    rep = verify_cover(single, CoverMode::AtLeast);
    CHECK_FALSE(rep.passed);
    REQUIRE(rep.witness);
    CHECK(rep.witness->L == IndexSubset(2, {1}));
    CHECK(rep.witness->M == IndexSubset(2, {0}));
    CHECK(rep.witness->residual == 0);
}

TEST_CASE("malformed certificates are rejected") {
    BicliqueCoverCert c{4, 2, 1, 1, {IndexSubset(4, {0})}, 0};
    CHECK_THROWS_AS(verify_cover(c, CoverMode::AtLeast), std::domain_error);
    c.generators = {IndexSubset(4, {0, 1, 2, 3})};
    CHECK_THROWS_AS(verify_cover(c, CoverMode::AtLeast), std::domain_error);
    c.generators = {IndexSubset(5, {0, 1})};
    CHECK_THROWS_AS(verify_cover(c, CoverMode::AtLeast), std::domain_error);
    c.generators = {IndexSubset(4, {0, 1})};
    c.d = 0;
    CHECK_THROWS_AS(verify_cover(c, CoverMode::AtLeast), std::domain_error);
}

TEST_CASE("cover_from_cff examples") {
    const auto [f, p] = construct_optimal_cff(1, 1, 4);
    auto cert = cover_from_cff(f, 1, 1, p.d);
    CHECK(cert.generators.size() == 6);
    CHECK(cert.rejected_points == 0);
    for (std::size_t x = 0; x < 6; ++x) CHECK(cert.generators[x] == unrank_colex(x, 2, 4));
    CHECK(verify_cover(cert, CoverMode::Exact).passed);

    // point 3 lies in no block
    const CffInstance lonely(4, {IndexSubset(4, {0}), IndexSubset(4, {1}), IndexSubset(4, {2})});
    cert = cover_from_cff(lonely, 1, 1, 1);
    CHECK(cert.rejected_points == 1);
    CHECK(cert.generators.size() == 3);

    const CffInstance singletons(3, {IndexSubset(3, {0}), IndexSubset(3, {1}), IndexSubset(3, {2})});
    cert = cover_from_cff(singletons, 1, 1, 1);
    REQUIRE(cert.generators.size() == 3);
    CHECK(cert.generators[0] == IndexSubset(3, {0}));
    CHECK(cert.generators[1] == IndexSubset(3, {1}));
    CHECK(cert.generators[2] == IndexSubset(3, {2}));
}

TEST_CASE("cff_from_cover examples") {
    const auto f = cff_from_cover(all_subsets_cert(4, 2, 1, 1, 2));
    const auto [g, p] = construct_optimal_cff(1, 1, 4);
    CHECK(signature_multiset(f) == signature_multiset(g));

    BicliqueCoverCert one{2, 1, 1, 1, {IndexSubset(2, {0, 1})}, 0};
    // {0,1} has size 2 > t - w = 1, so it is not a legal generator here.
    CHECK_THROWS_AS(cff_from_cover(one), std::domain_error);
    one.w = 1;
    one.t = 3;
    one.generators = {IndexSubset(3, {0, 1})};
    const auto h = cff_from_cover(one);
    CHECK(h.point_count() == 1);
    CHECK(h.block(0).contains(0));
    CHECK(h.block(1).contains(0));
    CHECK_FALSE(h.block(2).contains(0));
}

TEST_CASE("round trip preserves the multiset of point signatures") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 100; ++trial) {
        const int t = 2 + static_cast<int>(rng() % 6);
        const int n = static_cast<int>(rng() % 12);
        const auto f = oracle::random_instance(rng, t, n, 0.5);
        const auto cert = cover_from_cff(f, 1, 1, 1);
        const auto back = cff_from_cover(cert);
        auto kept = signature_multiset(f);
        // drop signatures that were rejected
        for (auto it = kept.begin(); it != kept.end();) {
            const int size = std::popcount(it->first);
            it = (size < 1 || size > t - 1) ? kept.erase(it) : std::next(it);
        }
        REQUIRE(signature_multiset(back) == kept);
        REQUIRE(cert.rejected_points + back.point_count() == f.point_count());
    }
}

TEST_CASE("coverage count equals residual of the derived instance") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const int t = 3 + static_cast<int>(rng() % 4);
        const int r = 1 + static_cast<int>(rng() % 2);
        const int w = 1 + static_cast<int>(rng() % (t - r));
        BicliqueCoverCert cert{t, r, w, 1, {}, 0};
        const int count = static_cast<int>(rng() % 10);
        for (int j = 0; j < count; ++j) {
            IndexSubset a(static_cast<std::size_t>(t));
            while (static_cast<int>(a.count()) < r) a.insert(rng() % t);
            const int size = r + static_cast<int>(rng() % (t - w - r + 1));
            while (static_cast<int>(a.count()) < size) a.insert(rng() % t);
            cert.generators.push_back(a);
        }
        const auto f = cff_from_cover(cert);
        for (const auto& e : enumerate_edges(t, r, w)) {
            std::uint64_t covering = 0;
            for (const auto& a : cert.generators) covering += e.L.is_subset_of(a) && !e.M.intersects(a);
            REQUIRE(covering == residual(f, e.L, e.M));
        }
    }
}

TEST_CASE("verify_cff and verify_cover verdicts agree on 200 random instances") {
    std::mt19937_64 rng(20260101);
    for (int trial = 0; trial < 200; ++trial) {
        const int t = 2 + static_cast<int>(rng() % 6);
        const int r = 1 + static_cast<int>(rng() % (t - 1));
        const int w = 1 + static_cast<int>(rng() % (t - r));
        const std::uint64_t d = 1 + rng() % 2;
        const int n = static_cast<int>(rng() % 16);
        const auto f = oracle::random_instance(rng, t, n, 0.3 + 0.4 * (rng() % 2));
        const auto cert = cover_from_cff(f, r, w, d);
        for (auto mode : {CoverMode::AtLeast, CoverMode::Exact}) {
            const auto a = verify_cff(f, r, w, d, mode);
            const auto b = verify_cover(cert, mode);
            REQUIRE(a.passed == b.passed);
            REQUIRE(a.min_residual == b.min_residual);
            REQUIRE(a.max_residual == b.max_residual);
            REQUIRE(a.passed == oracle::is_cff(f, r, w, d, mode == CoverMode::Exact));
            if (b.passed && mode == CoverMode::AtLeast)
                REQUIRE(counting_lower_bound(t, r, w, d) <= cert.generators.size());
        }
    }
}
