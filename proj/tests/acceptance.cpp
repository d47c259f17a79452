// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "cfftk/biclique.hpp"
#include "cfftk/cff.hpp"
#include "cfftk/combinatorics.hpp"
#include "cfftk/hadamard.hpp"
#include "cfftk/search.hpp"
#include "oracles.hpp"

using namespace cfftk;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail << "first failure: " << what << "; ";
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double time_limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail << "exception: " << e.what() << "; ";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(secs <= time_limit_s, "runtime " + std::to_string(secs) + " s over limit");
    std::cout << (out.ok ? "[PASS] " : "[FAIL] ") << id << ". " << name << " -- " << out.detail.str()
              << "time " << secs << " s (limit " << time_limit_s << " s)" << std::endl;
    if (!out.ok) ++failures;
}

std::string tag(int r, int w, int t, int tp) {
    return "(r=" + std::to_string(r) + ",w=" + std::to_string(w) + ",t=" + std::to_string(t) +
           ",t'=" + std::to_string(tp) + ")";
}

std::map<std::uint64_t, int> multiset(const std::vector<IndexSubset>& gens) {
    std::map<std::uint64_t, int> m;
    for (const auto& a : gens) ++m[a.mask()];
    return m;
}

/// The witness must be the first pair, in colex-major order, whose
/// brute-force residual violates the condition, and carry that residual.
bool witness_is_first_violation(const CffInstance& f, int r, int w, std::uint64_t d, bool exact,
                                const VerificationReport& rep) {
    if (!rep.witness) return false;
    const auto blocks = oracle::to_sets(f);
    const int n = static_cast<int>(f.point_count());
    for (const auto& [L, M] : oracle::edges(static_cast<int>(f.block_count()), r, w)) {
        const auto res = oracle::residual(blocks, n, L, M);
        if (exact ? res != d : res < d) {
            std::vector<std::size_t> l(L.begin(), L.end()), m(M.begin(), M.end());
            return rep.witness->L.elements() == l && rep.witness->M.elements() == m &&
                   rep.witness->residual == res && residual(f, rep.witness->L, rep.witness->M) == res;
        }
    }
    return false;
}

}  // namespace

int main() {
    std::cout.setf(std::ios::fixed);
    std::cout.precision(3);

    criterion(1, "optimal construction exact-verifies, 1<=r,w<=3, r+w<=t<=10, every t'", 60.0, [](Outcome& o) {
        int instances = 0;
        for (int r = 1; r <= 3; ++r)
            for (int w = 1; w <= 3; ++w)
                for (int t = r + w; t <= 10; ++t)
                    for (int tp : profile_maximizers(t, r, w)) {
                        const auto [f, p] = construct_optimal_cff(r, w, t, tp);
                        const auto d = binomial(t - r - w, tp - r);
                        const auto rep = verify_cff(f, r, w, d, CoverMode::Exact);
                        o.require(p.d == d, "d mismatch " + tag(r, w, t, tp));
                        o.require(f.point_count() == binomial(t, tp), "n != C(t,t') " + tag(r, w, t, tp));
                        o.require(rep.passed, "exact verification failed " + tag(r, w, t, tp));
                        o.require(rep.pairs_checked == binomial(t, r) * binomial(t - r, w),
                                  "incomplete scan " + tag(r, w, t, tp));
                        ++instances;
                    }
        o.detail << instances << " instances; ";
    });

    criterion(2, "counting identity C(t,t')C(t',r)C(t-t',w) = d C(t,r)C(t-r,w), r,w<=4, t<=20", 10.0, [](Outcome& o) {
        int checked = 0;
        for (int r = 1; r <= 4; ++r)
            for (int w = 1; w <= 4; ++w)
                for (int t = r + w; t <= 20; ++t)
                    for (int tp : profile_maximizers(t, r, w)) {
                        const auto lhs = checked_mul(checked_mul(binomial(t, tp), binomial(tp, r)), binomial(t - tp, w));
                        const auto rhs = checked_mul(checked_mul(binomial(t - r - w, tp - r), binomial(t, r)),
                                                     binomial(t - r, w));
                        o.require(lhs == rhs, "identity fails " + tag(r, w, t, tp));
                        ++checked;
                    }
        o.detail << checked << " (r,w,t,t') tuples; ";
    });

    criterion(3, "unseeded exact search returns C(t,t') proven-optimal", 300.0, [](Outcome& o) {
        struct Case {
            int t, r, w, t_prime;  // t_prime 0 = every maximizer
        };
        const Case cases[] = {{3, 1, 1, 0}, {4, 1, 1, 0}, {3, 1, 2, 0}, {3, 2, 1, 0},
                              {4, 2, 1, 0}, {4, 1, 2, 0}, {5, 2, 1, 4}, {5, 1, 1, 0}};
        for (const auto& c : cases) {
            std::vector<int> tps = c.t_prime ? std::vector<int>{c.t_prime} : profile_maximizers(c.t, c.r, c.w);
            for (int tp : tps) {
                const auto p = theorem_params(c.r, c.w, c.t, tp);
                const auto res = min_cover_size(c.t, c.r, c.w, p.d);
                const auto label = tag(c.r, c.w, c.t, tp);
                o.require(res.status == SearchStatus::ProvenOptimal, "not proven optimal " + label);
                o.require(res.optimum == binomial(c.t, tp), "optimum != C(t,t') " + label);
                o.require(verify_cover(res.certificate, CoverMode::AtLeast).passed, "invalid certificate " + label);
                o.detail << "N" << label << "=" << res.optimum << " ";
            }
        }
        o.detail << "; ";
    });

    criterion(4, "Hadamard instances: orders 4, 8, 12 give optimal (1,1;d)-CFF(4d-1)", 10.0, [](Outcome& o) {
        {
            const auto [f, d] = hadamard_to_cff(sylvester(2));
            o.require(d == 1 && f.point_count() == 3 && f.block_count() == 3, "order 4 shape");
            o.require(verify_cff(f, 1, 1, 1, CoverMode::Exact).passed, "order 4 exact verification");
            const auto res = min_cover_size(3, 1, 1, 1);
            o.require(res.status == SearchStatus::ProvenOptimal && res.optimum == 3, "N((1,1;1),3) != 3");
        }
        {
            const auto [f, d] = hadamard_to_cff(sylvester(3));
            o.require(d == 2 && f.point_count() == 7 && f.block_count() == 7, "order 8 shape");
            o.require(verify_cff(f, 1, 1, 2, CoverMode::Exact).passed, "order 8 exact verification");
            o.require(counting_lower_bound(7, 1, 1, 2) == 7, "bound(7,1,1,2) != 7");
        }
        {
            const auto [f, d] = hadamard_to_cff(paley_type1(11));
            o.require(d == 3 && f.point_count() == 11 && f.block_count() == 11, "order 12 shape");
            o.require(verify_cff(f, 1, 1, 3, CoverMode::Exact).passed, "order 12 exact verification");
            o.require(counting_lower_bound(11, 1, 1, 3) == 11, "bound(11,1,1,3) != 11");
        }
        o.detail << "N((1,1;1),3)=3, N((1,1;2),7)=7, N((1,1;3),11)=11; ";
    });

    criterion(5, "round trips and 200-instance verdict agreement", 60.0, [](Outcome& o) {
        // cover -> cff -> cover keeps the generator multiset
        int certs = 0;
        for (int r = 1; r <= 3; ++r)
            for (int w = 1; w <= 3; ++w)
                for (int t = r + w; t <= 8; ++t)
                    for (int tp : profile_maximizers(t, r, w)) {
                        const auto [f, p] = construct_optimal_cff(r, w, t, tp);
                        const auto cert = cover_from_cff(f, r, w, p.d);
                        o.require(cert.rejected_points == 0, "construction point rejected " + tag(r, w, t, tp));
                        o.require(verify_cover(cert, CoverMode::Exact).passed, "construction cover not exact");
                        o.require(counting_lower_bound(t, r, w, p.d) <= cert.generators.size(), "bound exceeds cover");
                        const auto back = cover_from_cff(cff_from_cover(cert), r, w, p.d);
                        o.require(multiset(back.generators) == multiset(cert.generators),
                                  "cover round trip " + tag(r, w, t, tp));
                        ++certs;
                    }
        for (auto [t, r, w, d] : {std::tuple{4, 1, 1, 2}, {5, 2, 1, 1}, {5, 1, 1, 3}, {4, 1, 1, 1}}) {
            const auto res = min_cover_size(t, r, w, static_cast<std::uint64_t>(d));
            const auto back = cover_from_cff(cff_from_cover(res.certificate), r, w, static_cast<std::uint64_t>(d));
            o.require(multiset(back.generators) == multiset(res.certificate.generators), "search cert round trip");
            o.require(counting_lower_bound(t, r, w, static_cast<std::uint64_t>(d)) <= res.optimum, "bound exceeds search");
            ++certs;
        }

        // Hadamard -> CFF -> Hadamard
        const std::pair<int, HadamardMatrix> hs[] = {{4, sylvester(2)},
                                                     {8, sylvester(3)},
                                                     {12, paley_type1(11)},
                                                     {16, sylvester(4)},
                                                     {24, kronecker(sylvester(1), paley_type1(11))},
                                                     {24, paley_type1(23)}};
        for (const auto& [order, h] : hs) {
            const auto label = "order " + std::to_string(order);
            const auto [f, d] = hadamard_to_cff(h);
            o.require(h.order() == static_cast<std::size_t>(order), label + " generator order");
            o.require(f.point_count() == h.order() - 1 && f.block_count() == h.order() - 1, label + " shape");
            o.require(d == h.order() / 4, label + " d");
            const auto rep = verify_cff(f, 1, 1, d, CoverMode::Exact);
            o.require(rep.passed && rep.min_residual == d && rep.max_residual == d, label + " residuals");
            for (std::size_t x = 0; x < f.point_count(); ++x)
                o.require(f.point_signature(x).count() == 2 * d - 1, label + " point degree");
            const auto attempt = cff_to_hadamard_attempt(f, d);
            o.require(attempt.succeeded(), label + " reconstruction");
            if (attempt.succeeded()) o.require(*attempt.matrix == normalize(h), label + " reconstruction mismatch");
        }

        // verdict agreement on seeded random instances
        std::mt19937_64 rng(20261016);
        int agreements = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const int t = 2 + static_cast<int>(rng() % 6);  // 2..7
            const int r = 1 + static_cast<int>(rng() % (t - 1));
            const int w = 1 + static_cast<int>(rng() % (t - r));
            const std::uint64_t d = 1 + rng() % 2;
            const int n = 1 + static_cast<int>(rng() % 20);
            const auto f = oracle::random_instance(rng, t, n, 0.25 + 0.5 * static_cast<double>(rng() % 2));
            const auto cert = cover_from_cff(f, r, w, d);
            for (auto mode : {CoverMode::AtLeast, CoverMode::Exact}) {
                const bool a = verify_cff(f, r, w, d, mode).passed;
                const bool b = verify_cover(cert, mode).passed;
                o.require(a == b, "verdict disagreement at trial " + std::to_string(trial));
                agreements += a == b;
            }
        }
        o.detail << certs << " cover round trips, " << std::size(hs) << " Hadamard round trips, " << agreements
                 << "/400 verdict agreements; ";
    });

    criterion(6, "negative controls: duplicated blocks and perturbed optimal instances fail", 120.0, [](Outcome& o) {
        int duplicated = 0, deletions = 0, flips = 0;
        for (int r = 1; r <= 3; ++r)
            for (int w = 1; w <= 3; ++w)
                for (int t = r + w; t <= 10; ++t)
                    for (int tp : profile_maximizers(t, r, w)) {
                        const auto [f, p] = construct_optimal_cff(r, w, t, tp);
                        const auto label = tag(r, w, t, tp);

                        if (t <= 8) {
                            // block 1 := block 0
                            auto blocks = f.blocks();
                            blocks[1] = blocks[0];
                            const CffInstance dup(f.point_count(), blocks);
                            const auto rep = verify_cff(dup, r, w, 1, CoverMode::AtLeast);
                            o.require(!rep.passed, "duplicate accepted " + label);
                            o.require(witness_is_first_violation(dup, r, w, 1, false, rep),
                                      "duplicate witness wrong " + label);
                            o.require(rep.witness && rep.witness->residual == 0, "duplicate witness residual " + label);
                            ++duplicated;
                        }

                        for (std::size_t x = 0; x < f.point_count(); ++x) {
                            const auto rep = verify_cff(f.without_point(x), r, w, p.d, CoverMode::Exact);
                            o.require(!rep.passed && rep.min_residual == p.d - 1,
                                      "point deletion survived " + label + " x=" + std::to_string(x));
                            ++deletions;

                            // drop x from the first block that contains it
                            auto blocks = f.blocks();
                            const auto sig = f.point_signature(x).elements();
                            blocks[sig.front()].erase(x);
                            const CffInstance flipped(f.point_count(), blocks);
                            const auto frep = verify_cff(flipped, r, w, p.d, CoverMode::Exact);
                            o.require(!frep.passed, "membership flip survived " + label);
                            if (t <= 6)
                                o.require(witness_is_first_violation(flipped, r, w, p.d, true, frep),
                                          "flip witness wrong " + label);
                            ++flips;
                        }
                    }
        o.detail << duplicated << " duplicated-block instances, " << deletions << " point deletions, " << flips
                 << " membership flips; ";
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
