#include "cfftk/hadamard.hpp"

#include <stdexcept>
#include <string>

namespace cfftk {

SignMatrix::SignMatrix(std::size_t order) : order_(order), entries_(order * order, 1) {}

SignMatrix SignMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    SignMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw std::domain_error("sign matrix: row " + std::to_string(i) + " has " +
                                    std::to_string(rows[i].size()) + " entries, expected " +
                                    std::to_string(rows.size()));
        for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void SignMatrix::set(std::size_t i, std::size_t j, int value) {
    if (value != 1 && value != -1)
        throw std::domain_error("sign matrix: entry (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") = " + std::to_string(value) +
                                " is not +1 or -1");
    entries_.at(i * order_ + j) = static_cast<signed char>(value);
}

void SignMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < order_; ++j) entries_[i * order_ + j] = -entries_[i * order_ + j];
}

void SignMatrix::negate_column(std::size_t j) {
    for (std::size_t i = 0; i < order_; ++i) entries_[i * order_ + j] = -entries_[i * order_ + j];
}

long long SignMatrix::row_dot(std::size_t i, std::size_t j) const noexcept {
    long long s = 0;
    const auto* a = &entries_[i * order_];
    const auto* b = &entries_[j * order_];
    for (std::size_t k = 0; k < order_; ++k) s += a[k] * b[k];
    return s;
}

HadamardCheck verify_hadamard(const SignMatrix& m) {
    HadamardCheck check;
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = i + 1; j < m.order(); ++j) {
            const auto dot = m.row_dot(i, j);
            if (dot != 0) {
                check.passed = false;
                check.offending_rows = {i, j};
                check.offending_dot = dot;
                return check;
            }
        }
    return check;
}

HadamardCheck verify_hadamard(const std::vector<std::vector<int>>& rows) {
    return verify_hadamard(SignMatrix::from_rows(rows));
}

HadamardMatrix::HadamardMatrix(SignMatrix m) : m_(std::move(m)) {
    const auto check = verify_hadamard(m_);
    if (!check.passed)
        throw std::domain_error("not a Hadamard matrix: rows " +
                                std::to_string(check.offending_rows->first) + " and " +
                                std::to_string(check.offending_rows->second) +
                                " have dot product " + std::to_string(check.offending_dot));
}

HadamardMatrix sylvester(int k) {
    if (k < 0) throw std::domain_error("sylvester: k must be nonnegative");
    if (k >= 63 || (std::size_t{1} << k) > kMaxHadamardOrder)
        throw std::overflow_error("sylvester: order 2^" + std::to_string(k) + " exceeds limit " +
                                  std::to_string(kMaxHadamardOrder));
    SignMatrix h(1);
    for (int step = 0; step < k; ++step) {
        const auto n = h.order();
        SignMatrix next(2 * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const int v = h(i, j);
                next.set(i, j, v);
                next.set(i, j + n, v);
                next.set(i + n, j, v);
                next.set(i + n, j + n, -v);
            }
        h = std::move(next);
    }
    return HadamardMatrix(std::move(h));
}

bool is_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

HadamardMatrix paley_type1(std::uint64_t q) {
    if (!is_prime(q) || q % 4 != 3)
        throw std::domain_error("paley_type1: q = " + std::to_string(q) +
                                " must be a prime congruent to 3 mod 4");
    if (q + 1 > kMaxHadamardOrder)
        throw std::overflow_error("paley_type1: order " + std::to_string(q + 1) +
                                  " exceeds limit " + std::to_string(kMaxHadamardOrder));

    std::vector<int> chi(q, -1);  // quadratic character, chi(0) = 0
    chi[0] = 0;
    for (std::uint64_t x = 1; x < q; ++x) chi[(x * x) % q] = 1;

    // H = I + S with S = [[0, 1^T], [-1, Q]] and Q[i][j] = chi(j - i).
    const auto n = static_cast<std::size_t>(q + 1);
    SignMatrix h(n);
    for (std::size_t i = 1; i < n; ++i) h.set(i, 0, -1);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            const int s = chi[(j + q - i) % q];
            h.set(i + 1, j + 1, i == j ? 1 : s);
        }
    return HadamardMatrix(std::move(h));
}

HadamardMatrix kronecker(const HadamardMatrix& a, const HadamardMatrix& b) {
    const auto na = a.order();
    const auto nb = b.order();
    if (nb != 0 && na > kMaxHadamardOrder / nb)
        throw std::overflow_error("kronecker: order " + std::to_string(na) + " * " +
                                  std::to_string(nb) + " exceeds limit " +
                                  std::to_string(kMaxHadamardOrder));
    SignMatrix k(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t p = 0; p < nb; ++p)
                for (std::size_t q = 0; q < nb; ++q) k.set(i * nb + p, j * nb + q, a(i, j) * b(p, q));
    return HadamardMatrix(std::move(k));
}

HadamardMatrix normalize(const HadamardMatrix& h) {
    SignMatrix m = h.matrix();
    for (std::size_t i = 0; i < m.order(); ++i)
        if (m(i, 0) < 0) m.negate_row(i);
    for (std::size_t j = 0; j < m.order(); ++j)
        if (m(0, j) < 0) m.negate_column(j);
    return HadamardMatrix(std::move(m));
}

std::pair<CffInstance, std::uint64_t> hadamard_to_cff(const HadamardMatrix& h) {
    const auto order = h.order();
    if (order < 4 || order % 4 != 0)
        throw std::domain_error("hadamard_to_cff: order " + std::to_string(order) +
                                " is not a positive multiple of 4");
    const auto norm = normalize(h);
    const auto n = order - 1;
    std::vector<IndexSubset> blocks;
    blocks.reserve(n);
    for (std::size_t i = 1; i < order; ++i) {
        IndexSubset b(n);
        for (std::size_t j = 1; j < order; ++j)
            if (norm(i, j) > 0) b.insert(j - 1);
        blocks.push_back(std::move(b));
    }
    return {CffInstance(n, std::move(blocks)), order / 4};
}

HadamardAttempt cff_to_hadamard_attempt(const CffInstance& f, std::uint64_t d) {
    if (d == 0) throw std::domain_error("cff_to_hadamard_attempt: d must be positive");
    const auto expected = 4 * d - 1;
    if (f.block_count() != expected || f.point_count() != expected)
        throw std::domain_error("cff_to_hadamard_attempt: need t = n = 4d - 1 = " +
                                std::to_string(expected) + ", got t = " +
                                std::to_string(f.block_count()) + ", n = " +
                                std::to_string(f.point_count()));
    HadamardAttempt attempt;
    attempt.candidate = SignMatrix(expected + 1);
    for (std::size_t i = 0; i < expected; ++i)
        for (std::size_t j = 0; j < expected; ++j)
            attempt.candidate.set(i + 1, j + 1, f.block(i).contains(j) ? 1 : -1);
    attempt.check = verify_hadamard(attempt.candidate);
    if (attempt.check.passed) attempt.matrix.emplace(attempt.candidate);
    return attempt;
}

}  // namespace cfftk
