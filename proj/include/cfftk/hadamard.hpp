#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfftk/cff.hpp"

namespace cfftk {

/// Largest order the generators will build (entries are stored densely).
inline constexpr std::size_t kMaxHadamardOrder = std::size_t{1} << 14;

/// Square matrix with entries in {+1, -1}. Not necessarily Hadamard.
class SignMatrix {
public:
    SignMatrix() = default;
    /// All +1 matrix of the given order.
    explicit SignMatrix(std::size_t order);
    /// Throws std::domain_error unless rows form a square matrix of +/-1 entries.
    static SignMatrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t order() const noexcept { return order_; }
    int operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * order_ + j]; }
    void set(std::size_t i, std::size_t j, int value);
    void negate_row(std::size_t i);
    void negate_column(std::size_t j);

    /// Dot product of rows i and j.
    long long row_dot(std::size_t i, std::size_t j) const noexcept;

    friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

private:
    std::size_t order_ = 0;
    std::vector<signed char> entries_;
};

struct HadamardCheck {
    bool passed = true;
    /// First non-orthogonal row pair (i < j) in row-major scan order.
    std::optional<std::pair<std::size_t, std::size_t>> offending_rows;
    long long offending_dot = 0;
};

/// Passes iff every pair of distinct rows is orthogonal, i.e. H H^T = n I.
HadamardCheck verify_hadamard(const SignMatrix& m);
/// Same check on raw integer rows; entries other than +/-1 raise std::domain_error.
HadamardCheck verify_hadamard(const std::vector<std::vector<int>>& rows);

/// A sign matrix known to satisfy H H^T = n I.
class HadamardMatrix {
public:
    /// Throws std::domain_error with the offending row pair if `m` is not Hadamard.
    explicit HadamardMatrix(SignMatrix m);

    std::size_t order() const noexcept { return m_.order(); }
    int operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }
    const SignMatrix& matrix() const noexcept { return m_; }

    friend bool operator==(const HadamardMatrix&, const HadamardMatrix&) = default;

private:
    SignMatrix m_;
};

/// Order 2^k by repeated doubling [[H, H], [H, -H]].
HadamardMatrix sylvester(int k);

/// Order q + 1 from the quadratic residues mod a prime q = 3 (mod 4).
HadamardMatrix paley_type1(std::uint64_t q);

HadamardMatrix kronecker(const HadamardMatrix& a, const HadamardMatrix& b);

/// Negates rows, then columns, so the first row and column are all +1.
HadamardMatrix normalize(const HadamardMatrix& h);

/// Normalizes, drops the first row and column, and reads each remaining row as
/// a block: block i = { j : entry (i+1, j+1) = +1 }. Result is a (1,1;d)-CFF
/// with 4d - 1 points and blocks, where d = order / 4.
std::pair<CffInstance, std::uint64_t> hadamard_to_cff(const HadamardMatrix& h);

struct HadamardAttempt {
    std::optional<HadamardMatrix> matrix;
    /// Bordered candidate that was tested, present on both outcomes.
    SignMatrix candidate;
    HadamardCheck check;

    bool succeeded() const noexcept { return matrix.has_value(); }
};

/// Borders the incidence matrix with a +1 first row and column (interior
/// entry +1 iff point j is in block i) and checks orthogonality. Requires
/// t = n = 4d - 1.
HadamardAttempt cff_to_hadamard_attempt(const CffInstance& f, std::uint64_t d);

bool is_prime(std::uint64_t q);

}  // namespace cfftk
