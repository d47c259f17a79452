#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace cfftk {

/// A subset of the ground set {0, ..., size-1}, stored as a packed bit vector.
///
/// The ground-set size is part of the value: two subsets with the same
/// elements but different ground sets compare unequal. Binary set operations
/// require matching ground sets and throw std::domain_error otherwise.
class IndexSubset {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    IndexSubset() = default;
    explicit IndexSubset(std::size_t ground_size);
    IndexSubset(std::size_t ground_size, std::initializer_list<std::size_t> elements);
    IndexSubset(std::size_t ground_size, const std::vector<std::size_t>& elements);

    /// Subset of a ground set with at most 64 elements, bit i set iff i is a member.
    static IndexSubset from_mask(std::size_t ground_size, std::uint64_t mask);
    static IndexSubset full(std::size_t ground_size);

    std::size_t ground_size() const noexcept { return ground_size_; }
    std::size_t count() const noexcept;
    bool empty() const noexcept;

    bool contains(std::size_t i) const noexcept;
    void insert(std::size_t i);
    void erase(std::size_t i);

    /// Sorted element list.
    std::vector<std::size_t> elements() const;
    /// Bit mask view; only valid for ground sets of at most 64 elements.
    std::uint64_t mask() const;

    IndexSubset& operator&=(const IndexSubset& other);
    IndexSubset& operator|=(const IndexSubset& other);
    /// Set difference.
    IndexSubset& operator-=(const IndexSubset& other);

    IndexSubset complement() const;
    bool is_subset_of(const IndexSubset& other) const;
    bool intersects(const IndexSubset& other) const;

    /// |this & other| and |this - other| without materializing the result.
    std::size_t intersection_count(const IndexSubset& other) const;
    std::size_t difference_count(const IndexSubset& other) const;

    friend bool operator==(const IndexSubset&, const IndexSubset&) = default;

private:
    void check_same_ground(const IndexSubset& other) const;
    void clear_tail() noexcept;

    std::size_t ground_size_ = 0;
    std::vector<word_type> words_;
};

inline IndexSubset operator&(IndexSubset a, const IndexSubset& b) { return a &= b; }
inline IndexSubset operator|(IndexSubset a, const IndexSubset& b) { return a |= b; }
inline IndexSubset operator-(IndexSubset a, const IndexSubset& b) { return a -= b; }

/// Prints `{0,2,5}`.
std::ostream& operator<<(std::ostream& os, const IndexSubset& s);

}  // namespace cfftk
