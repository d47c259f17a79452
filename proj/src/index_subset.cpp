#include "cfftk/index_subset.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cfftk {

namespace {

std::size_t words_for(std::size_t bits) {
    return (bits + IndexSubset::word_bits - 1) / IndexSubset::word_bits;
}

}  // namespace

IndexSubset::IndexSubset(std::size_t ground_size)
    : ground_size_(ground_size), words_(words_for(ground_size), 0) {}

IndexSubset::IndexSubset(std::size_t ground_size, std::initializer_list<std::size_t> elements)
    : IndexSubset(ground_size) {
    for (auto e : elements) insert(e);
}

IndexSubset::IndexSubset(std::size_t ground_size, const std::vector<std::size_t>& elements)
    : IndexSubset(ground_size) {
    for (auto e : elements) insert(e);
}

IndexSubset IndexSubset::from_mask(std::size_t ground_size, std::uint64_t mask) {
    if (ground_size > word_bits)
        throw std::domain_error("IndexSubset::from_mask: ground set larger than 64");
    if (ground_size < word_bits && (mask >> ground_size) != 0)
        throw std::domain_error("IndexSubset::from_mask: mask has bits outside the ground set");
    IndexSubset s(ground_size);
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
}

IndexSubset IndexSubset::full(std::size_t ground_size) {
    IndexSubset s(ground_size);
    std::fill(s.words_.begin(), s.words_.end(), ~word_type{0});
    s.clear_tail();
    return s;
}

std::size_t IndexSubset::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool IndexSubset::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
}

bool IndexSubset::contains(std::size_t i) const noexcept {
    if (i >= ground_size_) return false;
    return (words_[i / word_bits] >> (i % word_bits)) & 1u;
}

void IndexSubset::insert(std::size_t i) {
    if (i >= ground_size_)
        throw std::domain_error("IndexSubset: element " + std::to_string(i) +
                                " outside ground set of size " + std::to_string(ground_size_));
    words_[i / word_bits] |= word_type{1} << (i % word_bits);
}

void IndexSubset::erase(std::size_t i) {
    if (i >= ground_size_) return;
    words_[i / word_bits] &= ~(word_type{1} << (i % word_bits));
}

std::vector<std::size_t> IndexSubset::elements() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        auto w = words_[wi];
        while (w) {
            out.push_back(wi * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::uint64_t IndexSubset::mask() const {
    if (ground_size_ > word_bits)
        throw std::domain_error("IndexSubset::mask: ground set larger than 64");
    return words_.empty() ? 0 : words_[0];
}

IndexSubset& IndexSubset::operator&=(const IndexSubset& other) {
    check_same_ground(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

IndexSubset& IndexSubset::operator|=(const IndexSubset& other) {
    check_same_ground(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

IndexSubset& IndexSubset::operator-=(const IndexSubset& other) {
    check_same_ground(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

IndexSubset IndexSubset::complement() const {
    IndexSubset c = *this;
    for (auto& w : c.words_) w = ~w;
    c.clear_tail();
    return c;
}

bool IndexSubset::is_subset_of(const IndexSubset& other) const {
    check_same_ground(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

bool IndexSubset::intersects(const IndexSubset& other) const {
    check_same_ground(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

std::size_t IndexSubset::intersection_count(const IndexSubset& other) const {
    check_same_ground(other);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
}

std::size_t IndexSubset::difference_count(const IndexSubset& other) const {
    check_same_ground(other);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        c += static_cast<std::size_t>(std::popcount(words_[i] & ~other.words_[i]));
    return c;
}

void IndexSubset::check_same_ground(const IndexSubset& other) const {
    if (ground_size_ != other.ground_size_)
        throw std::domain_error("IndexSubset: ground set sizes differ (" +
                                std::to_string(ground_size_) + " vs " +
                                std::to_string(other.ground_size_) + ")");
}

void IndexSubset::clear_tail() noexcept {
    auto rem = ground_size_ % word_bits;
    if (rem != 0 && !words_.empty()) words_.back() &= (word_type{1} << rem) - 1;
}

std::ostream& operator<<(std::ostream& os, const IndexSubset& s) {
    os << '{';
    bool first = true;
    for (auto e : s.elements()) {
        if (!first) os << ',';
        os << e;
        first = false;
    }
    return os << '}';
}

}  // namespace cfftk
