#pragma once

#include <cstdint>
#include <iosfwd>
#include <iterator>
#include <span>
#include <vector>

#include "incmat/field.hpp"

namespace incmat {

/// Exact binomial coefficient; zero when b < 0 or b > a.
BigInt binomial(std::int64_t a, std::int64_t b);

/// Largest ground set for which subset ranks are guaranteed to fit in 64 bits.
inline constexpr int kMaxGroundSet = 64;

/// C(a, b) as a machine word for index arithmetic; a must not exceed
/// kMaxGroundSet. Zero when b < 0 or b > a.
std::uint64_t binomial_u64(int a, int b);

/// A k-element subset of [m] = {1, ..., m}, stored as its sorted elements.
class Subset {
public:
    Subset() = default;

    /// Validates that elements are strictly increasing and lie in 1..m.
    Subset(int m, std::vector<int> elements);

    int ground() const noexcept { return m_; }
    int size() const noexcept { return static_cast<int>(elements_.size()); }
    std::span<const int> elements() const noexcept { return elements_; }
    int operator[](std::size_t t) const { return elements_[t]; }

    bool contains(int x) const;
    bool is_subset_of(const Subset& other) const;

    friend bool operator==(const Subset&, const Subset&) = default;

private:
    friend class ColexSubsets;
    int m_ = 0;
    std::vector<int> elements_;
};

std::ostream& operator<<(std::ostream& os, const Subset& s);

/// Colexicographic position of a k-subset among all k-subsets of [m].
struct SubsetIndex {
    std::uint64_t rank = 0;
    int k = 0;
    int m = 0;

    friend bool operator==(const SubsetIndex&, const SubsetIndex&) = default;
};

/// rank = sum over 1-based positions t of C(e_t - 1, t).
SubsetIndex subset_rank(const Subset& s);

/// Inverse of subset_rank. Throws InvalidArgument when idx.rank >= C(m, k).
Subset subset_unrank(const SubsetIndex& idx);

/// Colex rank of a sorted element list without constructing a Subset.
std::uint64_t colex_rank(std::span<const int> sorted_elements);

/// All k-subsets of [m] in colexicographic order, generated lazily.
class ColexSubsets {
public:
    ColexSubsets(int m, int k);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Subset;
        using difference_type = std::ptrdiff_t;
        using pointer = const Subset*;
        using reference = const Subset&;

        iterator() = default;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
        }

    private:
        friend class ColexSubsets;
        Subset current_;
        bool done_ = true;
    };

    iterator begin() const;
    iterator end() const { return iterator{}; }

    std::uint64_t count() const { return binomial_u64(m_, k_); }

private:
    int m_;
    int k_;
};

/// subsets_iter: lazily enumerate k-subsets of [m] in colex order.
inline ColexSubsets subsets(int m, int k) { return ColexSubsets(m, k); }

/// True iff p divides C(a, b), decided digit-wise in base p (Lucas). Always
/// false for p = 0. Throws InvalidArgument for non-prime nonzero p or b > a.
bool p_divides_binomial(std::uint64_t p, std::uint64_t a, std::uint64_t b);

/// Dimension of the Specht module for the two-row partition (m - j, j):
/// C(m, j) - C(m, j - 1). Requires 0 <= j <= m / 2.
BigInt specht_dim(int m, int j);

}  // namespace incmat
