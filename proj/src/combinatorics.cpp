#include "incmat/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <string>

namespace incmat {

BigInt binomial(std::int64_t a, std::int64_t b) {
    if (a < 0) throw InvalidArgument("binomial: top argument must be non-negative");
    if (b < 0 || b > a) return 0;
    BigInt top = static_cast<unsigned long>(a);
    BigInt out;
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(std::min(b, a - b)));
    return out;
}

namespace {

using PascalTable = std::array<std::array<std::uint64_t, kMaxGroundSet + 1>, kMaxGroundSet + 1>;

const PascalTable& pascal() {
    static const PascalTable table = [] {
        PascalTable t{};
        for (int a = 0; a <= kMaxGroundSet; ++a) {
            t[a][0] = 1;
            for (int b = 1; b <= a; ++b) t[a][b] = t[a - 1][b - 1] + (b < a ? t[a - 1][b] : 0);
        }
        return t;
    }();
    return table;
}

}  // namespace

std::uint64_t binomial_u64(int a, int b) {
    if (a < 0 || a > kMaxGroundSet) {
        throw InvalidArgument("binomial_u64: argument " + std::to_string(a) + " out of range");
    }
    if (b < 0 || b > a) return 0;
    return pascal()[a][b];
}

Subset::Subset(int m, std::vector<int> elements) : m_(m), elements_(std::move(elements)) {
    if (m < 0 || m > kMaxGroundSet) {
        throw InvalidArgument("ground set size " + std::to_string(m) + " out of range");
    }
    for (std::size_t t = 0; t < elements_.size(); ++t) {
        int e = elements_[t];
        if (e < 1 || e > m) {
            throw InvalidArgument("subset element " + std::to_string(e) + " not in [1, " +
                                  std::to_string(m) + "]");
        }
        if (t > 0 && elements_[t - 1] >= e) {
            throw InvalidArgument("subset elements must be strictly increasing");
        }
    }
}

bool Subset::contains(int x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool Subset::is_subset_of(const Subset& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                         elements_.end());
}

std::ostream& operator<<(std::ostream& os, const Subset& s) {
    os << '{';
    for (int t = 0; t < s.size(); ++t) os << (t ? "," : "") << s[t];
    return os << '}';
}

std::uint64_t colex_rank(std::span<const int> sorted_elements) {
    std::uint64_t r = 0;
    for (std::size_t t = 0; t < sorted_elements.size(); ++t) {
        r += binomial_u64(sorted_elements[t] - 1, static_cast<int>(t) + 1);
    }
    return r;
}

SubsetIndex subset_rank(const Subset& s) {
    return SubsetIndex{colex_rank(s.elements()), s.size(), s.ground()};
}

Subset subset_unrank(const SubsetIndex& idx) {
    if (idx.k < 0 || idx.k > idx.m || idx.m > kMaxGroundSet) {
        throw InvalidArgument("subset_unrank: invalid (k, m)");
    }
    if (idx.rank >= binomial_u64(idx.m, idx.k)) {
        throw InvalidArgument("subset_unrank: rank " + std::to_string(idx.rank) +
                              " out of range for C(" + std::to_string(idx.m) + ", " +
                              std::to_string(idx.k) + ")");
    }
    std::vector<int> elems(idx.k);
    std::uint64_t r = idx.rank;
    int upper = idx.m;
    // Greedy from the largest position: e_t is the largest e with C(e-1, t) <= r.
    for (int t = idx.k; t >= 1; --t) {
        int e = upper;
        while (binomial_u64(e - 1, t) > r) --e;
        elems[t - 1] = e;
        r -= binomial_u64(e - 1, t);
        upper = e - 1;
    }
    return Subset(idx.m, std::move(elems));
}

ColexSubsets::ColexSubsets(int m, int k) : m_(m), k_(k) {
    if (m < 0 || m > kMaxGroundSet || k < 0 || k > m) {
        throw InvalidArgument("subsets: require 0 <= k <= m <= " + std::to_string(kMaxGroundSet));
    }
}

ColexSubsets::iterator ColexSubsets::begin() const {
    iterator it;
    it.current_.m_ = m_;
    it.current_.elements_.resize(k_);
    for (int t = 0; t < k_; ++t) it.current_.elements_[t] = t + 1;
    it.done_ = false;
    return it;
}

ColexSubsets::iterator& ColexSubsets::iterator::operator++() {
    auto& e = current_.elements_;
    const int k = static_cast<int>(e.size());
    // Bump the first element that has room below its successor, reset the prefix.
    int t = 0;
    while (t < k) {
        int limit = (t + 1 < k) ? e[t + 1] : current_.m_ + 1;
        if (e[t] + 1 < limit) break;
        ++t;
    }
    if (t == k) {
        done_ = true;
        return *this;
    }
    ++e[t];
    for (int s = 0; s < t; ++s) e[s] = s + 1;
    return *this;
}

bool p_divides_binomial(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
    require_characteristic(p);
    if (b > a) throw InvalidArgument("p_divides_binomial: requires b <= a");
    if (p == 0) return false;
    while (b != 0) {
        if (b % p > a % p) return true;
        a /= p;
        b /= p;
    }
    return false;
}

BigInt specht_dim(int m, int j) {
    if (m < 0 || j < 0 || 2 * j > m) {
        throw InvalidArgument("specht_dim: (m - j, j) is not a partition for m=" +
                              std::to_string(m) + ", j=" + std::to_string(j));
    }
    return binomial(m, j) - binomial(m, j - 1);
}

}  // namespace incmat
