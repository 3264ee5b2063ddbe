#pragma once

#include <random>

#include "incmat/matrix.hpp"
#include "oracle.hpp"

namespace support {

inline incmat::ExactMatrix to_exact(const oracle::IntMatrix& a, incmat::FieldSpec field) {
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    incmat::ExactMatrix m(field, a.size(), cols);
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, a[r][c]);
    return m;
}

/// Integer entries back out; valid for prime fields and integral rationals.
inline oracle::IntMatrix to_ints(const incmat::ExactMatrix& m) {
    oracle::IntMatrix a(m.rows(), std::vector<long long>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.value(r, c).get_num().get_si();
    return a;
}

inline oracle::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                       long long lo, long long hi, double density = 1.0) {
    std::uniform_int_distribution<long long> value(lo, hi);
    std::bernoulli_distribution keep(density);
    oracle::IntMatrix a(rows, std::vector<long long>(cols, 0));
    for (auto& row : a)
        for (auto& x : row) x = keep(rng) ? value(rng) : 0;
    return a;
}

}  // namespace support
