#include "incmat/inclusion.hpp"

#include <string>

namespace incmat {

void InclusionParams::validate() const {
    if (!(0 <= i && i <= n && n <= m && m <= kMaxGroundSet)) {
        throw InvalidArgument("inclusion parameters must satisfy 0 <= i <= n <= m <= " +
                              std::to_string(kMaxGroundSet) + "; got m=" + std::to_string(m) +
                              " n=" + std::to_string(n) + " i=" + std::to_string(i));
    }
}

NormalizedParams normalize_params(const InclusionParams& raw) {
    raw.validate();
    if (raw.i <= raw.m - raw.n) return NormalizedParams{raw, false};
    // A_i^n(m)^T = A_{m-n}^{m-i}(m)
    InclusionParams t{raw.m, raw.m - raw.n, raw.m - raw.i, raw.field};
    return NormalizedParams{t, true};
}

std::uint64_t dense_bytes(const InclusionParams& params) {
    params.validate();
    const std::uint64_t entry = params.field.is_rational() ? sizeof(Rational) : sizeof(Residue);
    const unsigned __int128 total = static_cast<unsigned __int128>(binomial_u64(params.m, params.i)) *
                                    binomial_u64(params.m, params.n) * entry;
    if (total > ~std::uint64_t{0}) return ~std::uint64_t{0};
    return static_cast<std::uint64_t>(total);
}

ExactMatrix build_inclusion_matrix(const InclusionParams& params, std::uint64_t budget) {
    const std::uint64_t need = dense_bytes(params);
    if (need > budget) throw BudgetExceeded(need, budget);
    const std::size_t rows = binomial_u64(params.m, params.i);
    const std::size_t cols = binomial_u64(params.m, params.n);
    ExactMatrix a(params.field, rows, cols);
    std::size_t c = 0;
    for (const Subset& y : subsets(params.m, params.n)) {
        for (std::uint64_t r : column_of(params, y)) a.set(r, c, 1);
        ++c;
    }
    return a;
}

std::vector<std::uint64_t> column_of(const InclusionParams& params, const Subset& y) {
    params.validate();
    if (y.size() != params.n || y.ground() != params.m) {
        throw InvalidArgument("column_of: expected an " + std::to_string(params.n) +
                              "-subset of [" + std::to_string(params.m) + "]");
    }
    // Enumerating position-subsets of y in colex order yields the i-subsets of
    // y in colex order too, since y is sorted.
    std::vector<std::uint64_t> out;
    out.reserve(binomial_u64(params.n, params.i));
    std::vector<int> chosen(params.i);
    for (const Subset& positions : subsets(params.n, params.i)) {
        for (int t = 0; t < params.i; ++t) chosen[t] = y[positions[t] - 1];
        out.push_back(colex_rank(chosen));
    }
    return out;
}

std::size_t streaming_rank(const InclusionParams& params, std::uint64_t* basis_bytes) {
    params.validate();
    if (params.field.is_rational()) {
        throw InvalidArgument("streaming rank is not available in characteristic 0");
    }
    EchelonBasis basis(params.field, binomial_u64(params.m, params.i));
    for (const Subset& y : subsets(params.m, params.n)) {
        basis.insert_indicator(column_of(params, y));
        if (basis.rank() == basis.dim()) break;
    }
    if (basis_bytes) *basis_bytes = basis.bytes_used();
    return basis.rank();
}

std::size_t oracle_rank(const InclusionParams& params, std::uint64_t budget) {
    if (dense_bytes(params) <= budget) return rank(build_inclusion_matrix(params, budget));
    return streaming_rank(params);
}

}  // namespace incmat
