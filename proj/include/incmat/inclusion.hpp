#pragma once

#include <cstdint>
#include <vector>

#include "incmat/combinatorics.hpp"
#include "incmat/linalg.hpp"
#include "incmat/matrix.hpp"

namespace incmat {

/// Parameters of the inclusion matrix A_i^n(m) over a field of characteristic p.
/// Rows are indexed by i-subsets of [m], columns by n-subsets, both in colex order.
struct InclusionParams {
    int m = 0;
    int i = 0;
    int n = 0;
    FieldSpec field = FieldSpec::rationals();

    /// Throws InvalidArgument unless 0 <= i <= n <= m <= kMaxGroundSet.
    void validate() const;

    friend bool operator==(const InclusionParams&, const InclusionParams&) = default;
};

/// Parameters with i <= min(n, m - n). When `transposed` is set, `params`
/// describes A_{m-n}^{m-i}(m), the transpose of the original matrix.
struct NormalizedParams {
    InclusionParams params;
    bool transposed = false;
};

NormalizedParams normalize_params(const InclusionParams& raw);

/// Default ceiling on dense matrix storage: 1 GiB.
inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{1} << 30;

/// Estimated bytes of a dense A_i^n(m) over the params' field.
std::uint64_t dense_bytes(const InclusionParams& params);

/// Dense A_i^n(m). Throws BudgetExceeded when dense_bytes exceeds `budget`.
ExactMatrix build_inclusion_matrix(const InclusionParams& params,
                                   std::uint64_t budget = kDefaultMemoryBudget);

/// Row ranks of the i-subsets of y, strictly increasing: the support of y's column.
std::vector<std::uint64_t> column_of(const InclusionParams& params, const Subset& y);

/// Rank of A_i^n(m) over GF(p) inserting one column at a time into an echelon
/// basis of at most C(m, i) rows. Characteristic 0 is rejected. When given,
/// `basis_bytes` receives the size of the final basis.
std::size_t streaming_rank(const InclusionParams& params, std::uint64_t* basis_bytes = nullptr);

/// Rank through whichever oracle fits: dense elimination when the matrix fits
/// the budget, streaming otherwise.
std::size_t oracle_rank(const InclusionParams& params,
                        std::uint64_t budget = kDefaultMemoryBudget);

}  // namespace incmat
