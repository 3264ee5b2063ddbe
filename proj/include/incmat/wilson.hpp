#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "incmat/field.hpp"
#include "incmat/inclusion.hpp"

namespace incmat {

struct RankTerm {
    int j = 0;
    bool included = false;  ///< p does not divide C(n - j, i - j)
    BigInt value;           ///< C(m, j) - C(m, j - 1)
};

/// Closed-form rank of A_i^n(m), term by term, over normalized parameters.
struct RankBreakdown {
    InclusionParams raw;
    NormalizedParams normalized;
    std::vector<RankTerm> terms;  ///< j = 0..i of the normalized triple
    BigInt total;
};

/// Sums C(m, j) - C(m, j - 1) over j in 0..i with p not dividing C(n - j, i - j),
/// after normalizing so that i <= min(n, m - n). The j = i term always counts
/// because C(n - i, 0) = 1.
RankBreakdown wilson_rank(const InclusionParams& raw);

enum class TableFormat { csv, json, markdown };

/// Which (n, i) pairs a table row sweep covers for each m.
enum class TripleRule {
    normalized,  ///< 0 <= i <= min(n, m - n)
    all,         ///< 0 <= i <= n <= m
};

struct TableOptions {
    std::uint32_t p = 2;
    int m_min = 1;
    int m_max = 6;
    TripleRule triples = TripleRule::normalized;
    bool with_oracle = true;
    std::uint64_t budget = kDefaultMemoryBudget;
};

struct TableRow {
    RankBreakdown formula;
    std::optional<std::size_t> oracle;

    bool matches() const;
};

/// Rows in order of m, then n, then i, all ascending. Empty when m_min > m_max.
std::vector<TableRow> rank_table_rows(const TableOptions& options);

/// Renders rows. CSV header: m,n,i,p,formula_rank,oracle_rank,match. JSON is an
/// array of row objects that also carries the normalized triple and terms.
void write_rank_table(std::ostream& os, const std::vector<TableRow>& rows, TableFormat format);

/// rank_table: compute rows and render them.
void rank_table(std::ostream& os, const TableOptions& options, TableFormat format);

struct VerifyOptions {
    int max_m = 6;
    std::vector<std::uint32_t> primes{2, 3, 5};
    std::uint64_t budget = kDefaultMemoryBudget;
    /// Harness self-test only: flips the j = 0 inclusion decision in every
    /// formula evaluation so that the sweep must report mismatches.
    bool inject_fault = false;
};

struct Mismatch {
    InclusionParams params;
    BigInt formula;
    std::size_t oracle = 0;
};

struct VerifySummary {
    std::uint64_t cases = 0;
    std::vector<Mismatch> mismatches;
};

/// Compares formula and oracle over all m <= max_m, 0 <= i <= n <= m, p in primes.
/// A prime entry of 0 means characteristic 0.
VerifySummary verify_sweep(const VerifyOptions& options);

}  // namespace incmat
