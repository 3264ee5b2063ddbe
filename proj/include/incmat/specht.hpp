#pragma once

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "incmat/combinatorics.hpp"
#include "incmat/inclusion.hpp"
#include "incmat/matrix.hpp"

namespace incmat {

/// An arrangement of [m] in two rows. Columns pair first_row[c] with
/// second_row[c]. The second row may be longer than the first, so shapes such
/// as (m - n, n) with n > m - n are representable.
class TwoRowTableau {
public:
    /// Throws InvalidArgument unless the rows together hold each of 1..m once.
    TwoRowTableau(std::vector<int> first_row, std::vector<int> second_row);

    int ground() const noexcept { return static_cast<int>(first_.size() + second_.size()); }
    std::span<const int> first_row() const noexcept { return first_; }
    std::span<const int> second_row() const noexcept { return second_; }

    /// Number of full columns: min of the two row lengths.
    int depth() const noexcept { return static_cast<int>(std::min(first_.size(), second_.size())); }

    /// The tabloid {t}, i.e. the set of second-row entries.
    Subset tabloid() const;

    /// Moves the last (second-row length - j) entries of the second row, in
    /// order, to the end of the first row.
    TwoRowTableau moved(int j) const;

    friend bool operator==(const TwoRowTableau&, const TwoRowTableau&) = default;

private:
    std::vector<int> first_;
    std::vector<int> second_;
};

std::ostream& operator<<(std::ostream& os, const TwoRowTableau& t);

struct Transposition {
    int top;
    int bottom;

    friend bool operator==(const Transposition&, const Transposition&) = default;
};

/// Generators of the j-column stabiliser: column c swaps first_row[c] with second_row[c].
std::vector<Transposition> stabilizer_transpositions(const TwoRowTableau& t, int j);

/// An element of the permutation module M^(m-k, k): coefficients indexed by
/// the colex rank of k-subsets of [m].
class ModuleVector {
public:
    ModuleVector(FieldSpec field, int m, int k);
    ModuleVector(int m, int k, ExactVector coeffs);

    /// The basis vector of a single tabloid.
    static ModuleVector tabloid(FieldSpec field, const Subset& second_row);

    const FieldSpec& field() const noexcept { return coeffs_.field(); }
    int ground() const noexcept { return m_; }
    int subset_size() const noexcept { return k_; }
    const ExactVector& coeffs() const noexcept { return coeffs_; }

    Rational coefficient(const Subset& s) const;
    void add(const Subset& s, long long delta);
    bool is_zero() const { return coeffs_.is_zero(); }

    friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

private:
    int m_;
    int k_;
    ExactVector coeffs_;
};

/// e^j_t: signed sum over the subsets S of the first j columns of the tabloid
/// obtained by swapping the entries of every column in S, sign (-1)^|S|.
ModuleVector polytabloid(const TwoRowTableau& t, int j, FieldSpec field);

/// psi_j(X) = sum of the j-subsets of X, extended linearly; the matrix is
/// A_j^k(m). psi_0 lands in the one-dimensional M^(m).
ModuleVector psi_apply(const ModuleVector& v, int j);

struct PsiCounterexample {
    Subset tabloid;
    std::string expected;
    std::string actual;
};

struct PsiVerdict {
    bool pass = true;
    std::optional<PsiCounterexample> counterexample;
};

/// For k < j checks psi_k(e^j_t) = 0; for k = j checks psi_j(e^j_t) = e^j_{t'}
/// with t' = t.moved(j). Requires k <= j <= t.depth().
PsiVerdict check_psi_on_polytabloid(const TwoRowTableau& t, int j, int k, FieldSpec field);

enum class SpanFamily {
    /// One tableau per jj-subset: second row ascending, column heads the
    /// smallest remaining elements in ascending order.
    canonical,
    /// Every pairing of the second row with jj distinct first-row elements.
    all_column_heads,
};

/// Rank of the span of the jj-polytabloids in M^(m-jj, jj). Requires 0 <= 2 jj <= m.
std::size_t specht_span_rank(int m, int jj, FieldSpec field,
                             SpanFamily family = SpanFamily::canonical);

struct FiltrationLayer {
    int j = 0;
    std::size_t dim_P = 0;  ///< dim of P_j = P ∩ ker psi_0 ∩ ... ∩ ker psi_{j-1}
    std::size_t dim_L = 0;  ///< dim of psi_j(P_j)
    BigInt predicted_L;     ///< specht_dim(m, j) when included, else 0
    bool included = false;  ///< p does not divide C(n - j, i - j)
};

struct FiltrationReport {
    InclusionParams params;
    std::vector<FiltrationLayer> layers;
    std::size_t total = 0;  ///< sum of dim_L
    BigInt formula_total;

    /// Every layer matches its prediction and the layers add up to the formula.
    bool match() const;
};

/// Computes the column space P of A_i^n(m) and its filtration by the kernels
/// of psi_0, ..., psi_{i-1}, intersected in increasing order. Requires
/// i <= min(n, m - n). Throws std::logic_error if a structural invariant fails
/// (dims non-increasing, dim P_0 = rank, layers summing to dim P_0).
FiltrationReport filtration_audit(const InclusionParams& params,
                                  std::uint64_t budget = kDefaultMemoryBudget);

/// {m,n,i,p,layers:[{j,dim_P,dim_L,predicted_L,included}],total,formula_total,match}
void write_filtration_json(std::ostream& os, const FiltrationReport& report);

}  // namespace incmat
