#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "incmat/matrix.hpp"

namespace incmat {

/// Reduced row-echelon form with the pivot column of each nonzero row.
/// Pivots are chosen column by column from the left, taking the topmost
/// remaining row with a nonzero entry, so the result is canonical.
struct RowEchelon {
    ExactMatrix reduced;  ///< rank x cols, zero rows dropped
    std::vector<std::size_t> pivots;
};

RowEchelon rref(const ExactMatrix& mat);

/// A subspace of field^ambient_dim, held as RREF rows with distinct pivots.
class SubspaceBasis {
public:
    /// The zero subspace.
    SubspaceBasis(FieldSpec field, std::size_t ambient_dim);

    /// Row span of `rows` (need not be independent).
    static SubspaceBasis span_of_rows(const ExactMatrix& rows);

    const FieldSpec& field() const noexcept { return echelon_.reduced.field(); }
    std::size_t ambient_dim() const noexcept { return echelon_.reduced.cols(); }
    std::size_t dim() const noexcept { return echelon_.reduced.rows(); }

    /// Basis vectors as the rows of a dim x ambient_dim matrix.
    const ExactMatrix& vectors() const noexcept { return echelon_.reduced; }
    std::span<const std::size_t> pivots() const noexcept { return echelon_.pivots; }

    bool contains(const ExactVector& v) const;

    friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
        return a.echelon_.reduced == b.echelon_.reduced;
    }

private:
    explicit SubspaceBasis(RowEchelon echelon) : echelon_(std::move(echelon)) {}
    RowEchelon echelon_;
};

/// Exact rank. GF(2) runs on bit-packed rows, odd primes on word residues,
/// characteristic 0 on fraction-free (Bareiss) integer elimination.
std::size_t rank(const ExactMatrix& mat);

/// Right null space: all x with mat * x = 0.
SubspaceBasis kernel_basis(const ExactMatrix& mat);

/// Span of the columns, as a subspace of field^rows.
SubspaceBasis column_space_basis(const ExactMatrix& mat);

/// a ∩ b, from the left kernel of the stacked bases.
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

/// a + b.
SubspaceBasis span_sum(const SubspaceBasis& a, const SubspaceBasis& b);

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
ExactVector mat_vec(const ExactMatrix& mat, const ExactVector& v);

/// Incrementally maintained echelon basis over a prime field. Holds at most
/// `dim` rows of length `dim`; vectors are inserted one at a time.
class EchelonBasis {
public:
    /// Throws InvalidArgument for characteristic 0.
    EchelonBasis(FieldSpec field, std::size_t dim);
    ~EchelonBasis();
    EchelonBasis(EchelonBasis&&) noexcept;
    EchelonBasis& operator=(EchelonBasis&&) noexcept;

    /// Inserts the 0/1 vector with ones at `support`; true if the rank grew.
    bool insert_indicator(std::span<const std::uint64_t> support);
    /// Inserts an arbitrary vector; true if the rank grew.
    bool insert(const ExactVector& v);

    std::size_t rank() const noexcept;
    std::size_t dim() const noexcept { return dim_; }
    /// Bytes held by the basis rows.
    std::uint64_t bytes_used() const noexcept;

private:
    struct Impl;
    std::size_t dim_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace incmat
