#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "incmat/field.hpp"

namespace incmat {

/// Canonical representative of an element of GF(p), in [0, p).
using Residue = std::uint32_t;

namespace detail {

/// Flat buffer of field elements: residues for p > 0, reduced rationals for p = 0.
class Entries {
public:
    Entries(FieldSpec field, std::size_t n);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t size() const noexcept;

    bool is_zero(std::size_t i) const;
    bool all_zero() const;
    void set(std::size_t i, long long v);
    void set(std::size_t i, const Rational& v);
    void add(std::size_t i, long long v);
    Rational value(std::size_t i) const;
    std::string str(std::size_t i) const;

    std::span<const Residue> residues() const;
    std::span<Residue> residues();
    std::span<const Rational> rationals() const;
    std::span<Rational> rationals();

    friend bool operator==(const Entries&, const Entries&) = default;

private:
    FieldSpec field_;
    std::variant<std::vector<Residue>, std::vector<Rational>> data_;
};

}  // namespace detail

/// Reduce an integer into the canonical representative for `field`.
Residue reduce_mod(long long v, std::uint32_t p);

/// Reduce a rational into GF(p); throws InvalidArgument when p divides the denominator.
Residue reduce_mod(const Rational& v, std::uint32_t p);

/// Dense vector over a FieldSpec.
class ExactVector {
public:
    ExactVector(FieldSpec field, std::size_t n) : entries_(field, n) {}

    static ExactVector from_integers(FieldSpec field, std::span<const long long> values);
    static ExactVector from_integers(FieldSpec field, std::initializer_list<long long> values) {
        return from_integers(field, std::span<const long long>(values.begin(), values.size()));
    }

    const FieldSpec& field() const noexcept { return entries_.field(); }
    std::size_t size() const noexcept { return entries_.size(); }

    bool is_zero(std::size_t i) const { return entries_.is_zero(i); }
    bool is_zero() const { return entries_.all_zero(); }
    void set(std::size_t i, long long v) { entries_.set(i, v); }
    void set(std::size_t i, const Rational& v) { entries_.set(i, v); }
    void add(std::size_t i, long long v) { entries_.add(i, v); }
    Rational value(std::size_t i) const { return entries_.value(i); }
    std::string entry_string(std::size_t i) const { return entries_.str(i); }

    /// Index of the first nonzero coordinate, or size() when zero.
    std::size_t first_nonzero() const;

    std::span<const Residue> residues() const { return entries_.residues(); }
    std::span<Residue> residues() { return entries_.residues(); }
    std::span<const Rational> rationals() const { return entries_.rationals(); }
    std::span<Rational> rationals() { return entries_.rationals(); }

    friend bool operator==(const ExactVector&, const ExactVector&) = default;

private:
    detail::Entries entries_;
};

/// Dense row-major matrix over a FieldSpec. Entries are always canonical.
class ExactMatrix {
public:
    ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

    static ExactMatrix identity(FieldSpec field, std::size_t n);
    static ExactMatrix from_rows(FieldSpec field,
                                 std::initializer_list<std::initializer_list<long long>> rows);
    /// Stacks vectors as rows; all must share field and length `cols`.
    static ExactMatrix from_vectors(FieldSpec field, std::size_t cols,
                                    std::span<const ExactVector> rows);

    const FieldSpec& field() const noexcept { return entries_.field(); }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool is_zero(std::size_t r, std::size_t c) const { return entries_.is_zero(index(r, c)); }
    bool is_zero() const { return entries_.all_zero(); }
    void set(std::size_t r, std::size_t c, long long v) { entries_.set(index(r, c), v); }
    void set(std::size_t r, std::size_t c, const Rational& v) { entries_.set(index(r, c), v); }
    Rational value(std::size_t r, std::size_t c) const { return entries_.value(index(r, c)); }
    std::string entry_string(std::size_t r, std::size_t c) const {
        return entries_.str(index(r, c));
    }

    ExactVector row(std::size_t r) const;
    ExactVector column(std::size_t c) const;
    ExactMatrix transpose() const;
    /// Rows [first, first + count).
    ExactMatrix row_block(std::size_t first, std::size_t count) const;
    /// Vertical concatenation; fields and column counts must agree.
    static ExactMatrix stack(const ExactMatrix& top, const ExactMatrix& bottom);
    /// Every entry multiplied by an integer.
    ExactMatrix scaled(const BigInt& factor) const;

    std::span<const Residue> residues() const { return entries_.residues(); }
    std::span<Residue> residues() { return entries_.residues(); }
    std::span<const Rational> rationals() const { return entries_.rationals(); }
    std::span<Rational> rationals() { return entries_.rationals(); }

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t index(std::size_t r, std::size_t c) const;

    std::size_t rows_;
    std::size_t cols_;
    detail::Entries entries_;
};

/// Plain-text dump: "rows cols p" then one space-separated row per line.
void write_matrix(std::ostream& os, const ExactMatrix& m);

}  // namespace incmat
