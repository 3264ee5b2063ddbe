#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace incmat {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an argument violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a dense construction would exceed the configured memory budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget);

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

/// Deterministic primality test; sufficient for any 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// A field identified by its characteristic: 0 means the rationals, otherwise
/// GF(p) for a prime p < 2^31. Ranks over extension fields agree with the
/// prime field of the same characteristic, so no extension fields exist here.
class FieldSpec {
public:
    static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

    /// Throws InvalidArgument unless p is 0 or a prime below 2^31.
    explicit FieldSpec(std::uint64_t characteristic);

    static FieldSpec rationals() { return FieldSpec(0); }

    std::uint32_t characteristic() const noexcept { return p_; }
    bool is_rational() const noexcept { return p_ == 0; }
    bool is_gf2() const noexcept { return p_ == 2; }

    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    std::uint32_t p_;
};

/// Throws InvalidArgument unless p is 0 or prime. Used by operations that
/// accept a bare characteristic.
void require_characteristic(std::uint64_t p);

}  // namespace incmat
