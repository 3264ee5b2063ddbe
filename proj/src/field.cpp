#include "incmat/field.hpp"

#include <string>

namespace incmat {

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("dense construction needs " + std::to_string(required) +
                         " bytes, budget is " + std::to_string(budget) +
                         " bytes; use streaming rank or the closed formula"),
      required_(required),
      budget_(budget) {}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses make Miller-Rabin exact below 2^64.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

void require_characteristic(std::uint64_t p) {
    if (p != 0 && !is_prime(p)) {
        throw InvalidArgument("characteristic must be 0 or a prime, got " + std::to_string(p));
    }
}

FieldSpec::FieldSpec(std::uint64_t characteristic) : p_(0) {
    require_characteristic(characteristic);
    if (characteristic > kMaxPrime) {
        throw InvalidArgument("prime characteristic must be below 2^31, got " +
                              std::to_string(characteristic));
    }
    p_ = static_cast<std::uint32_t>(characteristic);
}

std::string FieldSpec::name() const {
    return p_ == 0 ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

}  // namespace incmat
