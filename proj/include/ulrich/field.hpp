#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ulrich {

/// Arithmetic context for a prime field F_p with p an odd prime below 2^31.
///
/// Values are plain uint32_t in [0, p); every operation returns a reduced
/// value. Reduction of 64-bit intermediates uses a precomputed Barrett
/// constant, so the hot paths never execute a hardware division.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p = 32003) : p_(p) {
        if (p < 3 || p % 2 == 0 || p >= (1ull << 31) || !is_prime(p))
            throw std::invalid_argument("PrimeField: modulus must be an odd prime < 2^31, got " +
                                        std::to_string(p));
        barrett_ = ~std::uint64_t{0} / p;  // floor(2^64 / p), as (2^64-1)/p == floor for p not a power of 2
    }

    std::uint64_t modulus() const noexcept { return p_; }

    /// Reduce any 64-bit value mod p.
    std::uint32_t reduce(std::uint64_t x) const noexcept {
        std::uint64_t q = static_cast<std::uint64_t>((static_cast<__uint128_t>(x) * barrett_) >> 64);
        std::uint64_t r = x - q * p_;
        if (r >= p_) r -= p_;
        if (r >= p_) r -= p_;
        return static_cast<std::uint32_t>(r);
    }

    /// Reduce a signed value (e.g. lattice data) into [0, p).
    std::uint32_t from_int(std::int64_t x) const noexcept {
        std::int64_t m = x % static_cast<std::int64_t>(p_);
        if (m < 0) m += static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(m);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint64_t s = std::uint64_t{a} + b;
        if (s >= p_) s -= p_;
        return static_cast<std::uint32_t>(s);
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
        return a >= b ? a - b : static_cast<std::uint32_t>(a + p_ - b);
    }

    std::uint32_t neg(std::uint32_t a) const noexcept {
        return a == 0 ? 0 : static_cast<std::uint32_t>(p_ - a);
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return reduce(std::uint64_t{a} * b);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept {
        std::uint32_t r = 1;
        std::uint32_t base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("PrimeField::inv: division by zero");
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(t);
    }

    bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

    static bool is_prime(std::uint64_t n) noexcept {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (std::uint64_t q = 3; q * q <= n; q += 2)
            if (n % q == 0) return false;
        return true;
    }

private:
    std::uint64_t p_;
    std::uint64_t barrett_;
};

}  // namespace ulrich
