#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ulrich {

/// Exact rational on int64, just enough for the Chern-class bookkeeping
/// (denominators here are always 1, 2 or 4).
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}  // NOLINT: implicit by design
    Rat(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_integer() const noexcept { return den == 1; }

    friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
    friend bool operator==(Rat a, Rat b) noexcept { return a.num == b.num && a.den == b.den; }

    double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        return is_integer() ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace ulrich
