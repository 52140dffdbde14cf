#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace ulrich {

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// dim S_t for the polynomial ring in `nvars` variables.
inline std::int64_t monomial_count(std::size_t nvars, int deg) {
    return binomial(deg + static_cast<std::int64_t>(nvars) - 1,
                    static_cast<std::int64_t>(nvars) - 1);
}

/// The monomials of a fixed total degree, listed in descending grevlex order
/// (x0 > x1 > ... ; a > b iff the last nonzero entry of a-b is negative).
class MonomialBasis {
public:
    MonomialBasis(std::size_t nvars, int deg) : nvars_(nvars), deg_(deg) {
        if (nvars == 0) throw std::invalid_argument("MonomialBasis: need at least one variable");
        if (deg < 0) throw std::invalid_argument("MonomialBasis: negative degree");
        std::vector<int> cur(nvars, 0);
        gen(0, deg, cur);
        std::sort(exps_.begin(), exps_.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
            for (std::size_t j = a.size(); j-- > 0;) {
                if (a[j] != b[j]) return a[j] < b[j];
            }
            return false;
        });
        for (std::size_t i = 0; i < exps_.size(); ++i) index_[exps_[i]] = i;
    }

    std::size_t nvars() const noexcept { return nvars_; }
    int degree() const noexcept { return deg_; }
    std::size_t size() const noexcept { return exps_.size(); }
    const std::vector<int>& exponents(std::size_t i) const { return exps_.at(i); }

    std::size_t index_of(const std::vector<int>& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) throw std::invalid_argument("MonomialBasis: monomial not in basis");
        return it->second;
    }

    /// Index in the degree+1 basis of this monomial times variable `var`.
    std::size_t times_var(const MonomialBasis& next, std::size_t i, std::size_t var) const {
        std::vector<int> e = exps_.at(i);
        e.at(var) += 1;
        return next.index_of(e);
    }

private:
    void gen(std::size_t pos, int left, std::vector<int>& cur) {
        if (pos + 1 == nvars_) {
            cur[pos] = left;
            exps_.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[pos] = e;
            gen(pos + 1, left - e, cur);
        }
        cur[pos] = 0;
    }

    std::size_t nvars_;
    int deg_;
    std::vector<std::vector<int>> exps_;
    std::map<std::vector<int>, std::size_t> index_;
};

}  // namespace ulrich
