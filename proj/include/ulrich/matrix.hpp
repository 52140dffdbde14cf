#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ulrich/field.hpp"

namespace ulrich {

/// Row-major dense matrix over a prime field. Entries are always reduced.
class DenseMatrix {
public:
    DenseMatrix(PrimeField f, std::size_t rows, std::size_t cols)
        : fld_(f), rows_(rows), cols_(cols), a_(rows * cols, 0u) {}

    const PrimeField& field() const noexcept { return fld_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint32_t at(std::size_t i, std::size_t j) const noexcept { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::uint32_t v) noexcept { a_[i * cols_ + j] = v; }

    const std::uint32_t* row(std::size_t i) const noexcept { return a_.data() + i * cols_; }
    std::uint32_t* row(std::size_t i) noexcept { return a_.data() + i * cols_; }

    static DenseMatrix identity(PrimeField f, std::size_t n) {
        DenseMatrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    DenseMatrix transposed() const {
        DenseMatrix t(fld_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
        return t;
    }

    bool is_zero() const noexcept {
        for (auto v : a_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const DenseMatrix& o) const noexcept {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    PrimeField fld_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

/// Reduced row echelon form. The RREF of a matrix is unique, so this output
/// is deterministic no matter how rows were fed in; pivot columns come out
/// sorted in increasing column order.
struct Echelon {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    DenseMatrix rref;  // rank x cols, fully back-eliminated

    explicit Echelon(PrimeField f, std::size_t cols) : rref(f, 0, cols) {}
};

namespace detail {

/// Row-space accumulator: inserts rows one at a time, keeping a basis in row
/// echelon form (each stored row reduced, leading 1, zeros before its pivot).
/// Eliminations run on uint64 buffers with reduction deferred as long as the
/// field admits it, which is what keeps large ranks affordable.
class RowBasis {
public:
    RowBasis(PrimeField f, std::size_t cols) : fld_(f), cols_(cols) {
        const std::uint64_t pm1 = fld_.modulus() - 1;
        add_limit_ = (~std::uint64_t{0} - pm1) / (pm1 * pm1);
        if (add_limit_ == 0) add_limit_ = 1;
    }

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivot_cols_; }
    const std::vector<std::uint32_t>& basis_row(std::size_t i) const noexcept { return rows_[i]; }

    /// Reduce `w` (uint64 work buffer, arbitrary residues) against the basis
    /// and insert the remainder if nonzero. Returns true if rank grew.
    bool insert(std::vector<std::uint64_t>& w) {
        const std::uint64_t p = fld_.modulus();
        std::size_t adds = 0;
        for (std::size_t bi = 0; bi < rows_.size(); ++bi) {
            const std::size_t pc = pivot_cols_[bi];
            const std::uint32_t c = fld_.reduce(w[pc]);
            if (c == 0) continue;
            const std::uint64_t mult = p - c;
            const std::uint32_t* br = rows_[bi].data();
            for (std::size_t j = pc; j < cols_; ++j) w[j] += mult * br[j];
            if (++adds >= add_limit_) {
                for (std::size_t j = 0; j < cols_; ++j) w[j] = fld_.reduce(w[j]);
                adds = 0;
            }
        }
        std::size_t lead = cols_;
        std::vector<std::uint32_t> red(cols_);
        for (std::size_t j = 0; j < cols_; ++j) {
            red[j] = fld_.reduce(w[j]);
            if (lead == cols_ && red[j] != 0) lead = j;
        }
        if (lead == cols_) return false;
        const std::uint32_t vi = fld_.inv(red[lead]);
        for (std::size_t j = lead; j < cols_; ++j) red[j] = fld_.mul(red[j], vi);
        // keep rows ordered by pivot column
        std::size_t pos = 0;
        while (pos < pivot_cols_.size() && pivot_cols_[pos] < lead) ++pos;
        pivot_cols_.insert(pivot_cols_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(red));
        return true;
    }

    bool insert_reduced_row(const std::uint32_t* r) {
        std::vector<std::uint64_t> w(r, r + cols_);
        return insert(w);
    }

    /// Back-eliminate to the unique RREF.
    Echelon finish() {
        for (std::size_t bi = rows_.size(); bi-- > 0;) {
            const std::size_t pc = pivot_cols_[bi];
            for (std::size_t up = 0; up < bi; ++up) {
                const std::uint32_t c = rows_[up][pc];
                if (c == 0) continue;
                for (std::size_t j = pc; j < cols_; ++j)
                    rows_[up][j] = fld_.sub(rows_[up][j], fld_.mul(c, rows_[bi][j]));
            }
        }
        Echelon e(fld_, cols_);
        e.rank = rows_.size();
        e.pivot_cols = pivot_cols_;
        e.rref = DenseMatrix(fld_, rows_.size(), cols_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) e.rref.set(i, j, rows_[i][j]);
        return e;
    }

private:
    PrimeField fld_;
    std::size_t cols_;
    std::uint64_t add_limit_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivot_cols_;
};

inline RowBasis accumulate(const DenseMatrix& m) {
    RowBasis rb(m.field(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) rb.insert_reduced_row(m.row(i));
    return rb;
}

}  // namespace detail

inline std::size_t rank(const DenseMatrix& m) { return detail::accumulate(m).rank(); }

inline Echelon echelon(const DenseMatrix& m) { return detail::accumulate(m).finish(); }

/// Basis of the right kernel {v : M v = 0}, one vector per non-pivot column,
/// in increasing free-column order.
inline std::vector<std::vector<std::uint32_t>> kernel_basis(const DenseMatrix& m) {
    const Echelon e = echelon(m);
    const PrimeField& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto pc : e.pivot_cols) is_pivot[pc] = true;
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(m.cols() - e.rank);
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<std::uint32_t> v(m.cols(), 0);
        v[fc] = 1;
        for (std::size_t i = 0; i < e.rank; ++i) v[e.pivot_cols[i]] = f.neg(e.rref.at(i, fc));
        out.push_back(std::move(v));
    }
    return out;
}

inline std::vector<std::uint32_t> mat_vec(const DenseMatrix& m, const std::vector<std::uint32_t>& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: dimension mismatch");
    const PrimeField& f = m.field();
    const std::uint64_t pm1 = f.modulus() - 1;
    const std::uint64_t chunk = (~std::uint64_t{0} - pm1) / (pm1 * pm1);
    std::vector<std::uint32_t> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::uint64_t acc = 0;
        std::uint64_t n = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            acc += std::uint64_t{m.at(i, j)} * v[j];
            if (++n >= chunk) { acc = f.reduce(acc); n = 0; }
        }
        out[i] = f.reduce(acc);
    }
    return out;
}

inline DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    const PrimeField& f = a.field();
    const std::uint64_t pm1 = f.modulus() - 1;
    const std::uint64_t chunk = (~std::uint64_t{0} - pm1) / (pm1 * pm1);
    DenseMatrix c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::uint64_t acc = 0;
            std::uint64_t n = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                acc += std::uint64_t{a.at(i, k)} * b.at(k, j);
                if (++n >= chunk) { acc = f.reduce(acc); n = 0; }
            }
            c.set(i, j, f.reduce(acc));
        }
    }
    return c;
}

}  // namespace ulrich
