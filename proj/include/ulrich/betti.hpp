#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ulrich/ideal.hpp"
#include "ulrich/matrix.hpp"
#include "ulrich/monomial.hpp"

namespace ulrich {

/// Betti diagram of S/I in Macaulay layout: entry(i, q) = beta_{i, i+q}(S/I)
/// at column i, row q. Columns run 0..n+1.
class BettiDiagram {
public:
    BettiDiagram() : ncols_(1) {}
    BettiDiagram(std::size_t ncols, std::vector<std::vector<std::int64_t>> rows)
        : ncols_(ncols), rows_(std::move(rows)) {
        for (const auto& r : rows_)
            if (r.size() != ncols_) throw std::invalid_argument("BettiDiagram: ragged rows");
    }

    std::size_t ncols() const noexcept { return ncols_; }
    std::size_t max_row() const noexcept { return rows_.empty() ? 0 : rows_.size() - 1; }

    std::int64_t entry(std::size_t i, std::size_t q) const noexcept {
        if (q >= rows_.size() || i >= ncols_) return 0;
        return rows_[q][i];
    }

    const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return rows_; }

    bool row_is_zero(std::size_t q) const noexcept {
        if (q >= rows_.size()) return true;
        for (auto v : rows_[q])
            if (v != 0) return false;
        return true;
    }

    std::optional<std::size_t> last_nonzero_row() const noexcept {
        for (std::size_t q = rows_.size(); q-- > 0;)
            if (!row_is_zero(q)) return q;
        return std::nullopt;
    }

    bool operator==(const BettiDiagram& o) const noexcept {
        return ncols_ == o.ncols_ && rows_ == o.rows_;
    }

    /// Plain text array, "-" for zero entries; all-zero trailing columns are
    /// trimmed from the printout.
    std::string text() const {
        std::size_t show = ncols_;
        while (show > 1) {
            bool zero = true;
            for (const auto& r : rows_)
                if (r[show - 1] != 0) { zero = false; break; }
            if (!zero) break;
            --show;
        }
        std::vector<std::size_t> width(show, 1);
        for (const auto& r : rows_)
            for (std::size_t i = 0; i < show; ++i)
                width[i] = std::max(width[i], std::to_string(r[i]).size());
        std::ostringstream os;
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < show; ++i) {
                const std::string cell = r[i] == 0 ? "-" : std::to_string(r[i]);
                os << (i ? "  " : "") << std::string(width[i] - cell.size(), ' ') << cell;
            }
            os << "\n";
        }
        return os.str();
    }

private:
    std::size_t ncols_;
    std::vector<std::vector<std::int64_t>> rows_;
};

/// Graded Betti numbers of S/I as homology of Koszul strands
///   wedge^{i+1} V ox (S/I)_{q-1} -> wedge^i V ox (S/I)_q -> wedge^{i-1} V ox (S/I)_{q+1}
/// with q = j - i, computed as dim(middle) - rank(in) - rank(out). Strand map
/// ranks are shared between adjacent entries and cached.
class KoszulEngine {
public:
    explicit KoszulEngine(const GradedIdealTruncation& I) : I_(&I) {
        const auto nv = I.nvars();
        subsets_.resize(nv + 2);
        for (std::size_t card = 0; card <= nv + 1; ++card) {
            std::vector<std::size_t> cur;
            gen_subsets(0, card, nv, cur, subsets_[card]);
        }
    }

    const GradedIdealTruncation& truncation() const noexcept { return *I_; }

    /// The strand differential from wedge^i V ox (S/I)_q, as a matrix acting
    /// on row vectors; empty domain or codomain collapse to a 0x0 matrix.
    DenseMatrix strand_map(int i, int q) const {
        const auto& I = *I_;
        const auto nv = I.nvars();
        if (i < 1 || static_cast<std::size_t>(i) > nv || q < 0 || q + 1 > I.truncation_degree())
            return DenseMatrix(I.field(), 0, 0);
        const std::size_t hq = I.hilb(q);
        const std::size_t hq1 = I.hilb(q + 1);
        const auto& dom = subsets_[static_cast<std::size_t>(i)];
        const auto& cod = subsets_[static_cast<std::size_t>(i) - 1];
        if (hq == 0 || hq1 == 0 || dom.empty() || cod.empty())
            return DenseMatrix(I.field(), dom.size() * hq, cod.size() * hq1);
        std::map<std::vector<std::size_t>, std::size_t> cod_index;
        for (std::size_t b = 0; b < cod.size(); ++b) cod_index[cod[b]] = b;
        const PrimeField& f = I.field();
        DenseMatrix M(f, dom.size() * hq, cod.size() * hq1);
        for (std::size_t a = 0; a < dom.size(); ++a) {
            for (std::size_t pos = 0; pos < dom[a].size(); ++pos) {
                const std::size_t var = dom[a][pos];
                std::vector<std::size_t> rest;
                rest.reserve(dom[a].size() - 1);
                for (std::size_t x : dom[a])
                    if (x != var) rest.push_back(x);
                const std::size_t b = cod_index.at(rest);
                const bool negative = (pos % 2 == 1);
                const DenseMatrix& mul = I.mult_map(q, var);
                for (std::size_t r = 0; r < hq; ++r)
                    for (std::size_t c = 0; c < hq1; ++c) {
                        const std::uint32_t v = negative ? f.neg(mul.at(r, c)) : mul.at(r, c);
                        if (v) M.set(a * hq + r, b * hq1 + c, f.add(M.at(a * hq + r, b * hq1 + c), v));
                    }
            }
        }
        return M;
    }

    std::size_t strand_rank(int i, int q) {
        const auto nv = static_cast<int>(I_->nvars());
        if (i < 1 || i > nv || q < 0) return 0;
        const auto key = std::make_pair(i, q);
        auto it = rank_cache_.find(key);
        if (it != rank_cache_.end()) return it->second;
        const std::size_t r = rank(strand_map(i, q));
        rank_cache_[key] = r;
        return r;
    }

    /// beta_{i,j}(S/I); needs all three neighbor degrees within truncation,
    /// i.e. j - i + 1 <= T.
    std::size_t betti(int i, int j) {
        const auto& I = *I_;
        const int q = j - i;
        if (i < 0 || static_cast<std::size_t>(i) > I.nvars() + 1)
            throw std::out_of_range("koszul_betti: column out of range");
        if (q < 0) return 0;
        if (q + 1 > I.truncation_degree())
            throw std::out_of_range("koszul_betti: internal degree outside truncation");
        const std::size_t mid =
            subsets_[static_cast<std::size_t>(i)].size() * I.hilb(q);
        const std::size_t in = strand_rank(i + 1, q - 1);
        const std::size_t out = strand_rank(i, q);
        if (mid < in + out)
            throw std::logic_error("koszul_betti: negative homology dimension (corrupt truncation)");
        return mid - in - out;
    }

private:
    static void gen_subsets(std::size_t start, std::size_t left, std::size_t n,
                            std::vector<std::size_t>& cur,
                            std::vector<std::vector<std::size_t>>& out) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = start; v + left <= n; ++v) {
            cur.push_back(v);
            gen_subsets(v + 1, left - 1, n, cur, out);
            cur.pop_back();
        }
    }

    const GradedIdealTruncation* I_;
    std::vector<std::vector<std::vector<std::size_t>>> subsets_;  // by cardinality
    std::map<std::pair<int, int>, std::size_t> rank_cache_;
};

inline std::size_t koszul_betti(const GradedIdealTruncation& I, int i, int j) {
    KoszulEngine eng(I);
    return eng.betti(i, j);
}

/// Full diagram, columns 0..n+1, rows 0..max_row.
inline BettiDiagram betti_diagram(const GradedIdealTruncation& I, int max_row) {
    if (max_row < 0 || max_row + 1 > I.truncation_degree())
        throw std::out_of_range("betti_diagram: truncation too small for requested rows");
    KoszulEngine eng(I);
    const std::size_t ncols = I.nvars() + 1;
    std::vector<std::vector<std::int64_t>> rows;
    for (int q = 0; q <= max_row; ++q) {
        std::vector<std::int64_t> row(ncols);
        for (std::size_t i = 0; i < ncols; ++i)
            row[i] = static_cast<std::int64_t>(eng.betti(static_cast<int>(i), static_cast<int>(i) + q));
        rows.push_back(std::move(row));
    }
    return BettiDiagram(ncols, std::move(rows));
}

/// Diagram computed upward until two consecutive all-zero rows certify that
/// the resolution has been exhausted. Returns nothing if the truncation is
/// too small to reach that point.
inline std::optional<BettiDiagram> betti_diagram_until_stable(const GradedIdealTruncation& I) {
    KoszulEngine eng(I);
    const std::size_t ncols = I.nvars() + 1;
    std::vector<std::vector<std::int64_t>> rows;
    int zero_run = 0;
    for (int q = 0; q + 1 <= I.truncation_degree(); ++q) {
        std::vector<std::int64_t> row(ncols);
        bool zero = true;
        for (std::size_t i = 0; i < ncols; ++i) {
            row[i] = static_cast<std::int64_t>(eng.betti(static_cast<int>(i), static_cast<int>(i) + q));
            if (row[i] != 0) zero = false;
        }
        rows.push_back(std::move(row));
        zero_run = zero ? zero_run + 1 : 0;
        if (q >= 1 && zero_run >= 2) return BettiDiagram(ncols, std::move(rows));
    }
    return std::nullopt;
}

/// reg(I) = index of the last nonzero row of the S/I diagram, plus one.
/// The diagram must extend beyond its last nonzero row.
inline std::size_t regularity(const BettiDiagram& dg) {
    if (!dg.row_is_zero(dg.max_row()))
        throw std::runtime_error("regularity: diagram not stabilized (last computed row nonzero)");
    const auto last = dg.last_nonzero_row();
    if (!last) throw std::runtime_error("regularity: diagram is identically zero");
    return *last + 1;
}

struct MrcViolation {
    std::size_t i;
    std::size_t q;
    std::int64_t b_upper;  // b_{i+1, q-1}
    std::int64_t b_lower;  // b_{i, q}
};

struct MrcVerdict {
    bool holds = true;
    std::vector<MrcViolation> violations;
    std::size_t reg_used = 0;
};

/// Minimal Resolution Conjecture test for a point diagram against the curve
/// regularity: for every column i >= 1 and row q >= reg_C + 1 the entries
/// b_{i+1,q-1} and b_{i,q} may not both be nonzero.
inline MrcVerdict mrc_check(const BettiDiagram& dgGamma, std::size_t reg_curve) {
    MrcVerdict v;
    v.reg_used = reg_curve;
    for (std::size_t q = reg_curve + 1; q <= dgGamma.max_row(); ++q) {
        for (std::size_t i = 1; i + 1 < dgGamma.ncols() + 1; ++i) {
            const std::int64_t upper = dgGamma.entry(i + 1, q - 1);
            const std::int64_t lower = dgGamma.entry(i, q);
            if (upper != 0 && lower != 0) v.violations.push_back({i, q, upper, lower});
        }
    }
    v.holds = v.violations.empty();
    return v;
}

}  // namespace ulrich
