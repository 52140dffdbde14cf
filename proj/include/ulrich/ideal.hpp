#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ulrich/matrix.hpp"
#include "ulrich/monomial.hpp"
#include "ulrich/points.hpp"
#include "ulrich/rng.hpp"

namespace ulrich {

/// Degree-by-degree truncation of a homogeneous ideal I in S = F_p[x_0..x_n]:
/// for each t <= T the reduced echelon basis of I_t over the grevlex monomial
/// basis, the monomial complement spanning (S/I)_t, and the multiplication
/// maps (S/I)_t -> (S/I)_{t+1} by each variable.
class GradedIdealTruncation {
public:
    GradedIdealTruncation(PrimeField f, std::size_t n, int T) : fld_(f), n_(n), T_(T) {
        if (T < 1) throw std::invalid_argument("GradedIdealTruncation: T must be >= 1");
    }

    const PrimeField& field() const noexcept { return fld_; }
    std::size_t ambient_dim() const noexcept { return n_; }
    std::size_t nvars() const noexcept { return n_ + 1; }
    int truncation_degree() const noexcept { return T_; }

    std::int64_t dim_S(int t) const { return t < 0 ? 0 : monomial_count(nvars(), t); }

    std::size_t hilb(int t) const {
        if (t < 0) return 0;
        return piece(t).quotient_cols.size();
    }

    std::size_t ideal_dim(int t) const { return piece(t).ideal.rank; }

    const MonomialBasis& basis(int t) const { return piece(t).basis; }
    const Echelon& ideal_piece(int t) const { return piece(t).ideal; }
    const std::vector<std::size_t>& quotient_cols(int t) const { return piece(t).quotient_cols; }

    /// Class of the `idx`-th degree-t monomial in the quotient basis.
    std::vector<std::uint32_t> monomial_class(int t, std::size_t idx) const {
        const Piece& pc = piece(t);
        std::vector<std::uint32_t> v(pc.quotient_cols.size(), 0);
        const auto it = pc.pivot_row.find(idx);
        if (it == pc.pivot_row.end()) {
            v[pc.quotient_pos.at(idx)] = 1;
        } else {
            const std::size_t row = it->second;
            for (std::size_t a = 0; a < pc.quotient_cols.size(); ++a)
                v[a] = fld_.neg(pc.ideal.rref.at(row, pc.quotient_cols[a]));
        }
        return v;
    }

    /// Multiplication by x_var as a hilb(t) x hilb(t+1) matrix (t < T).
    const DenseMatrix& mult_map(int t, std::size_t var) const {
        if (t < 0 || t >= T_) throw std::out_of_range("mult_map: degree out of truncation range");
        return pieces_.at(static_cast<std::size_t>(t)).mult.at(var);
    }

    /// Build from an explicit finite point set: I_t = kernel of evaluation.
    static GradedIdealTruncation from_points(const ProjPointSet& P, int T) {
        GradedIdealTruncation I(P.field(), P.ambient_dim(), T);
        for (int t = 0; t <= T; ++t) I.pieces_.push_back(make_piece(P, t));
        I.link_mult_maps();
        return I;
    }

    /// Point generator contract: (count, seed) -> at least `count` distinct
    /// points, deterministic per seed.
    using PointSampler = std::function<ProjPointSet(std::size_t, std::uint64_t)>;

    /// Build the truncated ideal of a curve from sampled points. Uses
    /// 3*dim S_T points plus a batch of dim S_T more as a saturation
    /// certificate: every kernel dimension must be unchanged by the extra
    /// batch. On certificate failure the sampling is reseeded, with a hard
    /// error after `attempts` tries.
    static GradedIdealTruncation from_sampler(PrimeField f, std::size_t n, int T,
                                              const PointSampler& sampler, std::uint64_t seed,
                                              int attempts = 3) {
        GradedIdealTruncation dummy(f, n, T);
        const auto need = static_cast<std::size_t>(3 * dummy.dim_S(T));
        const auto extra = static_cast<std::size_t>(dummy.dim_S(T));
        for (int att = 0; att < attempts; ++att) {
            const std::uint64_t s = att == 0 ? seed : derive_seed(seed, 0x5a7u + static_cast<std::uint64_t>(att));
            ProjPointSet all = sampler(need + extra, s);
            if (all.size() < need + extra)
                throw std::runtime_error("from_sampler: sampler returned too few points");
            const ProjPointSet head = all.prefix(need);
            bool certified = true;
            GradedIdealTruncation I(f, n, T);
            for (int t = 0; t <= T; ++t) {
                I.pieces_.push_back(make_piece(all, t));
                const std::size_t h_head = rank(evaluation_matrix(head, I.pieces_.back().basis));
                const std::size_t h_all = I.pieces_.back().quotient_cols.size();
                if (h_head != h_all) { certified = false; break; }
            }
            if (!certified) continue;
            I.link_mult_maps();
            return I;
        }
        throw std::runtime_error("from_sampler: saturation certificate failed after " +
                                 std::to_string(attempts) + " attempts");
    }

private:
    struct Piece {
        MonomialBasis basis;
        Echelon ideal;
        std::vector<std::size_t> quotient_cols;           // monomial indices spanning (S/I)_t
        std::map<std::size_t, std::size_t> quotient_pos;  // monomial index -> position
        std::map<std::size_t, std::size_t> pivot_row;     // pivot monomial index -> RREF row
        std::vector<DenseMatrix> mult;                    // one per variable, filled by link
    };

    const Piece& piece(int t) const {
        if (t < 0 || t > T_) throw std::out_of_range("GradedIdealTruncation: degree out of range");
        return pieces_.at(static_cast<std::size_t>(t));
    }

    static Piece make_piece(const ProjPointSet& P, int t) {
        MonomialBasis basis(P.ambient_dim() + 1, t);
        const DenseMatrix ev = evaluation_matrix(P, basis);
        const auto kb = kernel_basis(ev);
        DenseMatrix gen(P.field(), kb.size(), basis.size());
        for (std::size_t i = 0; i < kb.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) gen.set(i, j, kb[i][j]);
        Piece pc{std::move(basis), echelon(gen), {}, {}, {}, {}};
        std::vector<bool> is_pivot(pc.basis.size(), false);
        for (std::size_t r = 0; r < pc.ideal.pivot_cols.size(); ++r) {
            is_pivot[pc.ideal.pivot_cols[r]] = true;
            pc.pivot_row[pc.ideal.pivot_cols[r]] = r;
        }
        for (std::size_t c = 0; c < pc.basis.size(); ++c) {
            if (!is_pivot[c]) {
                pc.quotient_pos[c] = pc.quotient_cols.size();
                pc.quotient_cols.push_back(c);
            }
        }
        return pc;
    }

    void link_mult_maps() {
        for (int t = 0; t < T_; ++t) {
            Piece& cur = pieces_[static_cast<std::size_t>(t)];
            const Piece& nxt = pieces_[static_cast<std::size_t>(t) + 1];
            for (std::size_t var = 0; var < nvars(); ++var) {
                DenseMatrix M(fld_, cur.quotient_cols.size(), nxt.quotient_cols.size());
                for (std::size_t i = 0; i < cur.quotient_cols.size(); ++i) {
                    const std::size_t target = cur.basis.times_var(nxt.basis, cur.quotient_cols[i], var);
                    const auto cls = monomial_class_of(nxt, target);
                    for (std::size_t j = 0; j < cls.size(); ++j) M.set(i, j, cls[j]);
                }
                cur.mult.push_back(std::move(M));
            }
        }
    }

    std::vector<std::uint32_t> monomial_class_of(const Piece& pc, std::size_t idx) const {
        std::vector<std::uint32_t> v(pc.quotient_cols.size(), 0);
        const auto it = pc.pivot_row.find(idx);
        if (it == pc.pivot_row.end()) {
            v[pc.quotient_pos.at(idx)] = 1;
        } else {
            for (std::size_t a = 0; a < pc.quotient_cols.size(); ++a)
                v[a] = fld_.neg(pc.ideal.rref.at(it->second, pc.quotient_cols[a]));
        }
        return v;
    }

    PrimeField fld_;
    std::size_t n_;
    int T_;
    std::vector<Piece> pieces_;
};

/// dim I_t for a set of points, mostly a convenience for callers and tests.
inline GradedIdealTruncation ideal_truncation_of_points(const ProjPointSet& P, int T) {
    return GradedIdealTruncation::from_points(P, T);
}

inline GradedIdealTruncation ideal_truncation_of_curve(PrimeField f, std::size_t n, int T,
                                                       const GradedIdealTruncation::PointSampler& sampler,
                                                       std::uint64_t seed, int attempts = 3) {
    return GradedIdealTruncation::from_sampler(f, n, T, sampler, seed, attempts);
}

}  // namespace ulrich
