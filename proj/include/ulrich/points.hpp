#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ulrich/field.hpp"
#include "ulrich/matrix.hpp"
#include "ulrich/monomial.hpp"

namespace ulrich {

/// Finite set of points in P^n over F_p. Each point is stored by its unique
/// normalized representative (first nonzero coordinate scaled to 1); duplicates
/// are silently dropped, insertion order is preserved.
class ProjPointSet {
public:
    ProjPointSet(PrimeField f, std::size_t n) : fld_(f), n_(n) {}

    const PrimeField& field() const noexcept { return fld_; }
    std::size_t ambient_dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return pts_.size(); }
    const std::vector<std::uint32_t>& point(std::size_t i) const { return pts_.at(i); }
    const std::vector<std::vector<std::uint32_t>>& points() const noexcept { return pts_; }

    std::vector<std::uint32_t> normalize(const std::vector<std::uint32_t>& raw) const {
        if (raw.size() != n_ + 1)
            throw std::invalid_argument("ProjPointSet: point has wrong coordinate count");
        std::size_t lead = raw.size();
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (fld_.reduce(raw[i]) != 0) { lead = i; break; }
        }
        if (lead == raw.size()) throw std::invalid_argument("ProjPointSet: zero vector is not a point");
        const std::uint32_t ivt = fld_.inv(fld_.reduce(raw[lead]));
        std::vector<std::uint32_t> out(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) out[i] = fld_.mul(fld_.reduce(raw[i]), ivt);
        return out;
    }

    /// Returns true if the point was new.
    bool add(const std::vector<std::uint32_t>& raw) {
        auto norm = normalize(raw);
        if (!seen_.insert(norm).second) return false;
        pts_.push_back(std::move(norm));
        return true;
    }

    bool contains(const std::vector<std::uint32_t>& raw) const {
        return seen_.count(normalize(raw)) != 0;
    }

    ProjPointSet prefix(std::size_t count) const {
        ProjPointSet out(fld_, n_);
        for (std::size_t i = 0; i < count && i < pts_.size(); ++i) out.add(pts_[i]);
        return out;
    }

    /// Plain-text format: one point per line, n+1 integers, reduced mod p.
    static ProjPointSet parse(PrimeField f, std::istream& in) {
        std::string line;
        std::vector<std::vector<std::int64_t>> rows;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::vector<std::int64_t> coords;
            std::int64_t v;
            while (ls >> v) coords.push_back(v);
            if (coords.empty()) continue;  // blank line
            rows.push_back(std::move(coords));
        }
        if (rows.empty()) throw std::invalid_argument("ProjPointSet::parse: no points in input");
        const std::size_t width = rows.front().size();
        if (width < 2) throw std::invalid_argument("ProjPointSet::parse: points need >= 2 coordinates");
        ProjPointSet out(f, width - 1);
        for (const auto& r : rows) {
            if (r.size() != width)
                throw std::invalid_argument("ProjPointSet::parse: inconsistent coordinate counts");
            std::vector<std::uint32_t> pt(width);
            for (std::size_t i = 0; i < width; ++i) pt[i] = f.from_int(r[i]);
            out.add(pt);
        }
        return out;
    }

    void write(std::ostream& os) const {
        for (const auto& pt : pts_) {
            for (std::size_t i = 0; i < pt.size(); ++i) os << (i ? " " : "") << pt[i];
            os << "\n";
        }
    }

private:
    PrimeField fld_;
    std::size_t n_;
    std::vector<std::vector<std::uint32_t>> pts_;
    std::set<std::vector<std::uint32_t>> seen_;
};

/// Rows = points, columns = degree-t monomials in grevlex order; the entry is
/// the monomial evaluated at the normalized representative.
inline DenseMatrix evaluation_matrix(const ProjPointSet& P, const MonomialBasis& basis) {
    const PrimeField& f = P.field();
    if (basis.nvars() != P.ambient_dim() + 1)
        throw std::invalid_argument("evaluation_matrix: basis/point dimension mismatch");
    DenseMatrix M(f, P.size(), basis.size());
    const int t = basis.degree();
    std::vector<std::vector<std::uint32_t>> powers(P.ambient_dim() + 1);
    for (std::size_t r = 0; r < P.size(); ++r) {
        const auto& pt = P.point(r);
        for (std::size_t i = 0; i < pt.size(); ++i) {
            powers[i].assign(static_cast<std::size_t>(t) + 1, 1);
            for (int e = 1; e <= t; ++e) powers[i][static_cast<std::size_t>(e)] = f.mul(powers[i][static_cast<std::size_t>(e - 1)], pt[i]);
        }
        for (std::size_t c = 0; c < basis.size(); ++c) {
            const auto& e = basis.exponents(c);
            std::uint32_t v = 1;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) v = f.mul(v, powers[i][static_cast<std::size_t>(e[i])]);
            M.set(r, c, v);
        }
    }
    return M;
}

inline DenseMatrix evaluation_matrix(const ProjPointSet& P, int t) {
    if (t < 0) throw std::invalid_argument("evaluation_matrix: negative degree");
    return evaluation_matrix(P, MonomialBasis(P.ambient_dim() + 1, t));
}

/// h_{S/I_Gamma}(t), computed as the rank of the evaluation matrix.
inline std::size_t hilbert_function(const ProjPointSet& P, int t) {
    return rank(evaluation_matrix(P, t));
}

}  // namespace ulrich
