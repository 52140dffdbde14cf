#pragma once

// Independent Betti-number oracle: builds the minimal free resolution of S/I
// explicitly, module by module, by linear algebra on graded pieces. New
// generators at degree t are the complement of V * K_{t-1} inside K_t; the
// next syzygy module is the degree-wise kernel of the induced map of free
// modules. No Koszul strand is ever formed, so agreement with the library's
// koszul_betti is a genuine cross-check.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ulrich/ideal.hpp"
#include "ulrich/matrix.hpp"
#include "ulrich/monomial.hpp"

namespace testsupport {

class ResolutionOracle {
public:
    ResolutionOracle(const ulrich::GradedIdealTruncation& I, int max_deg)
        : f_(I.field()), nv_(I.nvars()), max_deg_(max_deg) {
        if (max_deg > I.truncation_degree())
            throw std::invalid_argument("ResolutionOracle: max_deg beyond truncation");
        for (int t = 0; t <= max_deg; ++t) bases_.emplace_back(nv_, t);
        beta_[{0, 0}] = 1;

        // F_0 = S; K_0 = I, pieces straight from the truncation
        Module F;
        F.gen_degs = {0};
        F.gen_images = {};  // unused for F_0
        std::vector<std::vector<Vec>> K(static_cast<std::size_t>(max_deg) + 1);
        for (int t = 0; t <= max_deg; ++t) {
            const auto& ech = I.ideal_piece(t);
            for (std::size_t r = 0; r < ech.rank; ++r) {
                Vec v(bases_[static_cast<std::size_t>(t)].size());
                for (std::size_t c = 0; c < v.size(); ++c) v[c] = ech.rref.at(r, c);
                K[static_cast<std::size_t>(t)].push_back(std::move(v));
            }
        }

        for (int i = 1; i <= static_cast<int>(nv_) + 2; ++i) {
            Module Fnext;
            bool any = false;
            for (int t = 0; t <= max_deg_; ++t) {
                ulrich::detail::RowBasis span(f_, component_dim(F, t));
                if (t >= 1)
                    for (const auto& v : K[static_cast<std::size_t>(t - 1)])
                        for (std::size_t var = 0; var < nv_; ++var) {
                            auto shifted = shift_by_var(F, t - 1, v, var);
                            span.insert_reduced_row(shifted.data());
                        }
                for (const auto& v : K[static_cast<std::size_t>(t)]) {
                    if (span.insert_reduced_row(v.data())) {
                        beta_[{i, t}] += 1;
                        Fnext.gen_degs.push_back(t);
                        Fnext.gen_images.push_back(v);
                        any = true;
                    }
                }
            }
            if (!any) break;

            // K_{i} = ker(F_i -> F_{i-1}) degree by degree
            std::vector<std::vector<Vec>> Knext(static_cast<std::size_t>(max_deg_) + 1);
            for (int t = 0; t <= max_deg_; ++t) {
                const std::size_t dom = component_dim(Fnext, t);
                if (dom == 0) continue;
                ulrich::DenseMatrix M(f_, dom, component_dim(F, t));
                std::size_t row = 0;
                for (std::size_t g = 0; g < Fnext.gen_degs.size(); ++g) {
                    const int dg = Fnext.gen_degs[g];
                    if (dg > t) continue;
                    const auto& mons = bases_[static_cast<std::size_t>(t - dg)];
                    for (std::size_t mi = 0; mi < mons.size(); ++mi, ++row) {
                        const auto img = mul_monomial(F, dg, Fnext.gen_images[g], mons.exponents(mi), t);
                        for (std::size_t c = 0; c < img.size(); ++c) M.set(row, c, img[c]);
                    }
                }
                // elements of F_i are row vectors, so the syzygies in degree t
                // form the left kernel of M
                for (auto& v : ulrich::kernel_basis(M.transposed()))
                    Knext[static_cast<std::size_t>(t)].push_back(std::move(v));
            }
            F = std::move(Fnext);
            K = std::move(Knext);
        }
    }

    std::int64_t beta(int i, int j) const {
        auto it = beta_.find({i, j});
        return it == beta_.end() ? 0 : it->second;
    }

private:
    using Vec = std::vector<std::uint32_t>;

    struct Module {
        std::vector<int> gen_degs;
        std::vector<Vec> gen_images;  // image in the previous module, degree = gen degree
    };

    std::size_t component_dim(const Module& F, int t) const {
        std::size_t n = 0;
        for (int dg : F.gen_degs)
            if (dg <= t) n += bases_[static_cast<std::size_t>(t - dg)].size();
        return n;
    }

    /// x_var * (element of F in degree t) -> element in degree t+1. Blocks
    /// appear in generator order in both component bases; degree-(t+1)
    /// generators contribute an (untouched) block only on the output side.
    Vec shift_by_var(const Module& F, int t, const Vec& v, std::size_t var) const {
        Vec out(component_dim(F, t + 1), 0);
        std::size_t off_in = 0, off_out = 0;
        for (int dg : F.gen_degs) {
            const bool has_in = dg <= t;
            const bool has_out = dg <= t + 1;
            if (has_in) {
                const auto& src = bases_[static_cast<std::size_t>(t - dg)];
                const auto& dst = bases_[static_cast<std::size_t>(t + 1 - dg)];
                for (std::size_t mi = 0; mi < src.size(); ++mi) {
                    if (v[off_in + mi] == 0) continue;
                    const std::size_t mj = src.times_var(dst, mi, var);
                    out[off_out + mj] = f_.add(out[off_out + mj], v[off_in + mi]);
                }
                off_in += src.size();
            }
            if (has_out) off_out += bases_[static_cast<std::size_t>(t + 1 - dg)].size();
        }
        return out;
    }

    /// monomial (exponents ex, degree t - dg) * image vector (degree dg).
    Vec mul_monomial(const Module& F, int dg, const Vec& img, const std::vector<int>& ex,
                     int t) const {
        Vec out(component_dim(F, t), 0);
        std::size_t off_in = 0, off_out = 0;
        for (int gdeg : F.gen_degs) {
            const auto* src = gdeg <= dg ? &bases_[static_cast<std::size_t>(dg - gdeg)] : nullptr;
            const auto* dst = gdeg <= t ? &bases_[static_cast<std::size_t>(t - gdeg)] : nullptr;
            if (src && dst) {
                for (std::size_t mi = 0; mi < src->size(); ++mi) {
                    if (img[off_in + mi] == 0) continue;
                    std::vector<int> e = src->exponents(mi);
                    for (std::size_t z = 0; z < nv_; ++z) e[z] += ex[z];
                    const std::size_t mj = dst->index_of(e);
                    out[off_out + mj] = f_.add(out[off_out + mj], img[off_in + mi]);
                }
            }
            if (src) off_in += src->size();
            if (dst) off_out += dst->size();
        }
        return out;
    }

    ulrich::PrimeField f_;
    std::size_t nv_;
    int max_deg_;
    std::vector<ulrich::MonomialBasis> bases_;
    std::map<std::pair<int, int>, std::int64_t> beta_;
};

}  // namespace testsupport
