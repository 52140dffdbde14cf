#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ulrich/field.hpp"
#include "ulrich/lattice.hpp"
#include "ulrich/matrix.hpp"
#include "ulrich/monomial.hpp"
#include "ulrich/points.hpp"
#include "ulrich/rng.hpp"

namespace ulrich {

/// Homogeneous form in three variables, coefficients over the grevlex
/// monomial basis of its degree.
struct TriForm {
    int deg = 0;
    std::vector<std::uint32_t> coeffs;

    bool is_zero() const noexcept {
        for (auto c : coeffs)
            if (c) return false;
        return true;
    }
};

namespace detail {

inline std::uint32_t eval_form(const PrimeField& f, const MonomialBasis& basis,
                               const std::vector<std::uint32_t>& coeffs,
                               const std::vector<std::uint32_t>& pt) {
    std::array<std::vector<std::uint32_t>, 3> pw;
    for (std::size_t i = 0; i < 3; ++i) {
        pw[i].assign(static_cast<std::size_t>(basis.degree()) + 1, 1);
        for (int e = 1; e <= basis.degree(); ++e)
            pw[i][static_cast<std::size_t>(e)] = f.mul(pw[i][static_cast<std::size_t>(e - 1)], pt[i]);
    }
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < basis.size(); ++c) {
        if (coeffs[c] == 0) continue;
        const auto& e = basis.exponents(c);
        std::uint32_t v = coeffs[c];
        for (std::size_t i = 0; i < 3; ++i)
            if (e[i]) v = f.mul(v, pw[i][static_cast<std::size_t>(e[i])]);
        acc += v;
    }
    return f.reduce(acc);
}

// ---- univariate polynomials over F_p, coefficients low to high ----

using UniPoly = std::vector<std::uint32_t>;

inline void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UniPoly uni_mul(const PrimeField& f, const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
    }
    return c;
}

inline std::uint32_t uni_eval(const PrimeField& f, const UniPoly& p, std::uint32_t x) {
    std::uint32_t acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p[i]);
    return acc;
}

inline UniPoly uni_deriv(const PrimeField& f, const UniPoly& p) {
    if (p.size() <= 1) return {};
    UniPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = f.mul(p[i], f.from_int(static_cast<std::int64_t>(i)));
    uni_trim(d);
    return d;
}

inline UniPoly uni_mod(const PrimeField& f, UniPoly a, const UniPoly& b) {
    uni_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const std::uint32_t c = f.mul(a.back(), f.inv(b.back()));
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
        uni_trim(a);
    }
    return a;
}

inline UniPoly uni_gcd(const PrimeField& f, UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline bool uni_squarefree(const PrimeField& f, const UniPoly& p) {
    if (p.size() <= 2) return true;  // degree <= 1
    const UniPoly d = uni_deriv(f, p);
    if (d.empty()) return false;  // p a p-th power; impossible for our degrees
    return uni_gcd(f, p, d).size() <= 1;
}

}  // namespace detail

inline std::uint32_t evaluate_form(const PrimeField& f, const TriForm& form,
                                   const std::vector<std::uint32_t>& pt) {
    return detail::eval_form(f, MonomialBasis(3, form.deg), form.coeffs, pt);
}

/// k <= 6 certified general points in P^2: every 3x3 coordinate determinant
/// nonzero, and for k = 6 no conic through all six. Resamples until the
/// certificates pass.
inline std::vector<std::vector<std::uint32_t>> general_points_p2(const PrimeField& f, int k,
                                                                 std::uint64_t seed) {
    if (k < 0 || k > 6) throw std::invalid_argument("general_points_p2: k must be in 0..6");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<std::vector<std::uint32_t>> pts;
        for (int i = 0; i < k; ++i)
            pts.push_back({1u, rng.field_elem(f), rng.field_elem(f)});
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            for (int j = i + 1; j < k && ok; ++j)
                for (int l = j + 1; l < k && ok; ++l) {
                    const auto &a = pts[static_cast<std::size_t>(i)], &b = pts[static_cast<std::size_t>(j)], &c = pts[static_cast<std::size_t>(l)];
                    const std::uint32_t det = f.sub(
                        f.add(f.mul(a[0], f.sub(f.mul(b[1], c[2]), f.mul(b[2], c[1]))),
                              f.mul(a[2], f.sub(f.mul(b[0], c[1]), f.mul(b[1], c[0])))),
                        f.mul(a[1], f.sub(f.mul(b[0], c[2]), f.mul(b[2], c[0]))));
                    if (det == 0) ok = false;
                }
        if (ok && k == 6) {
            ProjPointSet ps(f, 2);
            for (const auto& p : pts) ps.add(p);
            if (ps.size() != 6 || rank(evaluation_matrix(ps, 2)) != 6) ok = false;
        }
        if (ok) return pts;
    }
    throw std::runtime_error("general_points_p2: could not certify a general configuration");
}

/// Basis of the cubics through the given points: kernel of the k x 10
/// evaluation matrix. Dimension must be exactly 10 - k.
inline std::vector<TriForm> anticanonical_map(const PrimeField& f,
                                              const std::vector<std::vector<std::uint32_t>>& pts) {
    MonomialBasis cubics(3, 3);
    DenseMatrix ev(f, pts.size(), cubics.size());
    for (std::size_t r = 0; r < pts.size(); ++r) {
        for (std::size_t c = 0; c < cubics.size(); ++c) {
            const auto& e = cubics.exponents(c);
            std::uint32_t v = 1;
            for (std::size_t i = 0; i < 3; ++i)
                for (int rep = 0; rep < e[i]; ++rep) v = f.mul(v, pts[r][i]);
            ev.set(r, c, v);
        }
    }
    const auto kb = kernel_basis(ev);
    if (kb.size() != cubics.size() - pts.size())
        throw std::runtime_error("anticanonical_map: degenerate point configuration");
    std::vector<TriForm> out;
    out.reserve(kb.size());
    for (const auto& v : kb) out.push_back(TriForm{3, v});
    return out;
}

/// Plane model of a del Pezzo surface of degree 3..7: base points in P^2 and
/// the anticanonical cubics through them, which give the map to P^d.
struct BlowupModel {
    DelPezzo X;
    PrimeField fld;
    std::uint64_t seed;
    std::vector<std::vector<std::uint32_t>> base_points;
    std::vector<TriForm> anticanonical;

    int d() const noexcept { return X.d; }
    std::size_t k() const noexcept { return base_points.size(); }
};

inline BlowupModel make_blowup_model(const PrimeField& f, int d, std::uint64_t seed) {
    if (d < 3 || d > 7)
        throw std::invalid_argument("make_blowup_model: plane models are realized for d in 3..7");
    DelPezzo X(d);
    auto pts = general_points_p2(f, X.blowup_count(), seed);
    auto cub = anticanonical_map(f, pts);
    return BlowupModel{X, f, seed, std::move(pts), std::move(cub)};
}

/// A member of |a*l - sum m_i e_i| realized as a plane curve: a trivariate
/// form of degree a vanishing to order m_i at base point i.
struct PlaneCurveRealization {
    DivClass cls;
    TriForm form;
    std::vector<std::int64_t> multiplicities;
};

namespace detail {

/// Condition rows: all order-(m-1) partials of a degree-`deg` form vanish at
/// pt. That is C(m+1, 2) rows; with p far above deg, Euler's relation makes
/// the lower-order vanishing automatic.
inline void jet_condition_rows(const PrimeField& f, const MonomialBasis& basis,
                               const std::vector<std::uint32_t>& pt, std::int64_t m,
                               std::vector<std::vector<std::uint32_t>>& rows) {
    MonomialBasis derivs(3, static_cast<int>(m) - 1);
    for (std::size_t di = 0; di < derivs.size(); ++di) {
        const auto& alpha = derivs.exponents(di);
        std::vector<std::uint32_t> row(basis.size(), 0);
        for (std::size_t c = 0; c < basis.size(); ++c) {
            const auto& e = basis.exponents(c);
            bool ok = true;
            std::uint32_t coef = 1;
            std::uint32_t val = 1;
            for (std::size_t i = 0; i < 3 && ok; ++i) {
                if (e[i] < alpha[i]) { ok = false; break; }
                for (int t = 0; t < alpha[i]; ++t)
                    coef = f.mul(coef, f.from_int(e[i] - t));
                for (int t = 0; t < e[i] - alpha[i]; ++t) val = f.mul(val, pt[i]);
            }
            if (ok) row[c] = f.mul(coef, val);
        }
        rows.push_back(std::move(row));
    }
}

}  // namespace detail

/// Random member of the linear system |cls| on the plane model: a random
/// element of the kernel of the jet-condition matrix.
inline PlaneCurveRealization linear_system_member(const BlowupModel& model, const DivClass& cls,
                                                  std::uint64_t seed) {
    if (cls.k() != model.k())
        throw std::invalid_argument("linear_system_member: class does not match model");
    if (cls.a < 1) throw std::invalid_argument("linear_system_member: plane degree must be >= 1");
    std::vector<std::int64_t> mult;
    for (auto b : cls.b) {
        if (-b < 0)
            throw std::invalid_argument("linear_system_member: negative assigned multiplicity");
        mult.push_back(-b);
    }
    const PrimeField& f = model.fld;
    MonomialBasis basis(3, static_cast<int>(cls.a));
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::size_t i = 0; i < mult.size(); ++i)
        if (mult[i] >= 1) detail::jet_condition_rows(f, basis, model.base_points[i], mult[i], rows);
    DenseMatrix cond(f, rows.size(), basis.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c) cond.set(r, c, rows[r][c]);
    const auto kb = kernel_basis(cond);
    if (kb.empty()) throw std::runtime_error("linear_system_member: empty linear system " + cls.str());
    SplitMix64 rng(seed);
    std::vector<std::uint32_t> coeffs(basis.size(), 0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::fill(coeffs.begin(), coeffs.end(), 0u);
        for (const auto& v : kb) {
            const std::uint32_t c = rng.field_elem(f);
            if (c == 0) continue;
            for (std::size_t j = 0; j < coeffs.size(); ++j)
                coeffs[j] = f.add(coeffs[j], f.mul(c, v[j]));
        }
        bool nonzero = false;
        for (auto c : coeffs)
            if (c) { nonzero = true; break; }
        if (nonzero) return PlaneCurveRealization{cls, TriForm{static_cast<int>(cls.a), coeffs}, mult};
    }
    throw std::runtime_error("linear_system_member: random combination kept vanishing");
}

/// Plane points of the curve together with their images under the
/// anticanonical map, kept index-aligned.
struct CurveSample {
    std::vector<std::vector<std::uint32_t>> plane_points;
    ProjPointSet image;

    CurveSample(PrimeField f, std::size_t d) : image(f, d) {}
};

/// Scan fibers of random lines for F_p-points of the plane curve: restrict the
/// form to the line, then a full root scan over the field. Base points are
/// excluded; every found point is pushed through the anticanonical cubics.
inline CurveSample sample_curve_points_full(const BlowupModel& model,
                                            const PlaneCurveRealization& curve, std::size_t N,
                                            std::uint64_t seed, std::size_t line_budget = 0) {
    const PrimeField& f = model.fld;
    if (curve.form.is_zero())
        throw std::invalid_argument("sample_curve_points: zero form is not a curve");
    const std::size_t d = static_cast<std::size_t>(model.d());
    CurveSample out(f, d);
    if (N == 0) return out;
    if (line_budget == 0) line_budget = 64 + 8 * N;

    MonomialBasis basis(3, curve.form.deg);
    ProjPointSet plane_seen(f, 2);
    ProjPointSet base(f, 2);
    for (const auto& bp : model.base_points) base.add(bp);

    SplitMix64 rng(seed);
    const auto p = static_cast<std::uint32_t>(f.modulus());

    auto try_point = [&](const std::vector<std::uint32_t>& raw) {
        if (out.image.size() >= N) return;
        const auto pt = plane_seen.normalize(raw);
        if (base.size() && base.contains(pt)) return;
        if (plane_seen.contains(pt)) return;
        std::vector<std::uint32_t> img(model.anticanonical.size());
        bool all_zero = true;
        for (std::size_t i = 0; i < img.size(); ++i) {
            img[i] = detail::eval_form(f, MonomialBasis(3, 3), model.anticanonical[i].coeffs, pt);
            if (img[i]) all_zero = false;
        }
        if (all_zero) return;  // only happens at base points
        if (out.image.add(img)) {
            plane_seen.add(pt);
            out.plane_points.push_back(pt);
        }
    };

    for (std::size_t line = 0; line < line_budget && out.image.size() < N; ++line) {
        const std::vector<std::uint32_t> A = {1u, rng.field_elem(f), rng.field_elem(f)};
        const std::vector<std::uint32_t> B = {0u, 1u, rng.field_elem(f)};
        // restriction f(A + uB) as a univariate polynomial in u
        detail::UniPoly restr;
        for (std::size_t c = 0; c < basis.size(); ++c) {
            if (curve.form.coeffs[c] == 0) continue;
            const auto& e = basis.exponents(c);
            detail::UniPoly term = {curve.form.coeffs[c]};
            for (std::size_t i = 0; i < 3; ++i) {
                const detail::UniPoly lin = {A[i], B[i]};
                for (int rep = 0; rep < e[i]; ++rep) term = detail::uni_mul(f, term, lin);
            }
            if (restr.size() < term.size()) restr.resize(term.size(), 0);
            for (std::size_t i = 0; i < term.size(); ++i) restr[i] = f.add(restr[i], term[i]);
        }
        detail::uni_trim(restr);
        if (restr.empty()) continue;  // line inside the curve; cannot happen for irreducible members
        for (std::uint32_t u = 0; u < p && out.image.size() < N; ++u) {
            if (detail::uni_eval(f, restr, u) != 0) continue;
            try_point({f.add(A[0], f.mul(u, B[0])), f.add(A[1], f.mul(u, B[1])),
                       f.add(A[2], f.mul(u, B[2]))});
        }
        if (evaluate_form(f, curve.form, B) == 0) try_point(B);
    }
    if (out.image.size() < N)
        throw std::runtime_error("sample_curve_points: found only " +
                                 std::to_string(out.image.size()) + " of " + std::to_string(N) +
                                 " requested points (a larger prime may be needed)");
    return out;
}

inline ProjPointSet sample_curve_points(const BlowupModel& model,
                                        const PlaneCurveRealization& curve, std::size_t N,
                                        std::uint64_t seed) {
    return sample_curve_points_full(model, curve, N, seed).image;
}

struct BaseJetIssue {
    std::size_t base_index;
    std::int64_t expected_mult;
    std::int64_t jet_order;  // -1 when the form vanishes identically in the chart
    bool squarefree;
};

struct SmoothnessReport {
    bool ok = true;
    std::vector<std::size_t> gradient_failures;  // indices into the checked points
    std::vector<BaseJetIssue> base_issues;
};

/// Report-only smoothness spot check: the plane gradient must be nonzero at
/// every sampled (non-base) point, and at each base point the lowest jet must
/// have order exactly m_i with squarefree leading binary form, so the strict
/// transform is smooth there.
inline SmoothnessReport smoothness_spotcheck(const BlowupModel& model,
                                             const PlaneCurveRealization& curve,
                                             const std::vector<std::vector<std::uint32_t>>& pts) {
    const PrimeField& f = model.fld;
    SmoothnessReport rep;
    MonomialBasis basis(3, curve.form.deg);

    // gradients at sampled points
    for (std::size_t pi = 0; pi < pts.size(); ++pi) {
        bool any = false;
        for (std::size_t var = 0; var < 3 && !any; ++var) {
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < basis.size(); ++c) {
                if (curve.form.coeffs[c] == 0) continue;
                const auto& e = basis.exponents(c);
                if (e[var] == 0) continue;
                std::uint32_t v = f.mul(curve.form.coeffs[c], f.from_int(e[var]));
                for (std::size_t i = 0; i < 3; ++i) {
                    const int pow = i == var ? e[i] - 1 : e[i];
                    for (int rep2 = 0; rep2 < pow; ++rep2) v = f.mul(v, pts[pi][i]);
                }
                acc += v;
            }
            if (f.reduce(acc) != 0) any = true;
        }
        if (!any) {
            rep.gradient_failures.push_back(pi);
            rep.ok = false;
        }
    }

    // local jets at base points
    for (std::size_t bi = 0; bi < model.base_points.size(); ++bi) {
        const std::int64_t m = bi < curve.multiplicities.size() ? curve.multiplicities[bi] : 0;
        const auto& P = model.base_points[bi];
        std::size_t chart = 0;
        while (chart < 3 && P[chart] == 0) ++chart;
        std::array<std::size_t, 2> uv{};
        std::size_t w = 0;
        for (std::size_t i = 0; i < 3; ++i)
            if (i != chart) uv[w++] = i;
        const int deg = curve.form.deg;
        std::vector<std::vector<std::uint32_t>> grid(
            static_cast<std::size_t>(deg) + 1,
            std::vector<std::uint32_t>(static_cast<std::size_t>(deg) + 1, 0));
        for (std::size_t c = 0; c < basis.size(); ++c) {
            if (curve.form.coeffs[c] == 0) continue;
            const auto& e = basis.exponents(c);
            const int eu = e[uv[0]], ev = e[uv[1]], ec = e[chart];
            std::uint32_t head = curve.form.coeffs[c];
            for (int rep2 = 0; rep2 < ec; ++rep2) head = f.mul(head, P[chart]);
            for (int j = 0; j <= eu; ++j) {
                std::uint32_t cu = f.from_int(binomial(eu, j));
                for (int rep2 = 0; rep2 < eu - j; ++rep2) cu = f.mul(cu, P[uv[0]]);
                for (int kk = 0; kk <= ev; ++kk) {
                    std::uint32_t cv = f.from_int(binomial(ev, kk));
                    for (int rep2 = 0; rep2 < ev - kk; ++rep2) cv = f.mul(cv, P[uv[1]]);
                    auto& cell = grid[static_cast<std::size_t>(j)][static_cast<std::size_t>(kk)];
                    cell = f.add(cell, f.mul(head, f.mul(cu, cv)));
                }
            }
        }
        std::int64_t order = -1;
        for (int tot = 0; tot <= deg && order < 0; ++tot)
            for (int j = 0; j <= tot; ++j)
                if (grid[static_cast<std::size_t>(j)][static_cast<std::size_t>(tot - j)] != 0) {
                    order = tot;
                    break;
                }
        bool sqf = true;
        if (order >= 2) {
            // leading binary form F(s,t); squarefree iff t divides at most once
            // and F(s,1) is squarefree as a univariate polynomial
            detail::UniPoly g(static_cast<std::size_t>(order) + 1, 0);
            for (int j = 0; j <= order; ++j)
                g[static_cast<std::size_t>(j)] = grid[static_cast<std::size_t>(j)][static_cast<std::size_t>(order - j)];
            detail::uni_trim(g);
            const std::int64_t t_mult = order - (static_cast<std::int64_t>(g.size()) - 1);
            sqf = t_mult <= 1 && detail::uni_squarefree(f, g);
        }
        if (order != m || !sqf) {
            rep.base_issues.push_back({bi, m, order, sqf});
            rep.ok = false;
        }
    }
    return rep;
}

/// N distinct points (1 : t : ... : t^d) on the rational normal curve in P^d,
/// optionally with the point at infinity.
inline ProjPointSet rational_normal_curve_points(const PrimeField& f, int d, std::size_t N,
                                                 std::uint64_t seed, bool include_infinity = false) {
    if (d < 1) throw std::invalid_argument("rational_normal_curve_points: d must be >= 1");
    if (N > f.modulus() + (include_infinity ? 1u : 0u))
        throw std::invalid_argument("rational_normal_curve_points: more points than the curve has");
    ProjPointSet out(f, static_cast<std::size_t>(d));
    SplitMix64 rng(seed);
    if (include_infinity && out.size() < N) {
        std::vector<std::uint32_t> inf(static_cast<std::size_t>(d) + 1, 0);
        inf.back() = 1;
        out.add(inf);
    }
    while (out.size() < N) {
        const std::uint32_t t = rng.field_elem(f);
        std::vector<std::uint32_t> pt(static_cast<std::size_t>(d) + 1);
        pt[0] = 1;
        for (int i = 1; i <= d; ++i) pt[static_cast<std::size_t>(i)] = f.mul(pt[static_cast<std::size_t>(i - 1)], t);
        out.add(pt);
    }
    return out;
}

}  // namespace ulrich
