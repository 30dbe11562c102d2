/*
   Copyright 2026 the kleinian library authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <array>

#include "resolution_a.hpp"

namespace kleinian {

// The D_r profile is computed on the index-2 cover by H = A_h, h = 2r - 5.
// The symplectic involution interchanges chart U_k and U_{h-k} of the A_h
// resolution, fixing exactly two points (the alpha points) on the middle
// curve l_{r-2}: v_{r-3} = 0, u_{r-3}^2 = (-1)^r. Blowing them up and taking
// the quotient folds l_j with l_{2r-4-j} into d_j, maps the two exceptional
// (-1)-curves to e_1, e_2 (the cover doubles along them, so multiplicities
// halve), and maps residual curve pairs to single curves downstream. The
// involution and the blown-up surface are never constructed as objects; all
// conclusions come from chart expressions, point multiplicities and the two
// cover rules.

/// Fixed-point and cover bookkeeping of one D_r geometry.
struct DTypeGeometry {
    int r;
    long h;                  // 2r - 5
    long middle_chart;       // r - 3: its v = 0 axis is l_{r-2}
    CycloNum alpha1, alpha2; // u-coordinates on that axis, alpha^2 = (-1)^r
};

inline DTypeGeometry d_type_geometry(int r) {
    if (r < 4) throw std::invalid_argument("D_r needs r >= 4");
    const CycloField& f = CycloField::get(field_order_for({GroupKind::D, r}));
    DTypeGeometry g;
    g.r = r;
    g.h = 2L * r - 5;
    g.middle_chart = r - 3;
    CycloNum s = (r % 2 == 0) ? CycloNum::one(f) : embedded_root_of_unity(f, 4, 1);
    g.alpha1 = s;
    g.alpha2 = -s;
    return g;
}

/// Factored chart view (monomial part times residual) of an invariant P in
/// chart U_j of the A_h cover resolution.
inline ChartAnalysis chart_expression_D(const BiPoly& p, int r, long j) {
    if (r < 4) throw std::invalid_argument("D_r needs r >= 4");
    long h = 2L * r - 5;
    if (j < 0 || j > h) throw std::invalid_argument("chart index out of range");
    return analyze_chart_A(p, h, j);
}

struct DegenerateVerdict {
    bool pass = false;
    std::string reason;  // empty when pass
};

/// Valuations and alpha data of the cover divisor of P, before quotienting.
struct DCoverData {
    long h = 0;
    std::vector<long> l_val;            // index 0 unused; 1..h
    long c0_val = 0, clast_val = 0;
    std::array<long, 2> alpha_mult{};   // point multiplicities at alpha_1, alpha_2
    std::vector<ChartAnalysis> charts;  // 0..h
};

inline DCoverData d_cover_data(const BiPoly& p, int r) {
    DTypeGeometry geo = d_type_geometry(r);
    long h = geo.h;
    DCoverData d;
    d.h = h;
    d.charts.reserve(static_cast<std::size_t>(h + 1));
    for (long k = 0; k <= h; ++k) d.charts.push_back(analyze_chart_A(p, h, k));
    d.l_val.assign(static_cast<std::size_t>(h + 1), 0);
    for (long j = 1; j <= h; ++j) {
        d.l_val[static_cast<std::size_t>(j)] = d.charts[static_cast<std::size_t>(j)].val_u;
        if (d.charts[static_cast<std::size_t>(j)].val_u !=
            d.charts[static_cast<std::size_t>(j - 1)].val_v)
            throw std::logic_error("cover chart valuation mismatch along l_" + std::to_string(j));
    }
    d.c0_val = d.charts[0].val_u;
    d.clast_val = d.charts[static_cast<std::size_t>(h)].val_v;

    // the involution must be a symmetry of the divisor
    for (long j = 1; j <= h; ++j)
        if (d.l_val[static_cast<std::size_t>(j)] != d.l_val[static_cast<std::size_t>(2 * r - 4 - j)])
            throw std::logic_error("cover divisor is not involution-symmetric along l_" +
                                   std::to_string(j) + "; input not D-invariant?");
    if (d.c0_val != d.clast_val)
        throw std::logic_error("cover divisor not involution-symmetric along the boundary");

    const auto& middle = d.charts[static_cast<std::size_t>(geo.middle_chart)];
    d.alpha_mult[0] = point_multiplicity(middle.form, geo.alpha1, CycloNum::zero(p.field()));
    d.alpha_mult[1] = point_multiplicity(middle.form, geo.alpha2, CycloNum::zero(p.field()));
    for (long m : d.alpha_mult)
        if (m % 2 != 0)
            throw std::logic_error("odd multiplicity at a fixed point; input not D-invariant?");
    return d;
}

namespace detail {

inline unsigned order_at(const UniPoly& q, const CycloNum& at) {
    // order of vanishing at a point, by repeated exact division
    UniPoly lin(q.field(), {-at, CycloNum::one(q.field())});
    UniPoly cur = q;
    unsigned ord = 0;
    while (!cur.is_zero()) {
        auto [quo, rem] = cur.divrem(lin);
        if (!rem.is_zero()) break;
        cur = quo;
        ++ord;
    }
    return ord;
}

}  // namespace detail

/// Divisor profile of an arbitrary D_r-invariant P near the exceptional set
/// of the quotient resolution, plus the canonical coordinate of the residual
/// crossing on d_2 when there is exactly one (used to recover c).
struct DProfileResult {
    DivisorProfile profile;
    std::optional<CycloNum> rho_coordinate;
};

inline DProfileResult divisor_profile_D_poly(const BiPoly& p, int r) {
    DTypeGeometry geo = d_type_geometry(r);
    const CycloField& f = p.field();
    long h = geo.h, n = 2L * r - 4;
    DCoverData cov = d_cover_data(p, r);

    DProfileResult out;
    DivisorProfile& prof = out.profile;
    auto dname = [](long j) { return "d" + std::to_string(j); };

    prof.add_component("w0", ComponentKind::OpenBoundary, cov.c0_val);
    for (long j = 1; j <= r - 2; ++j)
        prof.add_component(dname(j), ComponentKind::Exceptional,
                           cov.l_val[static_cast<std::size_t>(j)]);
    prof.add_component("e1", ComponentKind::Exceptional, cov.alpha_mult[0] / 2);
    prof.add_component("e2", ComponentKind::Exceptional, cov.alpha_mult[1] / 2);

    prof.add_adjacency("w0", dname(1));
    for (long j = 1; j < r - 2; ++j) prof.add_adjacency(dname(j), dname(j + 1));
    prof.add_adjacency("e1", dname(r - 2));
    prof.add_adjacency("e2", dname(r - 2));

    // Residual open components, folded through the quotient. Charts
    // U_0..U_{r-3} see one corner of every involution-paired corner set, and
    // chart U_j's u-axis sees the non-corner crossings of l_j; the middle
    // curve needs its own pass with 2:1 pairing away from the alpha points.
    auto add_open = [&](const std::string& id, long mult,
                        std::initializer_list<std::pair<std::string, long>> adj,
                        bool at_corner = false) {
        prof.add_component(id, ComponentKind::OpenResidual, mult);
        long present = 0;
        for (const auto& [target, count] : adj)
            if (prof.has(target) && count > 0) {
                prof.add_adjacency(id, target, count);
                ++present;
            }
        if (at_corner && present >= 2)
            prof.degeneracies.push_back("three components through one point at " + id);
    };

    for (long k = 0; k <= r - 3; ++k) {
        const ChartAnalysis& ca = cov.charts[static_cast<std::size_t>(k)];
        if (ca.residual_is_unit()) continue;
        // corner of U_k lies on l_k and l_{k+1} upstairs
        if (ca.residual.coefficient(0, 0).is_zero()) {
            long on_u = static_cast<long>(ca.bu.order_at_zero());
            long on_v = static_cast<long>(ca.bv.order_at_zero());
            std::string u_id = (k == 0) ? "w0" : dname(k);
            add_open("res.corner" + std::to_string(k), 1, {{u_id, on_u}, {dname(k + 1), on_v}},
                     true);
        }
        // non-corner crossings of l_k (k >= 1)
        if (k >= 1) {
            unsigned corner = ca.bu[0].is_zero() ? ca.bu.order_at_zero() : 0;
            if (ca.bu.degree() > static_cast<int>(corner)) {
                UniPoly off = ca.bu.shift_down(corner);
                for (const auto& [mult, factor] : squarefree_decomposition(off))
                    for (int i = 0; i < factor.degree(); ++i)
                        add_open("res.d" + std::to_string(k) + ".m" + std::to_string(mult) + "." +
                                     std::to_string(i),
                                 static_cast<long>(mult), {{dname(k), 1}});
            }
        }
    }

    // middle curve l_{r-2}: read from chart U_{r-2}'s u-axis; the involution
    // acts by v -> (-1)^r / v there, so non-alpha crossings pair 2:1.
    {
        const ChartAnalysis& ca = cov.charts[static_cast<std::size_t>(r - 2)];
        if (!ca.residual_is_unit()) {
            UniPoly bu = ca.bu;
            unsigned corner = bu[0].is_zero() ? bu.order_at_zero() : 0;  // handled as corner above
            UniPoly off = corner ? bu.shift_down(corner) : bu;
            // split off crossings at the alpha points (their v-coordinates
            // satisfy the same equation v^2 = (-1)^r)
            CycloNum av1 = geo.alpha1.invert(), av2 = geo.alpha2.invert();
            unsigned a1 = detail::order_at(off, av1), a2 = detail::order_at(off, av2);
            if (a1 > 0)
                add_open("res.alpha1", 1, {{"e1", static_cast<long>(a1)}});
            if (a2 > 0)
                add_open("res.alpha2", 1, {{"e2", static_cast<long>(a2)}});
            UniPoly lin1(f, {-av1, CycloNum::one(f)}), lin2(f, {-av2, CycloNum::one(f)});
            for (unsigned i = 0; i < a1; ++i) off = off.divrem(lin1).first;
            for (unsigned i = 0; i < a2; ++i) off = off.divrem(lin2).first;
            if (off.degree() > 0) {
                for (const auto& [mult, factor] : squarefree_decomposition(off)) {
                    if (factor.degree() % 2 != 0)
                        throw std::logic_error("middle-curve crossings do not pair 2:1");
                    for (int i = 0; i < factor.degree() / 2; ++i)
                        add_open("res.d" + std::to_string(r - 2) + ".m" + std::to_string(mult) +
                                     "." + std::to_string(i),
                                 static_cast<long>(mult), {{dname(r - 2), 1}});
                    // canonical coordinate of a single simple crossing:
                    // v + (-1)^r / v is involution-invariant
                    if (r == 4 && mult == 1 && factor.degree() == 2) {
                        const CycloNum& c0 = factor[0];
                        const CycloNum& c1 = factor[1];
                        CycloNum parity = CycloNum::rational(f, Rational(r % 2 == 0 ? 1 : -1));
                        if (c0 == parity)  // v^2 + c1 v + (-1)^r, an involution-stable pair
                            out.rho_coordinate = -c1;
                    }
                }
            }
        }
    }

    // canonical rho coordinate for r >= 5: the unique simple crossing on d_2
    // read in chart U_2 (v-coordinate of the residual's root on the u-axis)
    if (r >= 5) {
        const ChartAnalysis& ca = cov.charts[2];
        if (!ca.residual_is_unit() && !ca.bu[0].is_zero() && ca.bu.degree() == 1)
            out.rho_coordinate = -(ca.bu[0] / ca.bu[1]);
    }

    prof.finalize();
    return out;
}

/// Structured degeneracy verdict for the parameter c of F = X + cY: c = 0
/// always fails; r = 4 additionally fails on c = +-1 (the residual factor
/// u^2 + (2/c)u + 1 acquires a double root, at an alpha point); for r >= 5
/// the residual curve is checked per instance for smoothness along its
/// exceptional crossings and disjointness from the alpha points rather than
/// assumed well-placed.
inline DegenerateVerdict degenerate_check(const CycloNum& c, int r) {
    if (r < 4) throw std::invalid_argument("D_r needs r >= 4");
    DegenerateVerdict v;
    if (c.is_zero()) {
        v.reason = "c = 0: the pencil member is X, not a parameter deformation";
        return v;
    }
    DTypeGeometry geo = d_type_geometry(r);
    const CycloField& f = CycloField::get(field_order_for({GroupKind::D, r}));
    InvariantTriple t = invariant_triple({GroupKind::D, r});
    BiPoly F = t.x + c * t.y;

    // residual in chart U_1; its v = 0 restriction carries the crossings of l_2
    ChartAnalysis u1 = chart_expression_D(F, r, 1);
    UniPoly q = u1.bv;
    if (q.degree() < 1) {
        v.reason = "residual does not reach the exceptional set";
        return v;
    }
    if (gcd(q, q.derivative()).degree() > 0) {
        v.reason = "coincident residual roots on l_2";
        return v;
    }
    // alpha-point incidence, checked on the middle chart's residual
    ChartAnalysis mid = chart_expression_D(F, r, geo.middle_chart);
    CycloNum z = CycloNum::zero(f);
    if (mid.residual.evaluate(geo.alpha1, z).is_zero() ||
        mid.residual.evaluate(geo.alpha2, z).is_zero()) {
        v.reason = "residual passes through a fixed point";
        return v;
    }
    // smoothness of the residual along its l_2 crossings: dR/du must not
    // vanish simultaneously (roots of q are simple, so check the derivative
    // of the full residual does not share a root with q at v = 0)
    UniPoly du_at_v0 = u1.residual.derivative(1).restrict_var(2, z);
    if (gcd(q, du_at_v0).degree() > 0 && gcd(q, u1.residual.derivative(2).restrict_var(2, z)).degree() > 0) {
        v.reason = "residual is singular at an exceptional crossing";
        return v;
    }
    v.pass = true;
    return v;
}

/// Divisor profile of F = X + cY on the D_r quotient resolution.
inline DivisorProfile divisor_profile_D(const CycloNum& c, int r) {
    auto verdict = degenerate_check(c, r);
    if (!verdict.pass) throw std::domain_error("degenerate parameter: " + verdict.reason);
    InvariantTriple t = invariant_triple({GroupKind::D, r});
    BiPoly F = t.x + c * t.y;
    return divisor_profile_D_poly(F, r).profile;
}

/// Canonical coordinate of the crossing point of the residual curve with
/// d_2; injective in c (the map is c |-> -2/c for every r).
inline CycloNum rho_intersection_point(const CycloNum& c, int r) {
    auto verdict = degenerate_check(c, r);
    if (!verdict.pass) throw std::domain_error("degenerate parameter: " + verdict.reason);
    InvariantTriple t = invariant_triple({GroupKind::D, r});
    BiPoly F = t.x + c * t.y;
    auto res = divisor_profile_D_poly(F, r);
    if (!res.rho_coordinate)
        throw std::logic_error("no canonical residual crossing found");
    return *res.rho_coordinate;
}

/// Inverse of rho_intersection_point on profiles of candidate functions:
/// the c implied by the crossing coordinate.
inline CycloNum recover_c_from_rho(const CycloNum& rho_coordinate) {
    return CycloNum::rational(rho_coordinate.field(), Rational(-2)) * rho_coordinate.invert();
}

}  // namespace kleinian
