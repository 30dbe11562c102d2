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

#include "divisor.hpp"
#include "invariants.hpp"

namespace kleinian {

// The minimal resolution of C^2/A_r carries r+1 affine charts U_k with
// coordinates (u_k, v_k) = (Z1^{k+1} Z2^{-(r-k)}, Z1^{-k} Z2^{r+1-k}).
// Exceptional curves l_j (1 <= j <= r) are {u_j = 0} in U_j and {v_{j-1} = 0}
// in U_{j-1}; the open toric boundary curves are c_0 = {u_0 = 0} and
// c_{r+1} = {v_r = 0}, the proper transforms of the two coordinate axes.

/// Chart exponents (alpha, beta) with Z1^a Z2^b = u_k^alpha v_k^beta.
/// Requires the invariant-monomial condition a = b mod (r+1).
inline std::pair<long, long> monomial_to_chart(long a, long b, long r, long k) {
    long n = r + 1;
    if (((a - b) % n + n) % n != 0)
        throw std::invalid_argument("monomial Z1^" + std::to_string(a) + " Z2^" +
                                    std::to_string(b) + " is not A_" + std::to_string(r) +
                                    "-invariant");
    long alpha_num = a * (n - k) + b * k;
    long beta_num = a * (r - k) + b * (k + 1);
    if (alpha_num % n != 0 || beta_num % n != 0)
        throw std::logic_error("chart exponent not integral");
    return {alpha_num / n, beta_num / n};
}

/// P rewritten in the coordinates of chart U_k. For P supported on invariant
/// monomials this is a genuine polynomial (all exponents nonnegative).
inline BiPoly chart_form_A(const BiPoly& p, long r, long k) {
    BiPoly out(p.field());
    for (const auto& [e, c] : p.terms()) {
        auto [alpha, beta] = monomial_to_chart(e.first, e.second, r, k);
        if (alpha < 0 || beta < 0) throw std::logic_error("negative chart exponent");
        out.add_term(alpha, beta, c);
    }
    return out;
}

/// One chart's factored view of P: monomial part u^val_u v^val_v times a
/// residual polynomial, plus the residual's restrictions to the two boundary
/// axes. Distinct Z-monomials map to distinct chart monomials (the exponent
/// map is unimodular up to index), so the minimum exponent is the exact
/// vanishing order along the corresponding boundary divisor.
struct ChartAnalysis {
    long k = 0;
    BiPoly form;      // P in (u, v)
    long val_u = 0;   // min u-exponent = valuation along the u = 0 divisor
    long val_v = 0;   // min v-exponent
    BiPoly residual;  // form / (u^val_u v^val_v)
    UniPoly bu;       // residual restricted to u = 0, polynomial in v
    UniPoly bv;       // residual restricted to v = 0, polynomial in u

    bool residual_is_unit() const { return residual.term_count() <= 1; }
};

inline ChartAnalysis analyze_chart_A(const BiPoly& p, long r, long k) {
    if (p.is_zero()) throw std::invalid_argument("divisor data of the zero polynomial");
    ChartAnalysis a;
    a.k = k;
    a.form = chart_form_A(p, r, k);
    a.val_u = a.val_v = -1;
    for (const auto& [e, c] : a.form.terms()) {
        if (a.val_u < 0 || e.first < a.val_u) a.val_u = e.first;
        if (a.val_v < 0 || e.second < a.val_v) a.val_v = e.second;
    }
    BiPoly res(p.field());
    for (const auto& [e, c] : a.form.terms())
        res.add_term(e.first - a.val_u, e.second - a.val_v, c);
    a.residual = res;
    a.bu = res.restrict_var(1, CycloNum::zero(p.field()));
    a.bv = res.restrict_var(2, CycloNum::zero(p.field()));
    if (a.bu.is_zero() || a.bv.is_zero())
        throw std::logic_error("residual divisible by a chart coordinate");
    return a;
}

/// Identifier of an A-chart toric component.
struct AComponentRef {
    enum Tag { C0, L, CLast } tag;
    long j = 0;  // for L

    static AComponentRef c0() { return {C0, 0}; }
    static AComponentRef l(long j) { return {L, j}; }
    static AComponentRef c_last() { return {CLast, 0}; }
};

/// Vanishing order of P along one toric component: the minimum chart
/// exponent cutting it (alpha in U_j for l_j, alpha in U_0 for c_0, beta in
/// U_r for c_{r+1}).
inline long valuation_A(const BiPoly& p, long r, const AComponentRef& comp) {
    switch (comp.tag) {
        case AComponentRef::C0: return analyze_chart_A(p, r, 0).val_u;
        case AComponentRef::CLast: return analyze_chart_A(p, r, r).val_v;
        case AComponentRef::L: {
            if (comp.j < 1 || comp.j > r) throw std::invalid_argument("l_j needs 1 <= j <= r");
            return analyze_chart_A(p, r, comp.j).val_u;
        }
    }
    throw std::logic_error("bad component tag");
}

namespace detail {

/// Open components cut out by one chart's residual factor, restricted to what
/// matters near the exceptional set: crossings of exceptional boundary parts
/// and of chart corners. Boundary-root multiplicities are attributed to
/// component multiplicity (normal-crossing reading); distinct roots are
/// distinct components. Crossings of l_{k+1} away from the corner are not
/// collected here: chart U_{k+1} sees the same points on its u-axis.
struct ResidualComponent {
    std::string id;
    long multiplicity;
    bool at_corner = false;  // branch through the intersection of the two boundary divisors
    std::vector<std::pair<std::string, long>> adjacency;  // (component id, count)
};

inline void collect_residual_components(const ChartAnalysis& ca, const std::string& u_div_id,
                                        bool u_div_exceptional, const std::string& v_div_id,
                                        std::vector<ResidualComponent>& out) {
    if (ca.residual_is_unit()) return;
    unsigned corner_u = 0, corner_v = 0;  // orders of the corner root on each axis
    if (ca.bu[0].is_zero()) {
        corner_u = ca.bu.order_at_zero();
        corner_v = ca.bv.order_at_zero();
        ResidualComponent rc;
        rc.id = "res.U" + std::to_string(ca.k) + ".corner";
        rc.multiplicity = 1;
        rc.at_corner = true;
        rc.adjacency.emplace_back(u_div_id, static_cast<long>(corner_u));
        rc.adjacency.emplace_back(v_div_id, static_cast<long>(corner_v));
        out.push_back(std::move(rc));
    }
    if (u_div_exceptional && ca.bu.degree() > static_cast<int>(corner_u)) {
        UniPoly off_corner = ca.bu.shift_down(corner_u);
        for (const auto& [mult, factor] : squarefree_decomposition(off_corner)) {
            for (int i = 0; i < factor.degree(); ++i) {
                ResidualComponent rc;
                rc.id = "res.U" + std::to_string(ca.k) + ".m" + std::to_string(mult) + "." +
                        std::to_string(i);
                rc.multiplicity = static_cast<long>(mult);
                rc.adjacency.emplace_back(u_div_id, 1);
                out.push_back(std::move(rc));
            }
        }
    }
}

}  // namespace detail

/// Full divisor profile of an invariant P near the exceptional set of the
/// A_r resolution: toric valuations along c_0, l_1..l_r, c_{r+1}, chain
/// adjacency, and residual open components that actually reach the
/// exceptional set (crossings of the open c-curves away from corners lie
/// outside any neighbourhood of the exceptional set and are dropped).
inline DivisorProfile divisor_profile_A(const BiPoly& p, long r) {
    if (r < 1) throw std::invalid_argument("A_r needs r >= 1");
    DivisorProfile prof;
    std::string c0 = "c0", clast = "c" + std::to_string(r + 1);
    auto lname = [](long j) { return "l" + std::to_string(j); };

    std::vector<ChartAnalysis> charts;
    charts.reserve(static_cast<std::size_t>(r + 1));
    for (long k = 0; k <= r; ++k) charts.push_back(analyze_chart_A(p, r, k));

    // adjacent charts must agree on the shared curve
    for (long j = 1; j <= r; ++j)
        if (charts[static_cast<std::size_t>(j)].val_u != charts[static_cast<std::size_t>(j - 1)].val_v)
            throw std::logic_error("chart valuation mismatch along l_" + std::to_string(j));

    prof.add_component(c0, ComponentKind::OpenBoundary, charts[0].val_u);
    for (long j = 1; j <= r; ++j)
        prof.add_component(lname(j), ComponentKind::Exceptional,
                           charts[static_cast<std::size_t>(j)].val_u);
    prof.add_component(clast, ComponentKind::OpenBoundary,
                       charts[static_cast<std::size_t>(r)].val_v);

    prof.add_adjacency(c0, lname(1));
    for (long j = 1; j < r; ++j) prof.add_adjacency(lname(j), lname(j + 1));
    prof.add_adjacency(lname(r), clast);

    std::vector<detail::ResidualComponent> residuals;
    for (long k = 0; k <= r; ++k) {
        std::string u_id = (k == 0) ? c0 : lname(k);
        std::string v_id = (k == r) ? clast : lname(k + 1);
        detail::collect_residual_components(charts[static_cast<std::size_t>(k)], u_id, k >= 1,
                                            v_id, residuals);
    }
    for (const auto& rc : residuals) {
        prof.add_component(rc.id, ComponentKind::OpenResidual, rc.multiplicity);
        long present_targets = 0;
        for (const auto& [target, count] : rc.adjacency)
            if (prof.has(target) && count > 0) {
                prof.add_adjacency(rc.id, target, count);
                ++present_targets;
            }
        // a branch through a corner where both boundary curves carry the
        // divisor makes three components meet in one point: not a normal
        // crossing configuration, so no simply-laced dual graph represents it
        if (rc.at_corner && present_targets >= 2)
            prof.degeneracies.push_back("three components through one point at " + rc.id);
    }

    prof.finalize();
    return prof;
}

}  // namespace kleinian
