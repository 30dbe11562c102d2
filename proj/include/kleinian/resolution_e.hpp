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

#include <optional>

#include "resolution_a.hpp"

namespace kleinian {

// For an E-type group the central quotient acts on the exceptional line of
// the blown-up plane, and the projective group quotient is a degree-|Gbar|
// map of P^1 given by a pair of invariant forms. Its three critical values
// carry the whole divisor structure: the central curve has multiplicity
// m = deg(X)/2 and each critical value v_j contributes a chain of b_j - 1
// curves with multiplicities m - mk/b_j (finite values) or m - k (the value
// under the transform of X itself).

/// One critical value of the quotient map. With the integer-normalized
/// invariants the two finite values of the tetrahedral map are a conjugate
/// pair, irrational over the working field; they are certified jointly via
/// the quadratic fiber product (T^2 - sigma1 T + sigma2 at T = phi1/phi2).
struct CriticalValue {
    std::string label;            // "v1", "v2", "vinf"
    bool at_infinity = false;     // [1 : 0]
    bool conjugate_pair = false;  // this entry stands for two values v1, v2
    CycloNum s;                   // finite value [s : 1]
    CycloNum sigma1, sigma2;      // pair data: values are roots of T^2 - sigma1 T + sigma2
    unsigned branch_index = 0;
    unsigned fiber_size = 0;      // distinct critical points per value
};

struct BranchData {
    GroupSpec spec;
    BiPoly phi1, phi2;  // homogeneous of degree |Gbar|
    long m = 0;         // deg(X)/2
    unsigned b1 = 0, b2 = 0, binf = 0;
    std::vector<CriticalValue> values;
    std::string scaling_note;  // how the critical values were rescaled
};

/// The quotient-map form pair of the normalized invariants:
/// E6 (Z, X^2), E7 (Y^2, X^3), E8 (Y^3, X^5).
inline std::pair<BiPoly, BiPoly> quotient_map(const InvariantTriple& t) {
    switch (t.spec.kind) {
        case GroupKind::E6: return {t.z, t.x.pow(2)};
        case GroupKind::E7: return {t.y.pow(2), t.x.pow(3)};
        case GroupKind::E8: return {t.y.pow(3), t.x.pow(5)};
        default: throw std::invalid_argument("quotient_map needs an E-type group");
    }
}

namespace detail {

/// Expects every root of the (homogeneous) fiber form to carry one common
/// multiplicity; returns (that multiplicity, number of distinct roots).
inline std::pair<unsigned, unsigned> uniform_fiber_pattern(const BiPoly& fiber,
                                                           const std::string& what) {
    auto pat = binary_form_pattern(fiber);
    if (pat.size() != 1)
        throw std::runtime_error("fiber over " + what +
                                 " has mixed multiplicities: wrong normalization");
    return {pat.begin()->first, pat.begin()->second};
}

}  // namespace detail

/// Critical values, branch indices and fiber sizes of the quotient map,
/// derived from the syzygy and certified by multiplicity patterns. The
/// completeness of the three values is certified by the Hurwitz count
/// sum_j (b_j - 1) |fiber_j| = 2|Gbar| - 2, which an extra critical value
/// would violate.
inline BranchData branch_data(const GroupSpec& g) {
    if (g.kind != GroupKind::E6 && g.kind != GroupKind::E7 && g.kind != GroupKind::E8)
        throw std::invalid_argument("branch_data needs an E-type group");
    InvariantTriple t = invariant_triple(g);
    const CycloField& f = *t.field;
    Syzygy syz = solve_syzygy(t);
    // syzygy normalized as X^a + beta * Y^3 + gamma * Z^2 = 0
    CycloNum beta = syz.coefficients[1], gamma = syz.coefficients[2];

    BranchData bd;
    bd.spec = g;
    auto [phi1, phi2] = quotient_map(t);
    bd.phi1 = phi1;
    bd.phi2 = phi2;
    long gbar = build_group(g).order() / 2;
    if (phi1.total_degree() != gbar || phi2.total_degree() != gbar)
        throw std::logic_error("quotient map degree != |Gbar|");
    bd.m = t.degrees[0] / 2;

    // X itself must be squarefree: its linear factors are all distinct.
    for (const auto& [mult, count] : binary_form_pattern(t.x))
        if (mult != 1) throw std::runtime_error("X is not squarefree");

    // Every root of a fiber form carries the branch index as multiplicity.
    // For a conjugate pair the product form is analyzed: each root lies in
    // exactly one of the two fibers, so the common multiplicity is still the
    // branch index while the distinct-root count covers both fibers.
    auto push_value = [&](CriticalValue v, const BiPoly& fiber) {
        auto [mult, distinct] = detail::uniform_fiber_pattern(fiber, v.label);
        v.branch_index = mult;
        unsigned values_here = v.conjugate_pair ? 2 : 1;
        if (distinct % values_here != 0)
            throw std::runtime_error("conjugate-pair fiber sizes do not split evenly");
        v.fiber_size = distinct / values_here;
        if (static_cast<long>(v.fiber_size) * v.branch_index != gbar)
            throw std::runtime_error("fiber size * branch index != |Gbar| over " + v.label);
        bd.values.push_back(std::move(v));
    };

    switch (g.kind) {
        case GroupKind::E6: {
            // finite pair: roots of T^2 + 1/gamma; product fiber is a Y^3 multiple
            CriticalValue pair;
            pair.label = "v1,v2";
            pair.conjugate_pair = true;
            pair.sigma1 = CycloNum::zero(f);
            pair.sigma2 = gamma.invert();
            BiPoly pf = phi1 * phi1 - pair.sigma1 * (phi1 * phi2) + pair.sigma2 * (phi2 * phi2);
            BiPoly expected = -(beta / gamma) * t.y.pow(3);
            if (!(pf == expected))
                throw std::logic_error("pair fiber does not reduce to the Y-power");
            push_value(pair, pf);
            bd.scaling_note = "finite critical values are the conjugate pair T^2 = -" +
                              pair.sigma2.to_string() + " (classical [i,1],[-i,1] rescaled)";
            break;
        }
        case GroupKind::E7:
        case GroupKind::E8: {
            CriticalValue v1;
            v1.label = "v1";
            v1.s = CycloNum::zero(f);
            push_value(v1, phi1);  // fiber over [0 : 1] is phi1
            CriticalValue v2;
            v2.label = "v2";
            v2.s = -(beta.invert());
            BiPoly fiber = phi1 - v2.s * phi2;
            push_value(v2, fiber);
            bd.scaling_note = "finite critical value v2 = [" + v2.s.to_string() +
                              " : 1] (classical second value rescaled)";
            break;
        }
        default: break;
    }
    // value at infinity [1 : 0]: fiber is phi2, a power of X
    CriticalValue vinf;
    vinf.label = "vinf";
    vinf.at_infinity = true;
    push_value(vinf, phi2);

    // branch indices in table order
    if (g.kind == GroupKind::E6) {
        bd.b1 = bd.b2 = bd.values[0].branch_index;
        bd.binf = bd.values[1].branch_index;
    } else {
        bd.b1 = bd.values[0].branch_index;
        bd.b2 = bd.values[1].branch_index;
        bd.binf = bd.values[2].branch_index;
    }

    // Hurwitz count certifies there is no further critical value.
    long hurwitz = 0;
    for (const auto& v : bd.values) {
        long per = static_cast<long>(v.branch_index - 1) * v.fiber_size;
        hurwitz += v.conjugate_pair ? 2 * per : per;
    }
    if (hurwitz != 2 * gbar - 2)
        throw std::runtime_error("Hurwitz count mismatch: critical values incomplete");

    if (bd.m != static_cast<long>(bd.binf) + 1)
        throw std::runtime_error("m != b_inf + 1");
    if (bd.m % bd.b1 != 0 || bd.m % bd.b2 != 0)
        throw std::runtime_error("b_1 or b_2 does not divide m");
    return bd;
}

/// Divisor profile of F = X on an E-type quotient resolution, assembled from
/// the branch data: central curve of multiplicity m, one chain per critical
/// value, and the open transform of (X = 0) attached at the end of the
/// chain over the value at infinity.
inline DivisorProfile divisor_profile_E(const GroupSpec& g) {
    BranchData bd = branch_data(g);
    DivisorProfile prof;
    prof.add_component("e", ComponentKind::Exceptional, bd.m);

    auto chain = [&](const std::string& stem, unsigned b, bool to_infinity) {
        std::string prev = "e";
        for (unsigned k = 1; k < b; ++k) {
            long mult = to_infinity ? bd.m - static_cast<long>(k)
                                    : bd.m - (bd.m * static_cast<long>(k)) / b;
            if (!to_infinity && (bd.m * static_cast<long>(k)) % b != 0)
                throw std::logic_error("non-integer chain multiplicity: divisibility broken");
            if (mult <= 0) throw std::logic_error("non-positive chain multiplicity");
            std::string id = stem + "." + std::to_string(k);
            prof.add_component(id, ComponentKind::Exceptional, mult);
            prof.add_adjacency(prev, id);
            prev = id;
        }
        return prev;
    };
    chain("v1", bd.b1, false);
    chain("v2", bd.b2, false);
    std::string tail = chain("vinf", bd.binf, true);
    prof.add_component("d", ComponentKind::OpenResidual, 1);
    prof.add_adjacency(tail, "d");
    prof.finalize();
    return prof;
}

/// Decision data for an arbitrary invariant candidate on an E-type quotient.
/// The germ profile is determined by two exactly computable facts: the
/// multiplicity of the candidate along the central curve (order at the
/// origin over two) and the tangent cone. The profile equals F's if and only
/// if the order equals deg(X) and the tangent cone is a nonzero multiple of
/// X: the cone's roots are then exactly the fiber over the value at
/// infinity, all simple, and every chain multiplicity is forced by the
/// chart valuations independently of higher-order terms.
struct ECandidateDecision {
    bool accepted = false;
    std::string reason;
    long central_multiplicity = 0;  // order/2
    std::optional<DivisorProfile> profile;
};

inline ECandidateDecision e_candidate_decision(const BiPoly& cand, const GroupSpec& g) {
    if (cand.is_zero()) throw std::invalid_argument("zero candidate");
    InvariantTriple t = invariant_triple(g);
    ECandidateDecision dec;
    long ord = cand.order();
    if (ord % 2 != 0)
        throw std::logic_error("invariant candidate with odd order at the origin");
    dec.central_multiplicity = ord / 2;
    long m = t.degrees[0] / 2;
    if (dec.central_multiplicity != m) {
        dec.reason = "central curve multiplicity " + std::to_string(dec.central_multiplicity) +
                     " != " + std::to_string(m);
        return dec;
    }
    BiPoly cone = cand.homogeneous_part(ord);
    // proportionality to X
    const auto& [e0, c0] = *t.x.terms().begin();
    CycloNum ratio = cone.coefficient(e0.first, e0.second) * c0.invert();
    if (!ratio.is_zero() && cone == ratio * t.x) {
        dec.accepted = true;
        dec.profile = divisor_profile_E(g);
        return dec;
    }
    // evidence: how many tangent directions are shared with the X-fiber
    UniPoly a = cone.dehomogenize(1), b = t.x.dehomogenize(1);
    long shared = (a.is_zero() || b.is_zero()) ? 0 : gcd(a, b).degree();
    dec.reason = "tangent cone is not a multiple of X (shares " + std::to_string(shared) + " of " +
                 std::to_string(b.degree()) + " finite tangent directions)";
    return dec;
}

}  // namespace kleinian
