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

#include <chrono>
#include <future>
#include <random>

#include <json.hpp>

#include "expr.hpp"
#include "mckay.hpp"
#include "resolution_a.hpp"
#include "resolution_d.hpp"
#include "resolution_e.hpp"

namespace kleinian {

using json = nlohmann::ordered_json;

struct CheckResult {
    std::string name;
    bool pass;
    std::string details;
    double millis = 0.0;
};

struct VerificationReport {
    GroupSpec spec;
    std::string c_literal;  // D-type parameter, printed form
    bool degenerate = false;
    std::string degenerate_reason;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;
    DivisorProfile profile;
    std::optional<MatchResult> diagram_match;

    bool pass() const {
        if (degenerate) return false;
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

template <typename F>
void run_check(VerificationReport& rep, const std::string& name, F&& body) {
    Stopwatch sw;
    CheckResult cr;
    cr.name = name;
    try {
        auto [ok, details] = body();
        cr.pass = ok;
        cr.details = details;
    } catch (const std::exception& e) {
        cr.pass = false;
        cr.details = std::string("exception: ") + e.what();
    }
    cr.millis = sw.ms();
    rep.checks.push_back(std::move(cr));
}

inline std::string marks_to_string(const std::vector<long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace detail

/// Result of one uniqueness probe: a candidate local function given as a
/// polynomial in X, Y, Z, judged by its computed divisor profile.
struct ProbeResult {
    std::string candidate;
    bool accepted = false;
    std::string reason;  // mismatch reason when rejected
    bool profile_equals_reference = false;
    std::optional<CycloNum> recovered_c;  // D-type only
    DivisorProfile profile;
};

/// Expands a candidate and decides the affine-diagram property of its
/// divisor. For D-type candidates the parameter c of the reference function
/// is recovered from the crossing coordinate of the residual curve.
inline ProbeResult uniqueness_probe(const GroupSpec& spec, const XyzPoly& candidate,
                                    const std::string& printed) {
    if (spec.kind == GroupKind::A && spec.r == 1)
        throw std::invalid_argument("uniqueness tooling excludes A_1");
    ProbeResult pr;
    pr.candidate = printed;
    InvariantTriple t = invariant_triple(spec);
    BiPoly expanded = expand_xyz(candidate, t);
    if (expanded.is_zero()) {
        pr.reason = "candidate expands to zero";
        return pr;
    }
    // guard: X/Y/Z expressions are invariant by construction; check anyway
    for (const auto& gen : generators(spec, *t.field))
        if (!(substitute_linear(expanded, gen) == expanded)) {
            pr.reason = "candidate is not invariant";
            return pr;
        }

    AffineDiagram diagram = affine_diagram(spec);
    switch (spec.kind) {
        case GroupKind::A: {
            pr.profile = divisor_profile_A(expanded, spec.r);
            auto m = match_profile(pr.profile, diagram);
            pr.accepted = m.ok;
            pr.reason = m.reason;
            if (pr.accepted)
                pr.profile_equals_reference = (pr.profile == divisor_profile_A(t.x, spec.r));
            break;
        }
        case GroupKind::D: {
            auto res = divisor_profile_D_poly(expanded, spec.r);
            pr.profile = res.profile;
            auto m = match_profile(pr.profile, diagram);
            pr.accepted = m.ok;
            pr.reason = m.reason;
            if (res.rho_coordinate && !res.rho_coordinate->is_zero())
                pr.recovered_c = recover_c_from_rho(*res.rho_coordinate);
            if (pr.accepted && pr.recovered_c) {
                BiPoly ref = t.x + *pr.recovered_c * t.y;
                pr.profile_equals_reference =
                    (pr.profile == divisor_profile_D_poly(ref, spec.r).profile);
            }
            break;
        }
        default: {  // E types
            auto dec = e_candidate_decision(expanded, spec);
            pr.accepted = dec.accepted;
            pr.reason = dec.reason;
            if (dec.profile) {
                pr.profile = *dec.profile;
                pr.profile_equals_reference = (pr.profile == divisor_profile_E(spec));
            }
            break;
        }
    }
    return pr;
}

/// Deterministic admissible D-type parameters drawn from a seeded generator
/// (small rationals, never 0 or +-1).
inline std::vector<Rational> sample_c_values(int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < count) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        if (c == 0 || c == 1 || c == -1) continue;
        bool dup = false;
        for (const auto& q : out) dup |= (q == c);
        if (!dup) out.push_back(c);
    }
    return out;
}

/// The full verification pipeline for one group: order and relations,
/// invariance, syzygy, divisor profile, diagram match, Cartan null-vector
/// oracle, McKay oracle, and (optionally) uniqueness probes.
inline VerificationReport run_verify(const GroupSpec& spec, std::optional<CycloNum> c_param,
                                     bool with_probes = true, unsigned seed = 1) {
    VerificationReport rep;
    rep.spec = spec;
    validate_spec(spec);
    const CycloField& field = CycloField::get(field_order_for(spec));

    if (spec.kind == GroupKind::D) {
        if (!c_param) c_param = CycloNum::rational(field, sample_c_values(1, seed).front());
        rep.c_literal = c_param->to_string();
        auto verdict = degenerate_check(*c_param, spec.r);
        if (!verdict.pass) {
            rep.degenerate = true;
            rep.degenerate_reason = verdict.reason;
            return rep;
        }
    }
    if (spec.kind == GroupKind::E6 || spec.kind == GroupKind::E7)
        rep.notes.push_back("mu generator normalized to determinant 1 (lower-right entry zeta_8)");

    GroupData group = build_group(spec);
    InvariantTriple triple = invariant_triple(spec);

    detail::run_check(rep, "group order", [&]() -> std::pair<bool, std::string> {
        long expected = expected_order(spec);
        return {group.order() == expected,
                "|G| = " + std::to_string(group.order()) + ", expected " + std::to_string(expected) +
                    "; |Gbar| = " + std::to_string(group.projective_order()) + "; " +
                    std::to_string(group.classes.size()) + " conjugacy classes"};
    });

    detail::run_check(rep, "generator relations", [&]() -> std::pair<bool, std::string> {
        auto rels = check_relations(spec);
        std::string bad;
        for (const auto& r : rels)
            if (!r.holds) bad += r.relation + "; ";
        return {bad.empty(), bad.empty() ? std::to_string(rels.size()) + " relations hold" : bad};
    });

    detail::run_check(rep, "invariant degrees", [&]() -> std::pair<bool, std::string> {
        std::array<long, 3> expected{};
        switch (spec.kind) {
            case GroupKind::A: expected = {2, spec.r + 1, spec.r + 1}; break;
            case GroupKind::D: expected = {4, 2L * spec.r - 4, 2L * spec.r - 2}; break;
            case GroupKind::E6: expected = {6, 8, 12}; break;
            case GroupKind::E7: expected = {8, 12, 18}; break;
            case GroupKind::E8: expected = {12, 20, 30}; break;
        }
        return {triple.degrees == expected,
                "deg(X, Y, Z) = " + detail::marks_to_string({triple.degrees[0], triple.degrees[1],
                                                             triple.degrees[2]})};
    });

    detail::run_check(rep, "G-invariance of X, Y, Z", [&]() -> std::pair<bool, std::string> {
        auto r = verify_invariance(triple, group);
        return {r.all_pass, r.all_pass ? "fixed by all " + std::to_string(group.order()) + " elements"
                                       : r.failures.front()};
    });

    detail::run_check(rep, "syzygy", [&]() -> std::pair<bool, std::string> {
        Syzygy s = solve_syzygy(triple);
        if (!syzygy_expansion(triple, s).is_zero()) return {false, "expansion not zero"};
        std::string shown;
        for (std::size_t i = 0; i < s.monomials.size(); ++i) {
            const auto& m = s.monomials[i];
            shown += (i ? " + " : "") + ("(" + s.coefficients[i].to_string() + ")") + "*X^" +
                     std::to_string(m[0]) + "Y^" + std::to_string(m[1]) + "Z^" +
                     std::to_string(m[2]);
        }
        bool exact_form = true;
        if (spec.kind == GroupKind::A)
            exact_form = s.coefficients[1] == -CycloNum::one(field);
        if (spec.kind == GroupKind::D)
            exact_form = s.coefficients[1] == -CycloNum::one(field) &&
                         s.coefficients[2] == CycloNum::one(field);
        // spot-check at sample rational points (fixed internal seed; the
        // caller's seed only drives sampled-parameter selection)
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<long> coord(-5, 5);
        for (int trial = 0; trial < 5; ++trial) {
            CycloNum z1 = CycloNum::rational(field, rat(coord(rng), 2));
            CycloNum z2 = CycloNum::rational(field, rat(coord(rng), 3));
            CycloNum acc = CycloNum::zero(field);
            for (std::size_t i = 0; i < s.monomials.size(); ++i)
                acc += s.coefficients[i] *
                       expand_xyz_monomial(triple, s.monomials[i][0], s.monomials[i][1],
                                           s.monomials[i][2])
                           .evaluate(z1, z2);
            if (!acc.is_zero()) return {false, "relation fails at a sample point"};
        }
        return {exact_form, shown + " = 0"};
    });

    // ---- divisor profile ----
    AffineDiagram diagram = affine_diagram(spec);
    switch (spec.kind) {
        case GroupKind::A: {
            detail::run_check(rep, "divisor description of X, Y, Z",
                              [&]() -> std::pair<bool, std::string> {
                long r = spec.r;
                bool ok = true;
                for (long j = 1; j <= r; ++j) {
                    ok &= valuation_A(triple.x, r, AComponentRef::l(j)) == 1;
                    ok &= valuation_A(triple.y, r, AComponentRef::l(j)) == r + 1 - j;
                    ok &= valuation_A(triple.z, r, AComponentRef::l(j)) == j;
                }
                ok &= valuation_A(triple.x, r, AComponentRef::c0()) == 1;
                ok &= valuation_A(triple.x, r, AComponentRef::c_last()) == 1;
                ok &= valuation_A(triple.y, r, AComponentRef::c0()) == r + 1;
                ok &= valuation_A(triple.y, r, AComponentRef::c_last()) == 0;
                ok &= valuation_A(triple.z, r, AComponentRef::c0()) == 0;
                ok &= valuation_A(triple.z, r, AComponentRef::c_last()) == r + 1;
                return {ok, "X: all 1; Y: (r+1, r, ..., 1, 0); Z: (0, 1, ..., r, r+1)"};
            });
            rep.profile = divisor_profile_A(triple.x, spec.r);
            break;
        }
        case GroupKind::D: {
            detail::run_check(rep, "cover divisor of F", [&]() -> std::pair<bool, std::string> {
                BiPoly F = triple.x + *c_param * triple.y;
                DCoverData cov = d_cover_data(F, spec.r);
                bool ok = cov.alpha_mult[0] == 2 && cov.alpha_mult[1] == 2;
                long h = cov.h;
                ok &= cov.l_val[1] == 1 && cov.l_val[static_cast<std::size_t>(h)] == 1;
                for (long j = 2; j < h; ++j) ok &= cov.l_val[static_cast<std::size_t>(j)] == 2;
                ok &= cov.c0_val == 0;
                return {ok, "l_1 + l_h + 2(l_2 + ... + l_{h-1}) + doubled fixed points"};
            });
            rep.profile = divisor_profile_D(*c_param, spec.r);
            break;
        }
        default: {
            detail::run_check(rep, "branch data", [&]() -> std::pair<bool, std::string> {
                BranchData bd = branch_data(spec);
                std::array<unsigned, 3> expected{};
                long em = 0;
                if (spec.kind == GroupKind::E6) expected = {3, 3, 2}, em = 3;
                if (spec.kind == GroupKind::E7) expected = {4, 2, 3}, em = 4;
                if (spec.kind == GroupKind::E8) expected = {3, 2, 5}, em = 6;
                bool ok = bd.b1 == expected[0] && bd.b2 == expected[1] && bd.binf == expected[2] &&
                          bd.m == em && bd.m == static_cast<long>(bd.binf) + 1;
                return {ok, "b = (" + std::to_string(bd.b1) + ", " + std::to_string(bd.b2) + ", " +
                                std::to_string(bd.binf) + "), m = " + std::to_string(bd.m) + "; " +
                                bd.scaling_note};
            });
            rep.profile = divisor_profile_E(spec);
            break;
        }
    }

    detail::run_check(rep, "diagram match", [&]() -> std::pair<bool, std::string> {
        auto m = match_profile(rep.profile, diagram);
        rep.diagram_match = m;
        if (!m.ok) return {false, m.reason};
        std::string s = "profile ~ " + diagram.spec.name() + " affine diagram; oplus <- ";
        s += m.mapping.at(diagram.ids[diagram.oplus]);
        return {true, s};
    });

    detail::run_check(rep, "Cartan null-vector oracle", [&]() -> std::pair<bool, std::string> {
        auto nv = null_vector(cartan_matrix(diagram));
        bool ok = true;
        for (std::size_t i = 0; i < nv.size(); ++i) ok &= nv[i] == diagram.marks[i];
        return {ok, "printed marks = kernel marks = " + detail::marks_to_string(nv)};
    });

    detail::run_check(rep, "McKay oracle", [&]() -> std::pair<bool, std::string> {
        auto cd = character_data(group);
        auto mg = mckay_graph(group, cd);
        long burnside = 0;
        bool rows_ok = true;
        for (std::size_t i = 0; i < mg.dimensions.size(); ++i) {
            burnside += mg.dimensions[i] * mg.dimensions[i];
            long s = 0;
            for (std::size_t j = 0; j < mg.dimensions.size(); ++j)
                s += mg.adjacency[i][j] * mg.dimensions[j];
            rows_ok &= (s == 2 * mg.dimensions[i]);
        }
        bool ok = (burnside == group.order()) && rows_ok;
        auto iso = match_marked_graphs(to_marked_graph(diagram), to_marked_graph(mg));
        ok &= iso.ok;
        std::vector<long> dims = mg.dimensions;
        std::sort(dims.begin(), dims.end());
        std::vector<long> marks = diagram.marks;
        std::sort(marks.begin(), marks.end());
        ok &= (dims == marks);
        return {ok, "p = " + std::to_string(cd.p) + "; dimensions " + detail::marks_to_string(dims) +
                        "; sum d^2 = " + std::to_string(burnside) +
                        (iso.ok ? "; graph ~ diagram, trivial <-> oplus" : "; " + iso.reason)};
    });

    if (with_probes && !(spec.kind == GroupKind::A && spec.r == 1)) {
        detail::run_check(rep, "uniqueness probes", [&]() -> std::pair<bool, std::string> {
            const CycloField& f = field;
            XyzPoly X = XyzPoly::variable(f, 0), Y = XyzPoly::variable(f, 1),
                    Z = XyzPoly::variable(f, 2);
            XyzPoly one = XyzPoly::constant(f, Rational(1));
            XyzPoly F = X;
            std::string fname = "X";
            if (spec.kind == GroupKind::D) {
                XyzPoly cY(f);
                for (const auto& [e, co] : Y.terms) cY.add_term(e, *c_param * co);
                F = X + cY;
                fname = "X + c Y";
            }
            std::vector<std::pair<std::string, XyzPoly>> units = {
                {"1", one},
                {"1 + X", one + X},
                {"2 - Y", XyzPoly::constant(f, Rational(2)) - Y},
                {"1/2 + Z + X", XyzPoly::constant(f, Rational(1, 2)) + Z + X},
                {"3 + X*Y", XyzPoly::constant(f, Rational(3)) + X * Y},
            };
            int ok_count = 0;
            std::string details;
            for (const auto& [uname, u] : units) {
                ProbeResult pr = uniqueness_probe(spec, u * F, "(" + uname + ")*(" + fname + ")");
                bool good = pr.accepted && pr.profile_equals_reference;
                if (spec.kind == GroupKind::D) {
                    good &= pr.recovered_c.has_value() && *pr.recovered_c == *c_param;
                }
                if (good) ++ok_count;
                else details += "unit probe '" + uname + "' failed (" + pr.reason + "); ";
            }
            // For D_4 pure Y is not adversarial: it is the quartic pencil's
            // member at infinity and genuinely carries the fork
            // configuration, so the D-type list replaces it.
            std::vector<std::pair<std::string, XyzPoly>> adversarial = {
                {"Y", Y}, {"Z", Z}, {"Y + Z", Y + Z}, {"X*Y", X * Y}, {"X^2", X * X}};
            if (spec.kind == GroupKind::D)
                adversarial = {{"Z", Z}, {"X", X}, {"X + X*Y", X + X * Y}, {"X*Y", X * Y},
                               {"X^2", X * X}};
            int rejected = 0;
            for (const auto& [aname, a] : adversarial) {
                ProbeResult pr = uniqueness_probe(spec, a, aname);
                if (!pr.accepted) ++rejected;
                else details += "adversarial probe '" + aname + "' was accepted; ";
            }
            bool ok = ok_count == 5 && rejected == 5;
            return {ok, ok ? "5 unit multiples accepted with F's profile; 5 adversarial "
                             "candidates rejected"
                           : details};
        });
    } else if (spec.kind == GroupKind::A && spec.r == 1) {
        rep.notes.push_back("uniqueness tooling excludes A_1 (all three invariants quadratic)");
    }

    return rep;
}

// ---- serialization ----

inline json profile_to_json(const DivisorProfile& p, const MatchResult* match,
                            const std::string& diagram_kind) {
    json comps = json::array();
    for (const auto& c : p.components)
        comps.push_back(json{{"id", c.id},
                             {"kind", c.kind == ComponentKind::Exceptional ? "exceptional" : "open"},
                             {"multiplicity", c.multiplicity}});
    json adj = json::array();
    for (const auto& [e, n] : p.adjacency) adj.push_back(json::array({e.first, e.second, n}));
    json out{{"components", comps}, {"adjacency", adj}};
    if (match && match->ok) {
        json mapping = json::object();
        for (const auto& [k, v] : match->mapping) mapping[k] = v;
        out["diagram_match"] = json{{"kind", diagram_kind}, {"mapping", mapping}};
    } else {
        out["diagram_match"] = nullptr;
    }
    return out;
}

inline json diagram_to_json(const AffineDiagram& d) {
    json nodes = json::array();
    for (std::size_t i = 0; i < d.size(); ++i)
        nodes.push_back(json{{"id", d.ids[i]}, {"mark", d.marks[i]}, {"oplus", i == d.oplus}});
    json edges = json::array();
    for (const auto& [e, n] : d.edges)
        edges.push_back(json::array({d.ids[e.first], d.ids[e.second], n}));
    auto nv = null_vector(cartan_matrix(d));
    json marks = json::object();
    for (std::size_t i = 0; i < nv.size(); ++i) marks[d.ids[i]] = nv[i];
    return json{{"kind", d.spec.name()},
                {"kodaira_label", d.kodaira_label},
                {"nodes", nodes},
                {"edges", edges},
                {"cartan_null_vector", marks}};
}

inline json mckay_to_json(const GroupSpec& spec, const ModularCharacterData& cd,
                          const McKayGraph& mg) {
    json adj = json::array();
    for (std::size_t i = 0; i < mg.dimensions.size(); ++i)
        for (std::size_t j = i + 1; j < mg.dimensions.size(); ++j)
            if (mg.adjacency[i][j]) adj.push_back(json::array({i, j, mg.adjacency[i][j]}));
    return json{{"group", spec.name()},
                {"prime", cd.p},
                {"dimensions", mg.dimensions},
                {"trivial_node", mg.trivial_node},
                {"adjacency", adj}};
}

inline json report_to_json(const VerificationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name},
                              {"pass", c.pass},
                              {"details", c.details},
                              {"ms", static_cast<long>(c.millis * 100) / 100.0}});
    json out{{"target", rep.spec.name()}};
    if (!rep.c_literal.empty()) out["c"] = rep.c_literal;
    out["degenerate"] = rep.degenerate;
    if (rep.degenerate) out["degenerate_reason"] = rep.degenerate_reason;
    out["pass"] = rep.pass();
    out["checks"] = checks;
    out["notes"] = rep.notes;
    if (!rep.degenerate)
        out["profile"] = profile_to_json(rep.profile,
                                         rep.diagram_match ? &*rep.diagram_match : nullptr,
                                         rep.spec.name());
    return out;
}

/// DOT rendering of a marked graph: undirected, node label "name:mark", the
/// distinguished node drawn with a distinct shape.
inline std::string marked_graph_to_dot(const MarkedGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n  node [shape=circle];\n";
    for (std::size_t i = 0; i < g.ids.size(); ++i) {
        os << "  \"" << g.ids[i] << "\" [label=\"" << g.ids[i] << ":" << g.marks[i] << "\"";
        if (g.special && *g.special == i) os << ", shape=doublecircle";
        os << "];\n";
    }
    for (const auto& [e, n] : g.edges)
        for (long k = 0; k < n; ++k)
            os << "  \"" << g.ids[e.first] << "\" -- \"" << g.ids[e.second] << "\";\n";
    os << "}\n";
    return os.str();
}

inline std::string diagram_to_dot(const AffineDiagram& d) {
    return marked_graph_to_dot(to_marked_graph(d), d.spec.name() + "~");
}

inline std::string profile_to_dot(const DivisorProfile& p, const std::string& name) {
    MarkedGraph g;
    std::map<std::string, std::size_t> index;
    std::optional<std::size_t> open_node;
    for (const auto& c : p.components) {
        index[c.id] = g.ids.size();
        g.ids.push_back(c.id);
        g.marks.push_back(c.multiplicity);
        if (c.kind != ComponentKind::Exceptional && !open_node) open_node = index[c.id];
    }
    g.special = open_node;
    for (const auto& [e, n] : p.adjacency) {
        std::size_t i = index.at(e.first), j = index.at(e.second);
        if (i > j) std::swap(i, j);
        g.edges[{i, j}] += n;
    }
    return marked_graph_to_dot(g, name);
}

/// All verification targets of the full sweep: A_2..A_10, D_4..D_8 with
/// three sampled parameters each, E6, E7, E8.
struct VerifyTarget {
    GroupSpec spec;
    std::optional<Rational> c;
    std::string name() const {
        return spec.name() + (c ? " c=" + c->get_str() : "");
    }
};

inline std::vector<VerifyTarget> all_targets(unsigned seed) {
    std::vector<VerifyTarget> targets;
    for (int r = 2; r <= 10; ++r) targets.push_back({{GroupKind::A, r}, std::nullopt});
    for (int r = 4; r <= 8; ++r)
        for (const auto& c : sample_c_values(3, seed + static_cast<unsigned>(r)))
            targets.push_back({{GroupKind::D, r}, c});
    targets.push_back({{GroupKind::E6, 0}, std::nullopt});
    targets.push_back({{GroupKind::E7, 0}, std::nullopt});
    targets.push_back({{GroupKind::E8, 0}, std::nullopt});
    return targets;
}

/// Runs every target concurrently; reports come back in canonical order.
inline std::vector<VerificationReport> run_verify_all(unsigned seed, bool with_probes = true) {
    auto targets = all_targets(seed);
    std::vector<std::future<VerificationReport>> futures;
    futures.reserve(targets.size());
    for (const auto& t : targets)
        futures.push_back(std::async(std::launch::async, [t, with_probes, seed]() {
            std::optional<CycloNum> c;
            if (t.c) {
                const CycloField& f = CycloField::get(field_order_for(t.spec));
                c = CycloNum::rational(f, *t.c);
            }
            return run_verify(t.spec, c, with_probes, seed);
        }));
    std::vector<VerificationReport> reports;
    reports.reserve(futures.size());
    for (auto& f : futures) reports.push_back(f.get());
    return reports;
}

}  // namespace kleinian
