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

#include "divisor.hpp"
#include "groups.hpp"

namespace kleinian {

/// Marked affine A-D-E graph. The distinguished node (the affine extension,
/// written oplus throughout) always carries mark 1.
struct AffineDiagram {
    GroupSpec spec;
    std::vector<std::string> ids;
    std::vector<long> marks;
    std::map<std::pair<std::size_t, std::size_t>, long> edges;  // i < j -> count
    std::size_t oplus = 0;
    std::string kodaira_label;  // elliptic-fiber label, metadata only

    std::size_t size() const { return ids.size(); }
    void add_edge(std::size_t i, std::size_t j, long count = 1) {
        if (i > j) std::swap(i, j);
        edges[{i, j}] += count;
    }
    long edge(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        auto it = edges.find({i, j});
        return it == edges.end() ? 0 : it->second;
    }
};

/// The affine diagram of one Kleinian type with its printed marks.
inline AffineDiagram affine_diagram(const GroupSpec& g) {
    validate_spec(g);
    AffineDiagram d;
    d.spec = g;
    auto node = [&](const std::string& id, long mark) {
        d.ids.push_back(id);
        d.marks.push_back(mark);
        return d.ids.size() - 1;
    };
    switch (g.kind) {
        case GroupKind::A: {
            // (r+1)-cycle of marks 1; r = 1 degenerates to a double edge.
            d.kodaira_label = "I_" + std::to_string(g.r + 1);
            std::size_t op = node("oplus", 1);
            d.oplus = op;
            std::vector<std::size_t> ring{op};
            for (int j = 1; j <= g.r; ++j) ring.push_back(node("n" + std::to_string(j), 1));
            if (g.r == 1) {
                d.add_edge(ring[0], ring[1], 2);
            } else {
                for (std::size_t i = 0; i < ring.size(); ++i)
                    d.add_edge(ring[i], ring[(i + 1) % ring.size()]);
            }
            break;
        }
        case GroupKind::D: {
            // two mark-1 forks at each end of a chain of marks 2
            d.kodaira_label = "I*_" + std::to_string(g.r - 4);
            std::size_t op = node("oplus", 1);
            d.oplus = op;
            std::size_t f = node("f", 1);
            std::size_t prev = node("n2", 2);
            d.add_edge(op, prev);
            d.add_edge(f, prev);
            for (int j = 3; j <= g.r - 2; ++j) {
                std::size_t nj = node("n" + std::to_string(j), 2);
                d.add_edge(prev, nj);
                prev = nj;
            }
            d.add_edge(prev, node("g1", 1));
            d.add_edge(prev, node("g2", 1));
            break;
        }
        case GroupKind::E6: {
            d.kodaira_label = "IV*";
            std::size_t c = node("c", 3);
            std::size_t a1 = node("a1", 2), a2 = node("a2", 1);
            std::size_t b1 = node("b1", 2), b2 = node("b2", 1);
            std::size_t d1 = node("d1", 2), op = node("oplus", 1);
            d.oplus = op;
            d.add_edge(c, a1);
            d.add_edge(a1, a2);
            d.add_edge(c, b1);
            d.add_edge(b1, b2);
            d.add_edge(c, d1);
            d.add_edge(d1, op);
            break;
        }
        case GroupKind::E7: {
            d.kodaira_label = "III*";
            std::size_t c = node("c", 4);
            std::size_t a1 = node("a1", 3), a2 = node("a2", 2), a3 = node("a3", 1);
            std::size_t b1 = node("b1", 2);
            std::size_t d1 = node("d1", 3), d2 = node("d2", 2), op = node("oplus", 1);
            d.oplus = op;
            d.add_edge(c, a1);
            d.add_edge(a1, a2);
            d.add_edge(a2, a3);
            d.add_edge(c, b1);
            d.add_edge(c, d1);
            d.add_edge(d1, d2);
            d.add_edge(d2, op);
            break;
        }
        case GroupKind::E8: {
            d.kodaira_label = "II*";
            std::size_t c = node("c", 6);
            std::size_t a1 = node("a1", 4), a2 = node("a2", 2);
            std::size_t b1 = node("b1", 3);
            std::size_t d1 = node("d1", 5), d2 = node("d2", 4), d3 = node("d3", 3),
                        d4 = node("d4", 2), op = node("oplus", 1);
            d.oplus = op;
            d.add_edge(c, a1);
            d.add_edge(a1, a2);
            d.add_edge(c, b1);
            d.add_edge(c, d1);
            d.add_edge(d1, d2);
            d.add_edge(d2, d3);
            d.add_edge(d3, d4);
            d.add_edge(d4, op);
            break;
        }
    }
    return d;
}

/// Affine Cartan matrix: 2 on the diagonal, minus the edge count off it.
inline std::vector<std::vector<long>> cartan_matrix(const AffineDiagram& d) {
    std::size_t n = d.size();
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
    for (const auto& [e, count] : d.edges) {
        c[e.first][e.second] = -count;
        c[e.second][e.first] = -count;
    }
    return c;
}

/// Exact rational kernel of an affine Cartan matrix, normalized to the
/// minimal positive integer vector. This is the independent oracle for the
/// branching marks. Throws if the kernel dimension is not 1.
inline std::vector<long> null_vector(const std::vector<std::vector<long>>& cartan) {
    std::size_t n = cartan.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(cartan[i][j]);

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = n;
        for (std::size_t i = rank; i < n; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv == n) continue;
        std::swap(m[rank], m[piv]);
        Rational inv = 1 / m[rank][col];
        for (std::size_t j = 0; j < n; ++j) m[rank][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (n - rank != 1) throw std::runtime_error("Cartan kernel dimension != 1");

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<Rational> v(n, Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < rank; ++i) v[pivot_col[i]] = -m[i][free_col];

    // scale to minimal positive integers
    mpz_class l(1);
    for (const auto& q : v) l = l / gcd(l, q.get_den()) * q.get_den();
    mpz_class g(0);
    std::vector<mpz_class> ints;
    for (const auto& q : v) {
        mpz_class t = q.get_num() * (l / q.get_den());
        ints.push_back(t);
        g = gcd(g, t);
    }
    if (g == 0) throw std::logic_error("zero null vector");
    bool negative = false;
    for (const auto& t : ints)
        if (t < 0) negative = true;
    std::vector<long> out;
    for (const auto& t : ints) {
        mpz_class s = t / g * (negative ? -1 : 1);
        if (s <= 0) throw std::runtime_error("null vector not sign-definite");
        if (!s.fits_slong_p()) throw std::runtime_error("null vector overflow");
        out.push_back(s.get_si());
    }
    return out;
}

/// A marked graph with one distinguished node: the common shape of diagrams,
/// divisor profiles, and McKay graphs for isomorphism testing.
struct MarkedGraph {
    std::vector<std::string> ids;
    std::vector<long> marks;
    std::map<std::pair<std::size_t, std::size_t>, long> edges;
    std::optional<std::size_t> special;

    long edge(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        auto it = edges.find({i, j});
        return it == edges.end() ? 0 : it->second;
    }
};

inline MarkedGraph to_marked_graph(const AffineDiagram& d) {
    MarkedGraph g;
    g.ids = d.ids;
    g.marks = d.marks;
    g.edges = d.edges;
    g.special = d.oplus;
    return g;
}

struct MatchResult {
    bool ok = false;
    std::string reason;                          // on mismatch
    std::map<std::string, std::string> mapping;  // diagram node id -> profile id
};

/// Backtracking isomorphism search between two small marked graphs (degree,
/// mark and distinguished-node pruning; sizes here never exceed 11 nodes).
inline MatchResult match_marked_graphs(const MarkedGraph& a, const MarkedGraph& b) {
    MatchResult res;
    if (a.ids.size() != b.ids.size()) {
        res.reason = "node count " + std::to_string(b.ids.size()) + " != " +
                     std::to_string(a.ids.size());
        return res;
    }
    std::size_t n = a.ids.size();
    {
        std::vector<long> ma = a.marks, mb = b.marks;
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        if (ma != mb) {
            res.reason = "mark multisets differ";
            return res;
        }
    }
    auto degree = [](const MarkedGraph& g, std::size_t i) {
        long d = 0;
        for (std::size_t j = 0; j < g.ids.size(); ++j)
            if (j != i) d += g.edge(i, j);
        return d;
    };
    std::vector<long> dega(n), degb(n);
    for (std::size_t i = 0; i < n; ++i) dega[i] = degree(a, i), degb[i] = degree(b, i);

    std::vector<std::size_t> perm(n, n);  // a-node -> b-node
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            if (a.marks[i] != b.marks[j]) continue;
            if (dega[i] != degb[j]) continue;
            bool spec_a = a.special && *a.special == i;
            bool spec_b = b.special && *b.special == j;
            if (spec_a != spec_b) continue;
            bool consistent = true;
            for (std::size_t k = 0; k < i; ++k)
                if (a.edge(i, k) != b.edge(j, perm[k])) {
                    consistent = false;
                    break;
                }
            if (!consistent) continue;
            perm[i] = j;
            used[j] = true;
            if (extend(i + 1)) return true;
            used[j] = false;
            perm[i] = n;
        }
        return false;
    };
    if (!extend(0)) {
        res.reason = "no mark/adjacency-preserving bijection";
        return res;
    }
    res.ok = true;
    for (std::size_t i = 0; i < n; ++i) res.mapping[a.ids[i]] = b.ids[perm[i]];
    return res;
}

/// DivisorProfile as a marked graph. For A-type targets the open toric
/// boundary curves are coalesced into the single distinguished node (the
/// proper transform of (F = 0) is their union); every other open component
/// stays separate. Exactly one open node may remain: it becomes the
/// distinguished node.
inline std::optional<MarkedGraph> profile_to_marked_graph(const DivisorProfile& p,
                                                          GroupKind target_kind,
                                                          std::string* err) {
    if (!p.degeneracies.empty()) {
        if (err) *err = "configuration is not normal-crossing: " + p.degeneracies.front();
        return std::nullopt;
    }
    MarkedGraph g;
    std::vector<std::string> boundary_ids;
    for (const auto& c : p.components)
        if (c.kind == ComponentKind::OpenBoundary) boundary_ids.push_back(c.id);

    bool coalesce = (target_kind == GroupKind::A) && boundary_ids.size() >= 2;
    std::map<std::string, std::size_t> index;
    std::string merged_id;
    if (coalesce) {
        long mark = -1;
        for (const auto& id : boundary_ids) {
            const Component* c = p.find(id);
            if (mark < 0) mark = c->multiplicity;
            if (c->multiplicity != mark) {
                if (err) *err = "open boundary curves carry distinct multiplicities";
                return std::nullopt;
            }
            merged_id += (merged_id.empty() ? "" : "+") + id;
        }
        g.ids.push_back(merged_id);
        g.marks.push_back(mark);
        for (const auto& id : boundary_ids) index[id] = 0;
    }
    for (const auto& c : p.components) {
        if (index.count(c.id)) continue;
        index[c.id] = g.ids.size();
        g.ids.push_back(c.id);
        g.marks.push_back(c.multiplicity);
    }
    for (const auto& [e, count] : p.adjacency) {
        std::size_t i = index.at(e.first), j = index.at(e.second);
        if (i == j) continue;  // internal edge of the coalesced node
        if (i > j) std::swap(i, j);
        g.edges[{i, j}] += count;
    }

    // exactly one open node plays the distinguished role
    std::vector<std::size_t> open_nodes;
    for (const auto& c : p.components) {
        if (c.kind == ComponentKind::Exceptional) continue;
        std::size_t idx = index.at(c.id);
        if (std::find(open_nodes.begin(), open_nodes.end(), idx) == open_nodes.end())
            open_nodes.push_back(idx);
    }
    if (open_nodes.size() != 1) {
        if (err)
            *err = "profile has " + std::to_string(open_nodes.size()) +
                   " open components after boundary coalescing; the diagram has one "
                   "distinguished node";
        return std::nullopt;
    }
    g.special = open_nodes.front();
    return g;
}

/// Graph isomorphism between a computed divisor profile (multiplicities as
/// marks, open component as the distinguished node) and an affine diagram.
inline MatchResult match_profile(const DivisorProfile& p, const AffineDiagram& d) {
    std::string err;
    auto g = profile_to_marked_graph(p, d.spec.kind, &err);
    if (!g) {
        MatchResult res;
        res.reason = err;
        return res;
    }
    return match_marked_graphs(to_marked_graph(d), *g);
}

}  // namespace kleinian
