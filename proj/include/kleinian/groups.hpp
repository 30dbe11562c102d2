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
#include <string>
#include <unordered_map>
#include <vector>

#include "bipoly.hpp"
#include "cyclotomic.hpp"

namespace kleinian {

enum class GroupKind { A, D, E6, E7, E8 };

inline std::string kind_name(GroupKind k) {
    switch (k) {
        case GroupKind::A: return "A";
        case GroupKind::D: return "D";
        case GroupKind::E6: return "E6";
        case GroupKind::E7: return "E7";
        case GroupKind::E8: return "E8";
    }
    return "?";
}

/// Group label: kind plus rank where applicable (A_r, D_r).
struct GroupSpec {
    GroupKind kind;
    int r = 0;  // rank parameter for A (r >= 1) and D (r >= 4); 6/7/8 for E

    std::string name() const {
        if (kind == GroupKind::A || kind == GroupKind::D)
            return kind_name(kind) + std::to_string(r);
        return kind_name(kind);
    }
    int rank() const {
        switch (kind) {
            case GroupKind::A:
            case GroupKind::D: return r;
            case GroupKind::E6: return 6;
            case GroupKind::E7: return 7;
            case GroupKind::E8: return 8;
        }
        return 0;
    }
};

/// Smallest cyclotomic field holding all generator entries of the group, the
/// invariants, and (for D-type) the square roots used by the fixed-point
/// analysis: A_r -> r+1; D_r -> lcm(4, 2r-4); E6, E7 -> 8; E8 -> 5.
inline unsigned field_order_for(const GroupSpec& g) {
    switch (g.kind) {
        case GroupKind::A: return static_cast<unsigned>(g.r + 1);
        case GroupKind::D: return static_cast<unsigned>(lcm_long(4, 2L * g.r - 4));
        case GroupKind::E6:
        case GroupKind::E7: return 8;
        case GroupKind::E8: return 5;
    }
    throw std::logic_error("bad kind");
}

inline long expected_order(const GroupSpec& g) {
    switch (g.kind) {
        case GroupKind::A: return g.r + 1;
        case GroupKind::D: return 4L * (g.r - 2);
        case GroupKind::E6: return 24;
        case GroupKind::E7: return 48;
        case GroupKind::E8: return 120;
    }
    throw std::logic_error("bad kind");
}

/// 2x2 matrix with entries in one cyclotomic field.
struct Mat2 {
    CycloNum a, b, c, d;  // row-major

    static Mat2 identity(const CycloField& f) {
        return {CycloNum::one(f), CycloNum::zero(f), CycloNum::zero(f), CycloNum::one(f)};
    }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    CycloNum det() const { return a * d - b * c; }
    CycloNum trace() const { return a + d; }
    /// Inverse of a determinant-1 matrix (adjugate).
    Mat2 inverse() const { return {d, -b, -c, a}; }

    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    std::size_t hash() const {
        std::size_t h = a.hash();
        h = h * 1099511628211ull ^ b.hash();
        h = h * 1099511628211ull ^ c.hash();
        h = h * 1099511628211ull ^ d.hash();
        return h;
    }
    std::string to_string() const {
        return "[" + a.to_string() + ", " + b.to_string() + "; " + c.to_string() + ", " +
               d.to_string() + "]";
    }
};

inline BiPoly substitute_linear(const BiPoly& p, const Mat2& m) {
    return substitute_linear(p, m.a, m.b, m.c, m.d);
}

// ---- generators ----

/// diag(zeta_n, zeta_n^{-1}) expressed in the given field.
inline Mat2 sigma_gen(const CycloField& f, long n) {
    CycloNum w = embedded_root_of_unity(f, n, 1);
    CycloNum z = CycloNum::zero(f);
    return {w, z, z, w.invert()};
}

/// [[0, 1], [-1, 0]].
inline Mat2 tau_gen(const CycloField& f) {
    CycloNum z = CycloNum::zero(f), o = CycloNum::one(f);
    return {z, o, -o, z};
}

/// Tetrahedral generator over Q(zeta_8), determinant-1 normalization
/// (lower-right entry zeta_8); 1/sqrt(2) = (zeta_8 + zeta_8^7)/2 exactly.
inline Mat2 mu_gen(const CycloField& f) {
    CycloNum w1 = embedded_root_of_unity(f, 8, 1);
    CycloNum w5 = embedded_root_of_unity(f, 8, 5);
    CycloNum w7 = embedded_root_of_unity(f, 8, 7);
    CycloNum inv_sqrt2 = Rational(1, 2) * (w1 + w7);
    return {inv_sqrt2 * w7, inv_sqrt2 * w7, inv_sqrt2 * w5, inv_sqrt2 * w1};
}

/// Icosahedral generator over Q(zeta_5); 1/sqrt(5) = (2(zeta_5+zeta_5^4)+1)^{-1}.
inline Mat2 kappa_gen(const CycloField& f) {
    CycloNum w1 = embedded_root_of_unity(f, 5, 1);
    CycloNum w2 = embedded_root_of_unity(f, 5, 2);
    CycloNum w3 = embedded_root_of_unity(f, 5, 3);
    CycloNum w4 = embedded_root_of_unity(f, 5, 4);
    CycloNum sqrt5 = Rational(2) * (w1 + w4) + CycloNum::one(f);
    CycloNum inv_sqrt5 = sqrt5.invert();
    return {inv_sqrt5 * (w4 - w1), inv_sqrt5 * (w2 - w3), inv_sqrt5 * (w2 - w3),
            inv_sqrt5 * (w1 - w4)};
}

inline std::vector<Mat2> generators(const GroupSpec& g, const CycloField& f) {
    switch (g.kind) {
        case GroupKind::A: return {sigma_gen(f, g.r + 1)};
        case GroupKind::D: return {sigma_gen(f, 2L * g.r - 4), tau_gen(f)};
        case GroupKind::E6: return {sigma_gen(f, 4), tau_gen(f), mu_gen(f)};
        case GroupKind::E7: return {sigma_gen(f, 8), tau_gen(f), mu_gen(f)};
        case GroupKind::E8: return {sigma_gen(f, 10), kappa_gen(f)};
    }
    throw std::logic_error("bad kind");
}

/// Fully enumerated finite subgroup of SL2 with classes and center.
struct GroupData {
    GroupSpec spec;
    const CycloField* field = nullptr;
    std::vector<Mat2> elements;                 // element 0 is the identity
    std::vector<std::vector<int>> classes;      // partition of element indices
    std::vector<int> class_of;                  // element index -> class index
    std::vector<int> inverse_of;                // element index -> index of inverse
    std::vector<int> center;                    // element indices
    std::optional<int> minus_identity;          // index of -I if present

    long order() const { return static_cast<long>(elements.size()); }
    long projective_order() const {
        long central2 = 1 + (minus_identity ? 1 : 0);
        return order() / central2;
    }
    int index_of(const Mat2& m) const {
        auto it = index_.find(m.hash());
        if (it != index_.end())
            for (int i : it->second)
                if (elements[static_cast<std::size_t>(i)] == m) return i;
        return -1;
    }

    std::unordered_map<std::size_t, std::vector<int>> index_;  // hash -> candidates
};

inline void validate_spec(const GroupSpec& g) {
    if (g.kind == GroupKind::A && g.r < 1) throw std::invalid_argument("A_r needs r >= 1");
    if (g.kind == GroupKind::D && g.r < 4) throw std::invalid_argument("D_r needs r >= 4");
}

/// Breadth-first closure of the generator set under multiplication. Exact
/// element equality; a closure exceeding 4x the expected order signals wrong
/// generators.
inline GroupData build_group(const GroupSpec& g) {
    validate_spec(g);
    const CycloField& f = CycloField::get(field_order_for(g));
    GroupData data;
    data.spec = g;
    data.field = &f;

    auto gens = generators(g, f);
    long cap = 4 * expected_order(g);

    auto insert = [&](const Mat2& m) -> bool {
        int found = data.index_of(m);
        if (found >= 0) return false;
        data.elements.push_back(m);
        data.index_[m.hash()].push_back(static_cast<int>(data.elements.size() - 1));
        return true;
    };

    insert(Mat2::identity(f));
    std::vector<Mat2> frontier{Mat2::identity(f)};
    while (!frontier.empty()) {
        std::vector<Mat2> next;
        for (const auto& x : frontier)
            for (const auto& gen : gens) {
                Mat2 y = x * gen;
                if (insert(y)) {
                    next.push_back(y);
                    if (static_cast<long>(data.elements.size()) > cap)
                        throw std::runtime_error("group closure exceeded cap; wrong generators?");
                }
            }
        frontier = std::move(next);
    }

    // inverses
    data.inverse_of.assign(data.elements.size(), -1);
    for (std::size_t i = 0; i < data.elements.size(); ++i) {
        int j = data.index_of(data.elements[i].inverse());
        if (j < 0) throw std::logic_error("group not closed under inverse");
        data.inverse_of[i] = j;
    }

    // conjugacy classes by exact conjugation test
    data.class_of.assign(data.elements.size(), -1);
    for (std::size_t i = 0; i < data.elements.size(); ++i) {
        if (data.class_of[i] >= 0) continue;
        int cls = static_cast<int>(data.classes.size());
        std::vector<int> members;
        for (std::size_t k = 0; k < data.elements.size(); ++k) {
            Mat2 conj = data.elements[k] * data.elements[i] *
                        data.elements[static_cast<std::size_t>(data.inverse_of[k])];
            int j = data.index_of(conj);
            if (j < 0) throw std::logic_error("conjugate escaped group");
            if (data.class_of[static_cast<std::size_t>(j)] < 0) {
                data.class_of[static_cast<std::size_t>(j)] = cls;
                members.push_back(j);
            }
        }
        std::sort(members.begin(), members.end());
        data.classes.push_back(std::move(members));
    }

    // center and -I
    Mat2 minus_id = -Mat2::identity(f);
    for (std::size_t i = 0; i < data.elements.size(); ++i) {
        bool central = true;
        for (const auto& gen : gens)
            if (!(data.elements[i] * gen == gen * data.elements[i])) {
                central = false;
                break;
            }
        if (central) data.center.push_back(static_cast<int>(i));
        if (data.elements[i] == minus_id) data.minus_identity = static_cast<int>(i);
    }
    return data;
}

/// One named relation check.
struct RelationCheck {
    std::string relation;
    bool holds;
};

/// Verifies the defining relations that involve the generators present in
/// this group: tau sigma = sigma^{-1} tau, tau^2 = mu^3 = kappa^2 = -1,
/// mu tau = -sigma_4 tau mu, mu sigma_4 = tau^{-1} mu, det = 1 throughout.
inline std::vector<RelationCheck> check_relations(const GroupSpec& g) {
    validate_spec(g);
    const CycloField& f = CycloField::get(field_order_for(g));
    std::vector<RelationCheck> out;
    Mat2 id = Mat2::identity(f);
    Mat2 mid = -id;

    auto add = [&](const std::string& name, bool ok) { out.push_back({name, ok}); };

    auto gens = generators(g, f);
    for (std::size_t i = 0; i < gens.size(); ++i)
        add("det(generator " + std::to_string(i) + ") = 1",
            gens[i].det() == CycloNum::one(f));

    switch (g.kind) {
        case GroupKind::A: {
            Mat2 s = sigma_gen(f, g.r + 1);
            Mat2 p = id;
            for (int i = 0; i < g.r + 1; ++i) p = p * s;
            add("sigma^(r+1) = 1", p == id);
            break;
        }
        case GroupKind::D: {
            Mat2 s = sigma_gen(f, 2L * g.r - 4), t = tau_gen(f);
            add("tau sigma = sigma^{-1} tau", t * s == s.inverse() * t);
            add("tau^2 = -1", t * t == mid);
            break;
        }
        case GroupKind::E6:
        case GroupKind::E7: {
            long n = (g.kind == GroupKind::E6) ? 4 : 8;
            Mat2 s = sigma_gen(f, n), t = tau_gen(f), m = mu_gen(f);
            Mat2 s4 = (g.kind == GroupKind::E6) ? s : s * s;
            add("tau sigma = sigma^{-1} tau", t * s == s.inverse() * t);
            add("tau^2 = -1", t * t == mid);
            add("mu^3 = -1", m * m * m == mid);
            add("mu tau = -sigma_4 tau mu", m * t == -(s4 * t * m));
            add("mu sigma_4 = tau^{-1} mu", m * s4 == t.inverse() * m);
            break;
        }
        case GroupKind::E8: {
            Mat2 s = sigma_gen(f, 10), k = kappa_gen(f);
            add("sigma_10^10 = 1", [&] {
                Mat2 p = id;
                for (int i = 0; i < 10; ++i) p = p * s;
                return p == id;
            }());
            add("kappa^2 = -1", k * k == mid);
            break;
        }
    }
    return out;
}

inline long element_order(const GroupData& g, int idx) {
    Mat2 id = Mat2::identity(*g.field);
    Mat2 p = g.elements[static_cast<std::size_t>(idx)];
    long n = 1;
    while (!(p == id)) {
        p = p * g.elements[static_cast<std::size_t>(idx)];
        ++n;
        if (n > g.order()) throw std::logic_error("element order overflow");
    }
    return n;
}

inline long group_exponent(const GroupData& g) {
    long e = 1;
    for (const auto& cls : g.classes) e = lcm_long(e, element_order(g, cls.front()));
    return e;
}

}  // namespace kleinian
