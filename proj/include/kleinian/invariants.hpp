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
#include <string>
#include <vector>

#include "groups.hpp"

namespace kleinian {

// ---- the classical binary forms ----

/// Z1 Z2 (Z1^4 - Z2^4), degree 6.
inline BiPoly form_f6(const CycloField& f) {
    BiPoly p(f);
    p.add_term(5, 1, CycloNum::one(f));
    p.add_term(1, 5, -CycloNum::one(f));
    return p;
}

/// Z1^8 + 14 Z1^4 Z2^4 + Z2^8.
inline BiPoly form_f8(const CycloField& f) {
    BiPoly p(f);
    p.add_term(8, 0, CycloNum::one(f));
    p.add_term(4, 4, CycloNum::rational(f, Rational(14)));
    p.add_term(0, 8, CycloNum::one(f));
    return p;
}

/// Z1^12 - 33 Z1^8 Z2^4 - 33 Z1^4 Z2^8 + Z2^12.
inline BiPoly form_f12(const CycloField& f) {
    BiPoly p(f);
    p.add_term(12, 0, CycloNum::one(f));
    p.add_term(8, 4, CycloNum::rational(f, Rational(-33)));
    p.add_term(4, 8, CycloNum::rational(f, Rational(-33)));
    p.add_term(0, 12, CycloNum::one(f));
    return p;
}

/// Z1 Z2 (Z1^10 + 11 Z1^5 Z2^5 - Z2^10), degree 12.
inline BiPoly form_F12(const CycloField& f) {
    BiPoly p(f);
    p.add_term(11, 1, CycloNum::one(f));
    p.add_term(6, 6, CycloNum::rational(f, Rational(11)));
    p.add_term(1, 11, -CycloNum::one(f));
    return p;
}

/// The basic invariants X, Y, Z of one Kleinian group. The E-type entries are
/// integer-normalized (irrational scalars of the classical presentation are
/// dropped; divisor multiplicities are invariant under nonzero rescaling).
/// `normalization` records, per entry, the scalar by which the classical
/// normalized form differs from the one stored here.
struct InvariantTriple {
    GroupSpec spec;
    const CycloField* field = nullptr;
    BiPoly x, y, z;
    std::array<long, 3> degrees{};
    std::array<std::string, 3> normalization{};

    const BiPoly& at(int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline InvariantTriple invariant_triple(const GroupSpec& g) {
    validate_spec(g);
    const CycloField& f = CycloField::get(field_order_for(g));
    InvariantTriple t;
    t.spec = g;
    t.field = &f;
    CycloNum one = CycloNum::one(f);
    switch (g.kind) {
        case GroupKind::A: {
            long n = g.r + 1;
            t.x = BiPoly::monomial(f, 1, 1, one);
            t.y = BiPoly::monomial(f, n, 0, one);
            t.z = BiPoly::monomial(f, 0, n, one);
            t.normalization = {"1", "1", "1"};
            break;
        }
        case GroupKind::D: {
            long n = 2L * g.r - 4;
            t.x = BiPoly::monomial(f, 2, 2, one);
            BiPoly y(f);
            y.add_term(n, 0, CycloNum::rational(f, Rational(1, 2)));
            y.add_term(0, n, CycloNum::rational(f, Rational(1, 2)));
            t.y = y;
            BiPoly z(f);
            z.add_term(n + 1, 1, CycloNum::rational(f, Rational(1, 2)));
            z.add_term(1, n + 1, CycloNum::rational(f, Rational(-1, 2)));
            t.z = z;
            t.normalization = {"1", "1", "1"};
            break;
        }
        case GroupKind::E6:
            t.x = form_f6(f);
            t.y = form_f8(f);
            t.z = form_f12(f);
            t.normalization = {"1", "-1/(3*4^(1/3))", "1/(6*3^(1/2))"};
            break;
        case GroupKind::E7:
            t.x = form_f8(f);
            t.y = form_f6(f) * form_f6(f);
            t.z = form_f6(f) * form_f12(f);
            t.normalization = {"-1/3^(1/3)", "-6", "i*2^(1/2)"};
            break;
        case GroupKind::E8: {
            t.x = form_F12(f);
            t.y = hessian_det(t.x);
            t.z = jacobian_det(t.x, t.y);
            t.normalization = {"-1728^(1/5)", "1/121", "1/20"};
            break;
        }
    }
    t.degrees = {t.x.total_degree(), t.y.total_degree(), t.z.total_degree()};
    return t;
}

/// Per-element invariance report.
struct InvarianceReport {
    bool all_pass = true;
    std::vector<std::string> failures;  // "<X|Y|Z> not fixed by element #k"
};

inline InvarianceReport verify_invariance(const InvariantTriple& t, const GroupData& g) {
    InvarianceReport rep;
    const char* names[3] = {"X", "Y", "Z"};
    for (int i = 0; i < 3; ++i) {
        const BiPoly& p = t.at(i);
        for (std::size_t k = 0; k < g.elements.size(); ++k) {
            if (!(substitute_linear(p, g.elements[k]) == p)) {
                rep.all_pass = false;
                rep.failures.push_back(std::string(names[i]) + " not fixed by element #" +
                                       std::to_string(k));
            }
        }
    }
    return rep;
}

/// The single relation among X, Y, Z: coefficients of the admissible
/// monomials (given as (i, j, k) exponent triples of X^i Y^j Z^k) that make
/// the expanded sum vanish identically, normalized with leading coefficient 1.
struct Syzygy {
    std::vector<std::array<long, 3>> monomials;
    std::vector<CycloNum> coefficients;
};

inline std::vector<std::array<long, 3>> admissible_syzygy_monomials(const GroupSpec& g) {
    switch (g.kind) {
        case GroupKind::A: return {{static_cast<long>(g.r) + 1, 0, 0}, {0, 1, 1}};
        case GroupKind::D: return {{static_cast<long>(g.r) - 1, 0, 0}, {1, 2, 0}, {0, 0, 2}};
        case GroupKind::E6: return {{4, 0, 0}, {0, 3, 0}, {0, 0, 2}};
        case GroupKind::E7: return {{3, 1, 0}, {0, 3, 0}, {0, 0, 2}};
        case GroupKind::E8: return {{5, 0, 0}, {0, 3, 0}, {0, 0, 2}};
    }
    throw std::logic_error("bad kind");
}

inline BiPoly expand_xyz_monomial(const InvariantTriple& t, long i, long j, long k) {
    return t.x.pow(static_cast<unsigned>(i)) * t.y.pow(static_cast<unsigned>(j)) *
           t.z.pow(static_cast<unsigned>(k));
}

/// Exact kernel of the linear system "sum of admissible monomials vanishes".
/// A kernel dimension other than 1 signals a wrong invariant or an expansion
/// bug and is reported as an error.
inline Syzygy solve_syzygy(const InvariantTriple& t) {
    const CycloField& f = *t.field;
    auto monos = admissible_syzygy_monomials(t.spec);
    std::vector<BiPoly> expanded;
    expanded.reserve(monos.size());
    for (const auto& m : monos) expanded.push_back(expand_xyz_monomial(t, m[0], m[1], m[2]));

    // collect the union of Z1/Z2-monomials; rows of the matrix
    std::map<BiPoly::Exp, std::size_t> row_of;
    for (const auto& p : expanded)
        for (const auto& [e, c] : p.terms())
            row_of.emplace(e, row_of.size());

    std::size_t rows = row_of.size(), cols = expanded.size();
    std::vector<std::vector<CycloNum>> m(rows, std::vector<CycloNum>(cols, CycloNum::zero(f)));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [e, c] : expanded[j].terms()) m[row_of[e]][j] = c;

    // Gaussian elimination to reduced row echelon form
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (!m[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        CycloNum inv = m[rank][col].invert();
        for (std::size_t j = col; j < cols; ++j) m[rank][j] = inv * m[rank][j];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            CycloNum factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    std::size_t nullity = cols - rank;
    if (nullity == 0) throw std::runtime_error("syzygy kernel empty: wrong invariant");
    if (nullity > 1) throw std::runtime_error("syzygy kernel dimension > 1: expansion bug");

    // back-substitute the single free column
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<CycloNum> v(cols, CycloNum::zero(f));
    v[free_col] = CycloNum::one(f);
    for (std::size_t i = 0; i < rank; ++i) v[pivot_col[i]] = -m[i][free_col];

    // normalize leading (first listed monomial) coefficient to 1
    if (v[0].is_zero()) throw std::runtime_error("syzygy misses leading monomial");
    CycloNum inv = v[0].invert();
    for (auto& c : v) c = inv * c;

    Syzygy s;
    s.monomials = monos;
    s.coefficients = std::move(v);
    return s;
}

inline BiPoly syzygy_expansion(const InvariantTriple& t, const Syzygy& s) {
    BiPoly acc = BiPoly::zero(*t.field);
    for (std::size_t i = 0; i < s.monomials.size(); ++i)
        acc = acc + s.coefficients[i] * expand_xyz_monomial(t, s.monomials[i][0],
                                                            s.monomials[i][1], s.monomials[i][2]);
    return acc;
}

/// Polynomial in the abstract invariants X, Y, Z with exact coefficients.
struct XyzPoly {
    using Exp = std::array<long, 3>;
    const CycloField* field = nullptr;
    std::map<Exp, CycloNum> terms;

    explicit XyzPoly(const CycloField& f) : field(&f) {}
    static XyzPoly constant(const CycloField& f, const Rational& q) {
        XyzPoly p(f);
        p.add_term({0, 0, 0}, CycloNum::rational(f, q));
        return p;
    }
    static XyzPoly variable(const CycloField& f, int which) {
        XyzPoly p(f);
        Exp e{0, 0, 0};
        e[static_cast<std::size_t>(which)] = 1;
        p.add_term(e, CycloNum::one(f));
        return p;
    }
    void add_term(const Exp& e, const CycloNum& c) {
        if (c.is_zero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) terms.emplace(e, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    friend XyzPoly operator+(const XyzPoly& p, const XyzPoly& q) {
        XyzPoly r = p;
        for (const auto& [e, c] : q.terms) r.add_term(e, c);
        return r;
    }
    friend XyzPoly operator-(const XyzPoly& p, const XyzPoly& q) {
        XyzPoly r = p;
        for (const auto& [e, c] : q.terms) r.add_term(e, -c);
        return r;
    }
    friend XyzPoly operator*(const XyzPoly& p, const XyzPoly& q) {
        XyzPoly r(*p.field);
        for (const auto& [e1, c1] : p.terms)
            for (const auto& [e2, c2] : q.terms)
                r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
        return r;
    }
    XyzPoly pow(unsigned e) const {
        XyzPoly acc = constant(*field, 1), base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }
    CycloNum constant_term() const {
        auto it = terms.find({0, 0, 0});
        return it == terms.end() ? CycloNum::zero(*field) : it->second;
    }
    bool is_zero() const { return terms.empty(); }
};

/// Substitutes the concrete invariants into an abstract X/Y/Z polynomial and
/// expands; feeds arbitrary invariant candidates to the divisor engines.
inline BiPoly expand_xyz(const XyzPoly& expr, const InvariantTriple& t) {
    BiPoly acc = BiPoly::zero(*t.field);
    for (const auto& [e, c] : expr.terms)
        acc = acc + c * expand_xyz_monomial(t, e[0], e[1], e[2]);
    return acc;
}

}  // namespace kleinian
