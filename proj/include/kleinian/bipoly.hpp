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

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "unipoly.hpp"

namespace kleinian {

struct Mat2;  // groups.hpp

/// Sparse bivariate polynomial over Q(zeta_N), exponent-map representation:
/// the invariants have few monomials but high degree. No zero coefficients
/// are ever stored.
class BiPoly {
  public:
    using Exp = std::pair<long, long>;  // (a, b) for Z1^a Z2^b

    BiPoly() : field_(nullptr) {}  // unattached; assign before use
    explicit BiPoly(const CycloField& f) : field_(&f) {}

    static BiPoly zero(const CycloField& f) { return BiPoly(f); }
    static BiPoly monomial(const CycloField& f, long a, long b, const CycloNum& coef) {
        BiPoly p(f);
        p.add_term(a, b, coef);
        return p;
    }
    static BiPoly constant(const CycloField& f, const Rational& q) {
        return monomial(f, 0, 0, CycloNum::rational(f, q));
    }

    const CycloField& field() const { return *field_; }
    const std::map<Exp, CycloNum>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }

    void add_term(long a, long b, const CycloNum& coef) {
        if (coef.is_zero()) return;
        auto key = Exp{a, b};
        auto it = t_.find(key);
        if (it == t_.end()) {
            t_.emplace(key, coef);
        } else {
            it->second += coef;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    CycloNum coefficient(long a, long b) const {
        auto it = t_.find({a, b});
        return it == t_.end() ? CycloNum::zero(*field_) : it->second;
    }

    friend bool operator==(const BiPoly& p, const BiPoly& q) { return p.t_ == q.t_; }

    friend BiPoly operator+(const BiPoly& p, const BiPoly& q) {
        BiPoly r = p;
        for (const auto& [e, c] : q.t_) r.add_term(e.first, e.second, c);
        return r;
    }
    friend BiPoly operator-(const BiPoly& p, const BiPoly& q) {
        BiPoly r = p;
        for (const auto& [e, c] : q.t_) r.add_term(e.first, e.second, -c);
        return r;
    }
    BiPoly operator-() const {
        BiPoly r(*field_);
        for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
        return r;
    }
    friend BiPoly operator*(const BiPoly& p, const BiPoly& q) {
        BiPoly r(*p.field_);
        for (const auto& [e1, c1] : p.t_)
            for (const auto& [e2, c2] : q.t_)
                r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
        return r;
    }
    friend BiPoly operator*(const CycloNum& s, const BiPoly& p) {
        BiPoly r(*p.field_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : p.t_) r.add_term(e.first, e.second, s * c);
        return r;
    }
    friend BiPoly operator*(const Rational& s, const BiPoly& p) {
        return CycloNum::rational(*p.field_, s) * p;
    }

    BiPoly pow(unsigned e) const {
        BiPoly acc = constant(*field_, 1), base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    long total_degree() const {
        long d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, e.first + e.second);
        return d;
    }
    /// Lowest total degree among monomials (-1 for zero).
    long order() const {
        long d = -1;
        for (const auto& [e, c] : t_) {
            long s = e.first + e.second;
            if (d < 0 || s < d) d = s;
        }
        return d;
    }
    bool is_homogeneous() const {
        return is_zero() || total_degree() == order();
    }
    /// Homogeneous part of total degree d.
    BiPoly homogeneous_part(long d) const {
        BiPoly r(*field_);
        for (const auto& [e, c] : t_)
            if (e.first + e.second == d) r.t_.emplace(e, c);
        return r;
    }

    BiPoly derivative(int var) const {  // var: 1 or 2
        BiPoly r(*field_);
        for (const auto& [e, c] : t_) {
            long k = (var == 1) ? e.first : e.second;
            if (k == 0) continue;
            r.add_term(e.first - (var == 1 ? 1 : 0), e.second - (var == 2 ? 1 : 0),
                       Rational(k) * c);
        }
        return r;
    }

    CycloNum evaluate(const CycloNum& z1, const CycloNum& z2) const {
        CycloNum acc = CycloNum::zero(*field_);
        for (const auto& [e, c] : t_) acc += c * z1.pow(e.first) * z2.pow(e.second);
        return acc;
    }

    /// Restriction to the line {var == value}: e.g. restrict(1, a) is P(a, Z2)
    /// as a univariate polynomial in the other variable.
    UniPoly restrict_var(int var, const CycloNum& value) const {
        std::map<long, CycloNum> acc;
        for (const auto& [e, c] : t_) {
            long fixed = (var == 1) ? e.first : e.second;
            long free = (var == 1) ? e.second : e.first;
            CycloNum v = c * value.pow(fixed);
            auto it = acc.find(free);
            if (it == acc.end()) acc.emplace(free, v);
            else it->second += v;
        }
        long deg = acc.empty() ? -1 : acc.rbegin()->first;
        std::vector<CycloNum> coeffs(static_cast<std::size_t>(deg + 1), CycloNum::zero(*field_));
        for (const auto& [k, v] : acc) coeffs[static_cast<std::size_t>(k)] = v;
        return UniPoly(*field_, std::move(coeffs));
    }

    /// Dehomogenization P(1, w) resp. P(w, 1).
    UniPoly dehomogenize(int set_var_to_one) const {
        return restrict_var(set_var_to_one, CycloNum::one(*field_));
    }

    std::string to_string() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : t_) {
            if (!first) os << " + ";
            os << "(" << c.to_string() << ")";
            if (e.first) os << "*Z1^" << e.first;
            if (e.second) os << "*Z2^" << e.second;
            first = false;
        }
        return os.str();
    }

  private:
    const CycloField* field_;
    std::map<Exp, CycloNum> t_;
};

namespace detail {
// (m11*Z1 + m12*Z2)^n as a dense vector of coefficients of Z1^k Z2^{n-k}.
inline std::vector<CycloNum> binomial_power(const CycloNum& m1, const CycloNum& m2, long n) {
    const CycloField& f = m1.field();
    std::vector<CycloNum> row{CycloNum::one(f)};
    for (long s = 0; s < n; ++s) {
        std::vector<CycloNum> next(row.size() + 1, CycloNum::zero(f));
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k].is_zero()) continue;
            next[k + 1] += row[k] * m1;
            next[k] += row[k] * m2;
        }
        row = std::move(next);
    }
    return row;  // row[k] = coeff of Z1^k Z2^{n-k}
}
}  // namespace detail

/// P(M . (Z1, Z2)^T) with entries (m11, m12; m21, m22), expanded exactly.
inline BiPoly substitute_linear(const BiPoly& p, const CycloNum& m11, const CycloNum& m12,
                                const CycloNum& m21, const CycloNum& m22) {
    const CycloField& f = p.field();
    if (m11.field().order() != f.order())
        throw std::invalid_argument("substitution matrix field mismatch");
    BiPoly out(f);
    for (const auto& [e, c] : p.terms()) {
        auto row1 = detail::binomial_power(m11, m12, e.first);
        auto row2 = detail::binomial_power(m21, m22, e.second);
        for (std::size_t i = 0; i < row1.size(); ++i) {
            if (row1[i].is_zero()) continue;
            for (std::size_t j = 0; j < row2.size(); ++j) {
                if (row2[j].is_zero()) continue;
                out.add_term(static_cast<long>(i + j),
                             e.first + e.second - static_cast<long>(i + j), c * row1[i] * row2[j]);
            }
        }
    }
    return out;
}

/// Determinant of the Hessian of second partials, exact.
inline BiPoly hessian_det(const BiPoly& p) {
    BiPoly p11 = p.derivative(1).derivative(1);
    BiPoly p22 = p.derivative(2).derivative(2);
    BiPoly p12 = p.derivative(1).derivative(2);
    return p11 * p22 - p12 * p12;
}

/// Determinant of the Jacobian of (p, q), exact.
inline BiPoly jacobian_det(const BiPoly& p, const BiPoly& q) {
    return p.derivative(1) * q.derivative(2) - p.derivative(2) * q.derivative(1);
}

/// Lowest total degree of P expanded around the point (p1, p2): the
/// multiplicity a point blow-up picks up there.
inline long point_multiplicity(const BiPoly& p, const CycloNum& p1, const CycloNum& p2) {
    if (p.is_zero()) return -1;
    if (p1.is_zero() && p2.is_zero()) return p.order();
    const CycloField& f = p.field();
    // Taylor shift Z1 -> Z1 + p1, Z2 -> Z2 + p2, tracking only whether each
    // total degree vanishes; full expansion is fine at these sizes.
    BiPoly shifted(f);
    for (const auto& [e, c] : p.terms()) {
        auto row1 = detail::binomial_power(CycloNum::one(f), p1, e.first);
        auto row2 = detail::binomial_power(CycloNum::one(f), p2, e.second);
        for (std::size_t i = 0; i < row1.size(); ++i) {
            if (row1[i].is_zero()) continue;
            for (std::size_t j = 0; j < row2.size(); ++j) {
                if (row2[j].is_zero()) continue;
                shifted.add_term(static_cast<long>(i), static_cast<long>(j),
                                 c * row1[i] * row2[j]);
            }
        }
    }
    return shifted.order();
}

/// Multiplicity pattern of a nonzero homogeneous binary form on P^1: both
/// dehomogenizations are analyzed and merged, so a root at [1:0] ("infinity"
/// of the first chart) is tracked like any other root class.
inline std::map<unsigned, unsigned> binary_form_pattern(const BiPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("pattern of zero form");
    if (!p.is_homogeneous()) throw std::invalid_argument("pattern of non-homogeneous form");
    UniPoly q = p.dehomogenize(1);  // P(1, w)
    auto pat = multiplicity_pattern(q);
    long at_infinity = p.total_degree() - q.degree();  // multiplicity of the Z1-factor
    if (at_infinity > 0) pat[static_cast<unsigned>(at_infinity)] += 1;
    return pat;
}

}  // namespace kleinian
