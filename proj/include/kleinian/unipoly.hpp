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
#include <stdexcept>
#include <vector>

#include "cyclotomic.hpp"

namespace kleinian {

/// Dense univariate polynomial over Q(zeta_N). Leading coefficient is
/// nonzero unless the polynomial is zero (empty coefficient vector).
class UniPoly {
  public:
    UniPoly() : field_(nullptr) {}  // unattached; assign before use
    explicit UniPoly(const CycloField& f) : field_(&f) {}
    UniPoly(const CycloField& f, std::vector<CycloNum> coeffs) : field_(&f), c_(std::move(coeffs)) {
        trim();
    }

    static UniPoly zero(const CycloField& f) { return UniPoly(f); }
    static UniPoly constant(const CycloField& f, const CycloNum& a) {
        UniPoly p(f);
        p.c_.push_back(a);
        p.trim();
        return p;
    }
    static UniPoly monomial(const CycloField& f, unsigned deg, const CycloNum& a) {
        UniPoly p(f);
        p.c_.assign(deg + 1, CycloNum::zero(f));
        p.c_[deg] = a;
        p.trim();
        return p;
    }

    const CycloField& field() const { return *field_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const CycloNum& operator[](std::size_t i) const { return c_.at(i); }
    const std::vector<CycloNum>& coefficients() const { return c_; }
    const CycloNum& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r(*a.field_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), CycloNum::zero(*a.field_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        UniPoly r(*a.field_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), CycloNum::zero(*a.field_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
        r.trim();
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        UniPoly r(*a.field_);
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, CycloNum::zero(*a.field_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        r.trim();
        return r;
    }
    friend UniPoly operator*(const CycloNum& s, const UniPoly& a) {
        UniPoly r = a;
        for (auto& x : r.c_) x = s * x;
        r.trim();
        return r;
    }

    std::pair<UniPoly, UniPoly> divrem(const UniPoly& b) const {
        if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
        UniPoly q(*field_), r = *this;
        if (r.degree() >= b.degree())
            q.c_.assign(r.degree() - b.degree() + 1, CycloNum::zero(*field_));
        CycloNum inv_lead = b.leading().invert();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            CycloNum f = r.leading() * inv_lead;
            q.c_[shift] = f;
            for (int i = 0; i <= b.degree(); ++i) r.c_[shift + i] -= f * b.c_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    UniPoly derivative() const {
        UniPoly r(*field_);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.c_.push_back(Rational(static_cast<long>(i)) * c_[i]);
        r.trim();
        return r;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return leading().invert() * *this;
    }

    CycloNum evaluate(const CycloNum& x) const {
        CycloNum acc = CycloNum::zero(*field_);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Order of vanishing at zero (index of lowest nonzero coefficient).
    unsigned order_at_zero() const {
        if (is_zero()) throw std::domain_error("order of zero polynomial");
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<unsigned>(i);
        throw std::logic_error("untrimmed polynomial");
    }

    UniPoly shift_down(unsigned k) const {  // divide by x^k exactly
        UniPoly r(*field_);
        if (is_zero()) return r;
        if (order_at_zero() < k) throw std::invalid_argument("x^k does not divide");
        r.c_.assign(c_.begin() + k, c_.end());
        return r;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    const CycloField* field_;
    std::vector<CycloNum> c_;
};

/// Monic gcd by the Euclidean algorithm (coefficients stay in the field).
inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divrem(b).second;
        a = b.monic();
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

/// Squarefree (Yun) decomposition: f = prod_i factor_i^i up to a scalar,
/// with every factor_i squarefree and pairwise coprime.
inline std::vector<std::pair<unsigned, UniPoly>> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<std::pair<unsigned, UniPoly>> out;
    if (f.degree() == 0) return out;
    UniPoly fp = f.derivative();
    UniPoly g = gcd(f, fp);
    UniPoly c = f.divrem(g).first;
    UniPoly d = fp.divrem(g).first - c.derivative();
    unsigned i = 1;
    while (c.degree() > 0) {
        UniPoly a = gcd(c, d);
        if (a.degree() > 0) out.emplace_back(i, a);
        c = c.divrem(a).first;
        d = d.divrem(a).first - c.derivative();
        ++i;
    }
    return out;
}

/// For each multiplicity m occurring among the roots of f, the degree of the
/// squarefree factor carrying multiplicity m. Roots are never extracted.
inline std::map<unsigned, unsigned> multiplicity_pattern(const UniPoly& f) {
    std::map<unsigned, unsigned> pat;
    for (const auto& [m, fac] : squarefree_decomposition(f))
        pat[m] += static_cast<unsigned>(fac.degree());
    return pat;
}

}  // namespace kleinian
