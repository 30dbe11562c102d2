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

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace kleinian {

namespace detail {

// Dense rational polynomial helpers used only for field setup and inversion.
using QPoly = std::vector<Rational>;  // coefficient i of x^i; no trailing zeros

inline void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int qp_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qp_trim(r);
    return r;
}

inline QPoly qp_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qp_trim(a);
    return a;
}

// quotient/remainder of a by b (b nonzero)
inline std::pair<QPoly, QPoly> qp_divrem(QPoly a, const QPoly& b) {
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    QPoly q;
    int db = qp_deg(b);
    qp_trim(a);
    if (qp_deg(a) >= db) q.assign(qp_deg(a) - db + 1, Rational(0));
    while (qp_deg(a) >= db) {
        int shift = qp_deg(a) - db;
        Rational c = a.back() / b.back();
        q[shift] = c;
        for (int i = 0; i <= db; ++i) a[shift + i] -= c * b[i];
        qp_trim(a);
    }
    return {q, a};
}

}  // namespace detail

/// N-th cyclotomic polynomial, computed by exact division of x^N - 1 by the
/// product of all lower-order cyclotomic polynomials at divisors of N.
inline std::vector<Rational> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial(0)");
    static std::map<unsigned, detail::QPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::function<detail::QPoly(unsigned)> phi = [&](unsigned m) -> detail::QPoly {
        auto hit = cache.find(m);
        if (hit != cache.end()) return hit->second;
        detail::QPoly num(m + 1, Rational(0));
        num[0] = -1;
        num[m] = 1;  // x^m - 1
        detail::QPoly den{Rational(1)};
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0) den = detail::qp_mul(den, phi(d));
        auto [q, r] = detail::qp_divrem(num, den);
        if (!r.empty()) throw std::logic_error("cyclotomic division not exact");
        cache[m] = q;
        return q;
    };
    return phi(n);
}

/// The field Q(zeta_N), represented as Q[x] modulo Phi_N. Using Phi_N rather
/// than x^N - 1 keeps the quotient a field, so zero-testing is sound.
class CycloField {
  public:
    explicit CycloField(unsigned n) : order_(n), min_poly_(cyclotomic_polynomial(n)) {
        degree_ = static_cast<unsigned>(min_poly_.size() - 1);
        // rows of x^e mod Phi_N for e = 0 .. max(N, 2*degree) - 1
        unsigned rows = std::max(order_, 2 * degree_);
        power_table_.reserve(rows);
        std::vector<Rational> cur(degree_, Rational(0));
        if (degree_ > 0) cur[0] = 1;
        for (unsigned e = 0; e < rows; ++e) {
            power_table_.push_back(cur);
            // multiply by x, reduce the x^degree overflow against Phi_N
            Rational top = cur.empty() ? Rational(0) : cur.back();
            for (unsigned i = degree_; i-- > 1;) cur[i] = cur[i - 1];
            if (degree_ > 0) cur[0] = 0;
            if (top != 0)
                for (unsigned i = 0; i < degree_; ++i) cur[i] -= top * min_poly_[i];
        }
    }

    /// Shared immutable instance per order.
    static const CycloField& get(unsigned n) {
        static std::map<unsigned, std::unique_ptr<CycloField>> cache;
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        auto& slot = cache[n];
        if (!slot) slot = std::make_unique<CycloField>(n);
        return *slot;
    }

    unsigned order() const { return order_; }
    unsigned degree() const { return degree_; }
    const std::vector<Rational>& minimal_polynomial() const { return min_poly_; }
    const std::vector<Rational>& power_of_zeta(unsigned e) const { return power_table_.at(e); }

  private:
    unsigned order_;
    detail::QPoly min_poly_;
    unsigned degree_;
    std::vector<std::vector<Rational>> power_table_;
};

/// An element of Q(zeta_N): the canonical residue of degree < deg Phi_N.
class CycloNum {
  public:
    CycloNum() : field_(nullptr) {}
    explicit CycloNum(const CycloField& f) : field_(&f), c_(f.degree(), Rational(0)) {}
    CycloNum(const CycloField& f, const Rational& q) : CycloNum(f) {
        Rational canon = q;
        canon.canonicalize();  // mpq arithmetic assumes canonical operands
        if (!c_.empty()) c_[0] = canon;
        else if (canon != 0) throw std::logic_error("nonzero constant in degree-0 field");
    }

    static CycloNum zero(const CycloField& f) { return CycloNum(f); }
    static CycloNum one(const CycloField& f) { return CycloNum(f, Rational(1)); }
    static CycloNum rational(const CycloField& f, const Rational& q) { return CycloNum(f, q); }

    /// zeta_N^k, k taken modulo N.
    static CycloNum root_of_unity(const CycloField& f, long k) {
        long n = f.order();
        long e = ((k % n) + n) % n;
        CycloNum r(f);
        r.c_ = f.power_of_zeta(static_cast<unsigned>(e));
        return r;
    }

    const CycloField& field() const {
        if (!field_) throw std::logic_error("unattached CycloNum");
        return *field_;
    }
    bool attached() const { return field_ != nullptr; }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const {
        for (const auto& q : c_)
            if (q != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("not a rational element: " + to_string());
        return c_.empty() ? Rational(0) : c_[0];
    }

    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        a.check_same_field(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    CycloNum operator-() const {
        CycloNum r = *this;
        for (auto& q : r.c_) q = -q;
        return r;
    }
    friend CycloNum operator+(const CycloNum& a, const CycloNum& b) {
        a.check_same_field(b);
        CycloNum r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend CycloNum operator-(const CycloNum& a, const CycloNum& b) {
        a.check_same_field(b);
        CycloNum r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
        a.check_same_field(b);
        const CycloField& f = a.field();
        unsigned d = f.degree();
        CycloNum r(f);
        if (d == 0) return r;
        std::vector<Rational> conv(2 * d - 1, Rational(0));
        for (unsigned i = 0; i < d; ++i) {
            if (a.c_[i] == 0) continue;
            for (unsigned j = 0; j < d; ++j) {
                if (b.c_[j] == 0) continue;
                conv[i + j] += a.c_[i] * b.c_[j];
            }
        }
        for (unsigned e = 0; e < conv.size(); ++e) {
            if (conv[e] == 0) continue;
            if (e < d) {
                r.c_[e] += conv[e];
            } else {
                const auto& row = f.power_of_zeta(e);
                for (unsigned i = 0; i < d; ++i) r.c_[i] += conv[e] * row[i];
            }
        }
        return r;
    }
    CycloNum& operator+=(const CycloNum& b) { return *this = *this + b; }
    CycloNum& operator-=(const CycloNum& b) { return *this = *this - b; }
    CycloNum& operator*=(const CycloNum& b) { return *this = *this * b; }

    friend CycloNum operator*(const Rational& q, const CycloNum& a) {
        Rational canon = q;
        canon.canonicalize();
        CycloNum r = a;
        for (auto& x : r.c_) x *= canon;
        return r;
    }
    friend CycloNum operator*(const CycloNum& a, const Rational& q) { return q * a; }

    /// Multiplicative inverse, via the extended Euclidean algorithm against Phi_N.
    CycloNum invert() const {
        if (is_zero()) throw std::domain_error("inversion of zero");
        const CycloField& f = field();
        detail::QPoly a(c_.begin(), c_.end());
        detail::qp_trim(a);
        detail::QPoly b = f.minimal_polynomial();
        // Bezout: s*a + t*b = gcd; track s only.
        detail::QPoly s0{Rational(1)}, s1{};
        detail::QPoly r0 = a, r1 = b;
        while (!r1.empty()) {
            auto [q, r2] = detail::qp_divrem(r0, r1);
            detail::QPoly s2 = detail::qp_sub(s0, detail::qp_mul(q, s1));
            r0 = r1;
            r1 = r2;
            s0 = s1;
            s1 = s2;
        }
        if (detail::qp_deg(r0) != 0) throw std::logic_error("Phi_N not coprime to element");
        Rational lead = r0[0];
        CycloNum out(f);
        for (std::size_t i = 0; i < s0.size() && i < out.c_.size(); ++i) out.c_[i] = s0[i] / lead;
        if (s0.size() > out.c_.size()) throw std::logic_error("inverse degree overflow");
        return out;
    }

    friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.invert(); }

    /// Complex conjugation: zeta |-> zeta^{N-1}.
    CycloNum conjugate() const {
        const CycloField& f = field();
        unsigned n = f.order();
        CycloNum r(f);
        for (unsigned i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            unsigned e = (i == 0) ? 0 : (n - i % n) % n;
            const auto& row = f.power_of_zeta(e);
            for (unsigned k = 0; k < r.c_.size(); ++k) r.c_[k] += c_[i] * row[k];
        }
        return r;
    }

    CycloNum pow(long e) const {
        if (e < 0) return invert().pow(-e);
        CycloNum base = *this, acc = one(field());
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!first) os << " + ";
            os << c_[i].get_str();
            if (i >= 1) os << "*z^" << i;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

    std::size_t hash() const {
        std::size_t h = 14695981039346656037ull;
        for (const auto& q : c_) h = h * 1099511628211ull ^ hash_value(q);
        return h;
    }

  private:
    void check_same_field(const CycloNum& other) const {
        if (!field_ || !other.field_) throw std::logic_error("unattached CycloNum in arithmetic");
        if (field_->order() != other.field_->order())
            throw std::invalid_argument("cyclotomic field mismatch: Q(zeta_" +
                                        std::to_string(field_->order()) + ") vs Q(zeta_" +
                                        std::to_string(other.field_->order()) + ")");
    }

    const CycloField* field_;
    std::vector<Rational> c_;
};

/// zeta_n^k expressed inside Q(zeta_N). Requires n | N, or n = 2m with m odd
/// and m | N (then zeta_2m = -zeta_m^{(m+1)/2}).
inline CycloNum embedded_root_of_unity(const CycloField& f, long n, long k) {
    if (n <= 0) throw std::invalid_argument("root order must be positive");
    long nn = f.order();
    k = ((k % n) + n) % n;
    if (nn % n == 0) return CycloNum::root_of_unity(f, k * (nn / n));
    if (n % 2 == 0) {
        long m = n / 2;
        if (m % 2 == 1 && nn % m == 0) {
            CycloNum r = CycloNum::root_of_unity(f, k * ((m + 1) / 2) % m * (nn / m));
            if (k % 2 == 1) r = -r;
            return r;
        }
    }
    throw std::invalid_argument("zeta_" + std::to_string(n) + " does not embed in Q(zeta_" +
                                std::to_string(nn) + ")");
}

}  // namespace kleinian
