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

#include <cstdint>

#include "dynkin.hpp"
#include "groups.hpp"

namespace kleinian {

// Character tables are computed entirely modulo a prime p = 1 mod
// lcm(exponent(G), N) with p > 2|G| (Dixon's method): class-sum structure
// constants over the integers, simultaneous eigenvectors over F_p, then
// characters from central characters and orthogonality. Only integer-valued
// quantities (dimensions, tensor multiplicities) are ever lifted, and the
// prime bound makes those lifts unique.

namespace fp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + b) % p; }
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a + p - b % p) % p;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a % p) * (b % p) % p;  // p < 2^31, no overflow in 64-bit
}
inline std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

}  // namespace fp

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Smallest prime p = 1 (mod modulus) with p > lower_bound.
inline long admissible_prime(long modulus, long lower_bound) {
    long k = (lower_bound + modulus - 1) / modulus;  // smallest k with k*modulus + 1 > lower_bound
    long p = k * modulus + 1;
    while (!is_prime(p)) p += modulus;
    return p;
}

/// Character table of G modulo p, rows = irreducibles (trivial first),
/// columns = conjugacy classes in GroupData order.
struct ModularCharacterData {
    long p = 0;
    std::vector<long> class_sizes;
    std::vector<int> inverse_class;              // class index of inverses
    std::vector<std::vector<std::uint64_t>> table;  // k x k values mod p
    std::vector<long> dimensions;                // lifted, table order
};

namespace detail {

/// Reduce a cyclotomic value through zeta_N -> eta, a fixed order-N element
/// of F_p^* (requires N | p-1).
inline std::uint64_t reduce_mod_p(const CycloNum& x, std::uint64_t eta, std::uint64_t p) {
    std::uint64_t acc = 0;
    const auto& c = x.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        mpz_class num = c[i].get_num() % static_cast<long>(p);
        mpz_class den = c[i].get_den() % static_cast<long>(p);
        if (den == 0) throw std::logic_error("denominator divisible by p");
        std::uint64_t q = fp::mul((num.get_si() + static_cast<long>(p)) % static_cast<long>(p),
                                  fp::inv(den.get_ui(), p), p);
        acc = fp::add(acc, fp::mul(q, fp::pow(eta, i, p), p), p);
    }
    return acc;
}

inline std::uint64_t smallest_primitive_root(long p) {
    auto order_divides = [&](std::uint64_t g, long e) { return fp::pow(g, e, p) == 1; };
    std::vector<long> prime_factors;
    long m = p - 1;
    for (long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    for (std::uint64_t g = 2;; ++g) {
        bool primitive = true;
        for (long q : prime_factors)
            if (order_divides(g, (p - 1) / q)) {
                primitive = false;
                break;
            }
        if (primitive) return g;
    }
}

using FpMatrix = std::vector<std::vector<std::uint64_t>>;

/// Kernel basis of (m - lambda I) restricted to the column space spanned by
/// `basis` (vectors as rows), all mod p.
inline std::vector<std::vector<std::uint64_t>> restricted_eigenspace(
    const FpMatrix& m, std::uint64_t lambda, const std::vector<std::vector<std::uint64_t>>& basis,
    std::uint64_t p) {
    std::size_t n = m.size(), dim = basis.size();
    // rows of the linear system: (M - lambda) * (sum_j x_j basis_j) = 0
    std::vector<std::vector<std::uint64_t>> sys(n, std::vector<std::uint64_t>(dim, 0));
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t row = 0; row < n; ++row) {
            std::uint64_t acc = 0;
            for (std::size_t col = 0; col < n; ++col)
                acc = fp::add(acc, fp::mul(m[row][col], basis[j][col], p), p);
            acc = fp::sub(acc, fp::mul(lambda, basis[j][row], p), p);
            sys[row][j] = acc;
        }
    }
    // Gaussian elimination for the kernel in x-coordinates
    std::size_t rank = 0;
    std::vector<std::size_t> pivot(dim, SIZE_MAX);
    for (std::size_t col = 0; col < dim && rank < n; ++col) {
        std::size_t piv = SIZE_MAX;
        for (std::size_t i = rank; i < n; ++i)
            if (sys[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv == SIZE_MAX) continue;
        std::swap(sys[rank], sys[piv]);
        std::uint64_t iv = fp::inv(sys[rank][col], p);
        for (std::size_t j = 0; j < dim; ++j) sys[rank][j] = fp::mul(sys[rank][j], iv, p);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || sys[i][col] == 0) continue;
            std::uint64_t f = sys[i][col];
            for (std::size_t j = 0; j < dim; ++j)
                sys[i][j] = fp::sub(sys[i][j], fp::mul(f, sys[rank][j], p), p);
        }
        pivot[col] = rank;
        ++rank;
    }
    std::vector<std::vector<std::uint64_t>> out;
    for (std::size_t free_col = 0; free_col < dim; ++free_col) {
        if (pivot[free_col] != SIZE_MAX) continue;
        std::vector<std::uint64_t> x(dim, 0);
        x[free_col] = 1;
        for (std::size_t col = 0; col < dim; ++col)
            if (pivot[col] != SIZE_MAX) x[col] = fp::sub(0, sys[pivot[col]][free_col], p);
        // back to ambient coordinates
        std::vector<std::uint64_t> v(n, 0);
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t i = 0; i < n; ++i)
                v[i] = fp::add(v[i], fp::mul(x[j], basis[j][i], p), p);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

namespace detail {

/// One attempt of the Dixon computation at a fixed prime; std::nullopt when
/// the eigenspaces fail to split or a lift fails (retry with the next prime).
inline std::optional<ModularCharacterData> try_character_data(const GroupData& g, long p) {
    std::size_t k = g.classes.size();
    long order = g.order();

    ModularCharacterData cd;
    cd.p = p;
    for (const auto& cls : g.classes) cd.class_sizes.push_back(static_cast<long>(cls.size()));
    cd.inverse_class.resize(k);
    for (std::size_t i = 0; i < k; ++i)
        cd.inverse_class[i] =
            g.class_of[static_cast<std::size_t>(g.inverse_of[static_cast<std::size_t>(g.classes[i].front())])];

    // structure constants a[i][j][l]: products x*y landing on a fixed
    // representative of class l with x in class i determine y uniquely;
    // the counts are below any admissible prime
    std::vector<detail::FpMatrix> bmats(k, detail::FpMatrix(k, std::vector<std::uint64_t>(k, 0)));
    // bmats[i][l][j] = a_{ijl}: multiplication by class-sum i as a matrix
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            int zl = g.classes[l].front();
            for (int xi : g.classes[i]) {
                Mat2 y = g.elements[static_cast<std::size_t>(g.inverse_of[static_cast<std::size_t>(xi)])] *
                         g.elements[static_cast<std::size_t>(zl)];
                int yidx = g.index_of(y);
                if (yidx < 0) throw std::logic_error("class product escaped group");
                std::size_t j = static_cast<std::size_t>(g.class_of[static_cast<std::size_t>(yidx)]);
                bmats[i][l][j] = fp::add(bmats[i][l][j], 1, static_cast<std::uint64_t>(p));
            }
        }
    }

    // split the common eigenspaces, iterating class sums in class-size order
    std::vector<std::size_t> class_order(k);
    for (std::size_t i = 0; i < k; ++i) class_order[i] = i;
    std::sort(class_order.begin(), class_order.end(), [&](std::size_t a, std::size_t b) {
        if (cd.class_sizes[a] != cd.class_sizes[b]) return cd.class_sizes[a] < cd.class_sizes[b];
        return a < b;
    });

    std::vector<std::vector<std::vector<std::uint64_t>>> spaces;
    {
        std::vector<std::vector<std::uint64_t>> full;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<std::uint64_t> e(k, 0);
            e[i] = 1;
            full.push_back(std::move(e));
        }
        spaces.push_back(std::move(full));
    }
    for (std::size_t oi : class_order) {
        bool all_split = true;
        for (const auto& s : spaces)
            if (s.size() > 1) all_split = false;
        if (all_split) break;
        std::vector<std::vector<std::vector<std::uint64_t>>> next;
        for (auto& s : spaces) {
            if (s.size() <= 1) {
                next.push_back(std::move(s));
                continue;
            }
            // The restriction of a class-sum matrix to an invariant subspace
            // is diagonalizable, so the eigenspaces over all lambda exhaust
            // the subspace; collecting each one splits it. The field is
            // small enough to scan.
            bool split_any = false;
            for (std::uint64_t lambda = 0; lambda < static_cast<std::uint64_t>(p); ++lambda) {
                auto eig = detail::restricted_eigenspace(bmats[oi], lambda, s,
                                                         static_cast<std::uint64_t>(p));
                if (eig.empty() || eig.size() == s.size()) continue;
                next.push_back(std::move(eig));
                split_any = true;
            }
            if (!split_any) next.push_back(std::move(s));
        }
        spaces = std::move(next);
    }
    if (spaces.size() != k) return std::nullopt;  // bad prime: caller retries

    // central characters omega_i = eigenvalue of bmats[i] on each line
    std::vector<std::vector<std::uint64_t>> omegas;  // per character, size k
    for (const auto& s : spaces) {
        const auto& v = s.front();
        std::size_t nz = 0;
        while (v[nz] == 0) ++nz;
        std::vector<std::uint64_t> om(k);
        for (std::size_t i = 0; i < k; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t col = 0; col < k; ++col)
                acc = fp::add(acc, fp::mul(bmats[i][nz][col], v[col], static_cast<std::uint64_t>(p)),
                              static_cast<std::uint64_t>(p));
            om[i] = fp::mul(acc, fp::inv(v[nz], static_cast<std::uint64_t>(p)),
                            static_cast<std::uint64_t>(p));
        }
        omegas.push_back(std::move(om));
    }

    // dimensions: d^2 = |G| / sum_l omega_l omega_{l*} / |C_l| (mod p), then
    // the unique lift with 1 <= d <= sqrt|G| (p > 2|G| makes it unique)
    std::uint64_t up = static_cast<std::uint64_t>(p);
    std::vector<std::pair<std::vector<std::uint64_t>, long>> rows;  // (character values, dim)
    for (const auto& om : omegas) {
        std::uint64_t denom = 0;
        for (std::size_t l = 0; l < k; ++l) {
            std::uint64_t t = fp::mul(om[l], om[static_cast<std::size_t>(cd.inverse_class[l])], up);
            denom = fp::add(denom, fp::mul(t, fp::inv(static_cast<std::uint64_t>(cd.class_sizes[l]), up), up), up);
        }
        std::uint64_t d2 = fp::mul(static_cast<std::uint64_t>(order % p), fp::inv(denom, up), up);
        long dim = -1;
        for (long d = 1; static_cast<long>(d) * d <= order; ++d)
            if (fp::mul(static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(d), up) == d2) {
                dim = d;
                break;
            }
        if (dim < 0) return std::nullopt;  // bad prime: caller retries
        std::vector<std::uint64_t> chi(k);
        for (std::size_t l = 0; l < k; ++l)
            chi[l] = fp::mul(fp::mul(static_cast<std::uint64_t>(dim), om[l], up),
                             fp::inv(static_cast<std::uint64_t>(cd.class_sizes[l]), up), up);
        rows.emplace_back(std::move(chi), dim);
    }

    // trivial character first, the rest sorted by (dimension, values)
    std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
        auto is_trivial = [&](const auto& r) {
            for (std::size_t l = 0; l < k; ++l)
                if (r.first[l] != 1) return false;
            return true;
        };
        bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });
    for (auto& [chi, dim] : rows) {
        cd.table.push_back(std::move(chi));
        cd.dimensions.push_back(dim);
    }

    // sanity: trivial row, Burnside sum
    for (std::size_t l = 0; l < k; ++l)
        if (cd.table[0][l] != 1) throw std::logic_error("trivial character not found");
    long burnside = 0;
    for (long d : cd.dimensions) burnside += d * d;
    if (burnside != order) throw std::logic_error("sum of squared dimensions != |G|");
    return cd;
}

}  // namespace detail

/// Dixon-style modular character table. Deterministic: class-sum matrices
/// are applied in class-size order (ties by class index), so eigenspace
/// splitting is reproducible run to run. A failure to split signals a bad
/// prime and is retried with the next admissible prime.
inline ModularCharacterData character_data(const GroupData& g) {
    long modulus = lcm_long(group_exponent(g), static_cast<long>(g.field->order()));
    long p = admissible_prime(modulus, 2 * g.order());
    for (int attempt = 0; attempt < 8; ++attempt) {
        auto cd = detail::try_character_data(g, p);
        if (cd) return *cd;
        p = admissible_prime(modulus, p);
    }
    throw std::runtime_error("character table: no admissible prime split after 8 attempts");
}

/// McKay graph: nodes are irreducibles with lifted dimensions; A[i][j] is the
/// multiplicity of irreducible j in (defining 2-dim rep) tensor irreducible i.
struct McKayGraph {
    std::vector<long> dimensions;
    std::vector<std::vector<long>> adjacency;
    std::size_t trivial_node = 0;
};

inline McKayGraph mckay_graph(const GroupData& g, const ModularCharacterData& cd) {
    std::size_t k = g.classes.size();
    std::uint64_t p = static_cast<std::uint64_t>(cd.p);
    // defining character: trace of a class representative, reduced through a
    // fixed embedding zeta_N -> eta of exact order N in F_p
    std::uint64_t root = detail::smallest_primitive_root(cd.p);
    std::uint64_t eta = fp::pow(root, static_cast<std::uint64_t>((cd.p - 1) / g.field->order()), p);
    std::vector<std::uint64_t> chi_v(k);
    for (std::size_t l = 0; l < k; ++l)
        chi_v[l] = detail::reduce_mod_p(g.elements[static_cast<std::size_t>(g.classes[l].front())].trace(), eta, p);

    McKayGraph mg;
    mg.dimensions = cd.dimensions;
    mg.adjacency.assign(k, std::vector<long>(k, 0));
    std::uint64_t inv_order = fp::inv(static_cast<std::uint64_t>(g.order() % cd.p), p);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t l = 0; l < k; ++l) {
                std::uint64_t t = fp::mul(static_cast<std::uint64_t>(cd.class_sizes[l]), chi_v[l], p);
                t = fp::mul(t, cd.table[i][l], p);
                t = fp::mul(t, cd.table[j][static_cast<std::size_t>(cd.inverse_class[l])], p);
                acc = fp::add(acc, t, p);
            }
            acc = fp::mul(acc, inv_order, p);
            if (acc >= 3)
                throw std::logic_error("tensor multiplicity lift out of range");
            mg.adjacency[i][j] = static_cast<long>(acc);
        }
    for (std::size_t i = 0; i < k; ++i) {
        if (mg.adjacency[i][i] != 0) throw std::logic_error("self-loop in McKay graph");
        for (std::size_t j = 0; j < k; ++j)
            if (mg.adjacency[i][j] != mg.adjacency[j][i])
                throw std::logic_error("McKay adjacency not symmetric");
    }
    mg.trivial_node = 0;  // character_data puts the trivial row first
    return mg;
}

inline MarkedGraph to_marked_graph(const McKayGraph& mg) {
    MarkedGraph g;
    for (std::size_t i = 0; i < mg.dimensions.size(); ++i) {
        g.ids.push_back("irrep" + std::to_string(i) + "(d=" + std::to_string(mg.dimensions[i]) + ")");
        g.marks.push_back(mg.dimensions[i]);
    }
    for (std::size_t i = 0; i < mg.dimensions.size(); ++i)
        for (std::size_t j = i + 1; j < mg.dimensions.size(); ++j)
            if (mg.adjacency[i][j]) g.edges[{i, j}] = mg.adjacency[i][j];
    g.special = mg.trivial_node;
    return g;
}

/// McKay graph vs affine diagram: dimensions onto marks, trivial onto the
/// distinguished node.
inline MatchResult verify_mckay(const GroupData& g, const GroupSpec& target) {
    auto cd = character_data(g);
    auto mg = mckay_graph(g, cd);
    return match_marked_graphs(to_marked_graph(affine_diagram(target)), to_marked_graph(mg));
}

}  // namespace kleinian
