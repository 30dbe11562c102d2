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

#include <catch2/catch.hpp>
#include <random>

#include "kleinian/cyclotomic.hpp"

using namespace kleinian;

namespace {
CycloNum random_element(const CycloField& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    CycloNum x(f);
    CycloNum acc = CycloNum::zero(f);
    for (unsigned i = 0; i < f.degree(); ++i) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        acc += q * CycloNum::root_of_unity(f, i);
    }
    return acc;
}
}  // namespace

TEST_CASE("cyclotomic polynomials") {
    auto phi1 = cyclotomic_polynomial(1);
    REQUIRE(phi1 == std::vector<Rational>{Rational(-1), Rational(1)});  // x - 1

    auto phi5 = cyclotomic_polynomial(5);  // x^4 + x^3 + x^2 + x + 1
    REQUIRE(phi5 == std::vector<Rational>{1, 1, 1, 1, 1});

    auto phi8 = cyclotomic_polynomial(8);  // x^4 + 1
    REQUIRE(phi8 == std::vector<Rational>{1, 0, 0, 0, 1});

    SECTION("degree is the totient, and Phi_N divides x^N - 1") {
        auto totient = [](unsigned n) {
            unsigned t = 0;
            for (unsigned k = 1; k <= n; ++k)
                if (std::gcd(k, n) == 1) ++t;
            return t;
        };
        for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 10u, 11u, 12u, 20u}) {
            auto phi = cyclotomic_polynomial(n);
            REQUIRE(phi.size() == totient(n) + 1);
            REQUIRE(phi.back() == 1);
            detail::QPoly xn(n + 1, Rational(0));
            xn[0] = -1;
            xn[n] = 1;
            auto [q, rem] = detail::qp_divrem(xn, phi);
            REQUIRE(rem.empty());
        }
    }
}

TEST_CASE("roots of unity") {
    const auto& f4 = CycloField::get(4);
    REQUIRE(CycloNum::root_of_unity(f4, 2) == CycloNum::rational(f4, Rational(-1)));

    const auto& f8 = CycloField::get(8);
    REQUIRE(CycloNum::root_of_unity(f8, 4) == CycloNum::rational(f8, Rational(-1)));

    const auto& f5 = CycloField::get(5);
    REQUIRE(CycloNum::root_of_unity(f5, 5) == CycloNum::one(f5));
}

TEST_CASE("field arithmetic basics") {
    const auto& f4 = CycloField::get(4);
    CycloNum i = CycloNum::root_of_unity(f4, 1);
    CycloNum one = CycloNum::one(f4);

    SECTION("invert(1 + i) = (1 - i)/2") {
        CycloNum lhs = (one + i).invert();
        CycloNum rhs = Rational(1, 2) * (one - i);
        REQUIRE(lhs == rhs);
    }

    SECTION("golden-ratio relation in Q(zeta_5)") {
        const auto& f5 = CycloField::get(5);
        CycloNum t = CycloNum::root_of_unity(f5, 1) + CycloNum::root_of_unity(f5, 4);
        REQUIRE((t * t + t - CycloNum::one(f5)).is_zero());
    }

    SECTION("conjugate(zeta_8) * zeta_8 = 1") {
        const auto& f8 = CycloField::get(8);
        CycloNum z = CycloNum::root_of_unity(f8, 1);
        REQUIRE(z.conjugate() * z == CycloNum::one(f8));
    }

    SECTION("sqrt(5) and sqrt(2) live in Q(zeta_5), Q(zeta_8)") {
        const auto& f5 = CycloField::get(5);
        CycloNum s5 = Rational(2) * (CycloNum::root_of_unity(f5, 1) + CycloNum::root_of_unity(f5, 4)) +
                      CycloNum::one(f5);
        REQUIRE(s5 * s5 == CycloNum::rational(f5, Rational(5)));

        const auto& f8 = CycloField::get(8);
        CycloNum s2 = CycloNum::root_of_unity(f8, 1) + CycloNum::root_of_unity(f8, 7);
        REQUIRE(s2 * s2 == CycloNum::rational(f8, Rational(2)));
    }

    SECTION("field mismatch is an error") {
        const auto& f5 = CycloField::get(5);
        REQUIRE_THROWS_AS(CycloNum::one(f4) + CycloNum::one(f5), std::invalid_argument);
    }

    SECTION("inversion of zero is an error") {
        REQUIRE_THROWS_AS(CycloNum::zero(f4).invert(), std::domain_error);
    }
}

TEST_CASE("field axioms hold on random elements") {
    std::mt19937_64 rng(20260808);
    for (unsigned n : {4u, 5u, 8u, 12u}) {
        const auto& f = CycloField::get(n);
        for (int trial = 0; trial < 200; ++trial) {
            CycloNum a = random_element(f, rng);
            CycloNum b = random_element(f, rng);
            CycloNum c = random_element(f, rng);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * b == b * a);
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a.conjugate().conjugate() == a);
            if (!a.is_zero()) REQUIRE(a * a.invert() == CycloNum::one(f));
        }
    }
}

TEST_CASE("embedded roots of unity") {
    const auto& f5 = CycloField::get(5);
    // zeta_10 = -zeta_5^3
    CycloNum z10 = embedded_root_of_unity(f5, 10, 1);
    REQUIRE(z10 == -CycloNum::root_of_unity(f5, 3));
    REQUIRE(z10.pow(10) == CycloNum::one(f5));
    REQUIRE(z10.pow(5) == -CycloNum::one(f5));

    const auto& f8 = CycloField::get(8);
    REQUIRE(embedded_root_of_unity(f8, 4, 1) == CycloNum::root_of_unity(f8, 2));
    REQUIRE_THROWS_AS(embedded_root_of_unity(f8, 3, 1), std::invalid_argument);
}
