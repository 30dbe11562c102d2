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

#include "kleinian/invariants.hpp"

using namespace kleinian;

TEST_CASE("invariant triples") {
    SECTION("cyclic: monomial invariants") {
        auto t = invariant_triple({GroupKind::A, 5});
        const auto& f = *t.field;
        REQUIRE(t.x == BiPoly::monomial(f, 1, 1, CycloNum::one(f)));
        REQUIRE(t.y == BiPoly::monomial(f, 6, 0, CycloNum::one(f)));
        REQUIRE(t.z == BiPoly::monomial(f, 0, 6, CycloNum::one(f)));
    }
    SECTION("binary dihedral Y at r = 4 is (Z1^4 + Z2^4)/2") {
        auto t = invariant_triple({GroupKind::D, 4});
        const auto& f = *t.field;
        BiPoly expect(f);
        expect.add_term(4, 0, CycloNum::rational(f, Rational(1, 2)));
        expect.add_term(0, 4, CycloNum::rational(f, Rational(1, 2)));
        REQUIRE(t.y == expect);
    }
    SECTION("degrees per kind") {
        REQUIRE(invariant_triple({GroupKind::E6, 0}).degrees == std::array<long, 3>{6, 8, 12});
        REQUIRE(invariant_triple({GroupKind::E7, 0}).degrees == std::array<long, 3>{8, 12, 18});
        REQUIRE(invariant_triple({GroupKind::E8, 0}).degrees == std::array<long, 3>{12, 20, 30});
        REQUIRE(invariant_triple({GroupKind::D, 7}).degrees == std::array<long, 3>{4, 10, 12});
    }
    SECTION("each invariant is homogeneous of its degree") {
        for (auto spec : {GroupSpec{GroupKind::A, 4}, GroupSpec{GroupKind::D, 6},
                          GroupSpec{GroupKind::E6, 0}, GroupSpec{GroupKind::E7, 0},
                          GroupSpec{GroupKind::E8, 0}}) {
            auto t = invariant_triple(spec);
            for (int i = 0; i < 3; ++i) {
                REQUIRE(t.at(i).is_homogeneous());
                REQUIRE(t.at(i).total_degree() == t.degrees[static_cast<std::size_t>(i)]);
            }
        }
    }
}

TEST_CASE("invariance verification") {
    SECTION("cyclic triple is fixed") {
        auto t = invariant_triple({GroupKind::A, 3});
        auto g = build_group({GroupKind::A, 3});
        REQUIRE(verify_invariance(t, g).all_pass);
    }
    SECTION("tetrahedral triple is fixed by the whole group") {
        auto t = invariant_triple({GroupKind::E6, 0});
        auto g = build_group({GroupKind::E6, 0});
        REQUIRE(verify_invariance(t, g).all_pass);
    }
    SECTION("Z1 alone is not invariant under A_2") {
        auto g = build_group({GroupKind::A, 2});
        BiPoly z1 = BiPoly::monomial(*g.field, 1, 0, CycloNum::one(*g.field));
        bool fixed = true;
        for (const auto& m : g.elements) fixed &= (substitute_linear(z1, m) == z1);
        REQUIRE_FALSE(fixed);
    }
}

TEST_CASE("syzygies") {
    SECTION("cyclic relation X^{r+1} - YZ") {
        for (int r : {2, 5, 9}) {
            auto t = invariant_triple({GroupKind::A, r});
            auto s = solve_syzygy(t);
            REQUIRE(s.monomials ==
                    std::vector<std::array<long, 3>>{{r + 1, 0, 0}, {0, 1, 1}});
            REQUIRE(s.coefficients[0] == CycloNum::one(*t.field));
            REQUIRE(s.coefficients[1] == -CycloNum::one(*t.field));
        }
    }
    SECTION("dihedral relation X^{r-1} - XY^2 + Z^2") {
        for (int r : {4, 6, 8}) {
            auto t = invariant_triple({GroupKind::D, r});
            auto s = solve_syzygy(t);
            REQUIRE(s.coefficients[0] == CycloNum::one(*t.field));
            REQUIRE(s.coefficients[1] == -CycloNum::one(*t.field));
            REQUIRE(s.coefficients[2] == CycloNum::one(*t.field));
        }
    }
    SECTION("E-type kernels: frozen rational coefficients") {
        auto e6 = solve_syzygy(invariant_triple({GroupKind::E6, 0}));
        const auto& f8 = CycloField::get(8);
        REQUIRE(e6.coefficients[1] == CycloNum::rational(f8, Rational(-1, 108)));
        REQUIRE(e6.coefficients[2] == CycloNum::rational(f8, Rational(1, 108)));

        auto e7 = solve_syzygy(invariant_triple({GroupKind::E7, 0}));
        REQUIRE(e7.coefficients[1] == CycloNum::rational(f8, Rational(-108)));
        REQUIRE(e7.coefficients[2] == CycloNum::rational(f8, Rational(-1)));

        auto e8 = solve_syzygy(invariant_triple({GroupKind::E8, 0}));
        const auto& f5 = CycloField::get(5);
        REQUIRE(e8.coefficients[1] == CycloNum::rational(f5, Rational(-1, 3061257408L)));
        REQUIRE(e8.coefficients[2] == CycloNum::rational(f5, Rational(-1, 10119859200L)));
    }
    SECTION("the relation expands to the zero polynomial") {
        for (auto spec : {GroupSpec{GroupKind::A, 6}, GroupSpec{GroupKind::D, 5},
                          GroupSpec{GroupKind::E6, 0}, GroupSpec{GroupKind::E7, 0},
                          GroupSpec{GroupKind::E8, 0}}) {
            auto t = invariant_triple(spec);
            auto s = solve_syzygy(t);
            REQUIRE(syzygy_expansion(t, s).is_zero());
        }
    }
}

TEST_CASE("expansion of abstract X/Y/Z polynomials") {
    SECTION("X on a cyclic group") {
        auto t = invariant_triple({GroupKind::A, 3});
        XyzPoly e = XyzPoly::variable(*t.field, 0);
        REQUIRE(expand_xyz(e, t) == t.x);
    }
    SECTION("X + 2Y on the quaternion quotient") {
        auto t = invariant_triple({GroupKind::D, 4});
        const auto& f = *t.field;
        XyzPoly e = XyzPoly::variable(f, 0);
        XyzPoly y = XyzPoly::variable(f, 1);
        XyzPoly two = XyzPoly::constant(f, Rational(2));
        BiPoly expect(f);  // Z1^2 Z2^2 + Z1^4 + Z2^4
        expect.add_term(2, 2, CycloNum::one(f));
        expect.add_term(4, 0, CycloNum::one(f));
        expect.add_term(0, 4, CycloNum::one(f));
        REQUIRE(expand_xyz(e + two * y, t) == expect);
    }
    SECTION("Y*Z on a cyclic group") {
        auto t = invariant_triple({GroupKind::A, 4});
        const auto& f = *t.field;
        XyzPoly yz = XyzPoly::variable(f, 1) * XyzPoly::variable(f, 2);
        REQUIRE(expand_xyz(yz, t) == BiPoly::monomial(f, 5, 5, CycloNum::one(f)));
    }
}
