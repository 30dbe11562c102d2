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

#include "kleinian/mckay.hpp"

using namespace kleinian;

TEST_CASE("modular character tables") {
    SECTION("cyclic of order 3: three linear characters") {
        auto g = build_group({GroupKind::A, 2});
        auto cd = character_data(g);
        REQUIRE(cd.dimensions == std::vector<long>{1, 1, 1});
    }
    SECTION("quaternion group: dimensions 1,1,1,1,2") {
        auto g = build_group({GroupKind::D, 4});
        auto cd = character_data(g);
        REQUIRE(cd.dimensions == std::vector<long>{1, 1, 1, 1, 2});
        long burnside = 0;
        for (long d : cd.dimensions) burnside += d * d;
        REQUIRE(burnside == 8);
    }
    SECTION("binary icosahedral: nine irreducibles") {
        auto g = build_group({GroupKind::E8, 0});
        auto cd = character_data(g);
        REQUIRE(cd.dimensions.size() == 9);
        std::vector<long> dims = cd.dimensions;
        std::sort(dims.begin(), dims.end());
        REQUIRE(dims == std::vector<long>{1, 2, 2, 3, 3, 4, 4, 5, 6});
    }
    SECTION("the prime satisfies the stated congruence and bound") {
        auto g = build_group({GroupKind::E7, 0});
        auto cd = character_data(g);
        long modulus = lcm_long(group_exponent(g), static_cast<long>(g.field->order()));
        REQUIRE(cd.p > 2 * g.order());
        REQUIRE((cd.p - 1) % modulus == 0);
        REQUIRE(is_prime(cd.p));
    }
    SECTION("trivial character occupies the first row") {
        auto g = build_group({GroupKind::E6, 0});
        auto cd = character_data(g);
        for (auto v : cd.table[0]) REQUIRE(v == 1);
        REQUIRE(cd.dimensions[0] == 1);
    }
}

TEST_CASE("McKay graphs") {
    SECTION("cyclic group gives the cycle") {
        auto g = build_group({GroupKind::A, 4});
        auto mg = mckay_graph(g, character_data(g));
        for (std::size_t i = 0; i < 5; ++i) {
            long deg = 0;
            for (std::size_t j = 0; j < 5; ++j) deg += mg.adjacency[i][j];
            REQUIRE(deg == 2);
            REQUIRE(mg.dimensions[i] == 1);
        }
    }
    SECTION("dimension identity 2 d_i = sum_j A_ij d_j") {
        for (auto spec : {GroupSpec{GroupKind::A, 5}, GroupSpec{GroupKind::D, 6},
                          GroupSpec{GroupKind::E6, 0}, GroupSpec{GroupKind::E7, 0},
                          GroupSpec{GroupKind::E8, 0}}) {
            auto g = build_group(spec);
            auto mg = mckay_graph(g, character_data(g));
            for (std::size_t i = 0; i < mg.dimensions.size(); ++i) {
                long acc = 0;
                for (std::size_t j = 0; j < mg.dimensions.size(); ++j)
                    acc += mg.adjacency[i][j] * mg.dimensions[j];
                REQUIRE(acc == 2 * mg.dimensions[i]);
            }
        }
    }
    SECTION("symmetric, no self-loops, Burnside") {
        for (auto spec : {GroupSpec{GroupKind::A, 3}, GroupSpec{GroupKind::D, 5},
                          GroupSpec{GroupKind::E8, 0}}) {
            auto g = build_group(spec);
            auto mg = mckay_graph(g, character_data(g));
            long burnside = 0;
            for (std::size_t i = 0; i < mg.dimensions.size(); ++i) {
                burnside += mg.dimensions[i] * mg.dimensions[i];
                REQUIRE(mg.adjacency[i][i] == 0);
                for (std::size_t j = 0; j < mg.dimensions.size(); ++j)
                    REQUIRE(mg.adjacency[i][j] == mg.adjacency[j][i]);
            }
            REQUIRE(burnside == g.order());
        }
    }
    SECTION("doubled edge for the order-2 cyclic group") {
        auto g = build_group({GroupKind::A, 1});
        auto mg = mckay_graph(g, character_data(g));
        REQUIRE(mg.adjacency[0][1] == 2);
    }
}

TEST_CASE("McKay correspondence against the diagrams") {
    SECTION("each kind matches its own diagram with trivial onto the distinguished node") {
        for (auto spec : {GroupSpec{GroupKind::A, 2}, GroupSpec{GroupKind::A, 6},
                          GroupSpec{GroupKind::D, 4}, GroupSpec{GroupKind::D, 8},
                          GroupSpec{GroupKind::E6, 0}, GroupSpec{GroupKind::E7, 0},
                          GroupSpec{GroupKind::E8, 0}}) {
            auto g = build_group(spec);
            auto res = verify_mckay(g, spec);
            INFO(spec.name() << ": " << res.reason);
            REQUIRE(res.ok);
        }
    }
    SECTION("wrong target mismatches") {
        auto g = build_group({GroupKind::E8, 0});
        REQUIRE_FALSE(verify_mckay(g, {GroupKind::A, 8}).ok);
    }
    SECTION("tetrahedral dimensions land on the printed marks") {
        auto g = build_group({GroupKind::E6, 0});
        auto cd = character_data(g);
        std::vector<long> dims = cd.dimensions;
        std::sort(dims.begin(), dims.end());
        REQUIRE(dims == std::vector<long>{1, 1, 1, 2, 2, 2, 3});
    }
}
