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

#include "kleinian/dynkin.hpp"
#include "kleinian/resolution_a.hpp"

using namespace kleinian;

namespace {
std::vector<long> sorted_marks(const AffineDiagram& d) {
    auto m = d.marks;
    std::sort(m.begin(), m.end());
    return m;
}
}  // namespace

TEST_CASE("affine diagrams carry the printed marks") {
    SECTION("cycle of ones") {
        auto d = affine_diagram({GroupKind::A, 2});
        REQUIRE(d.size() == 3);
        REQUIRE(sorted_marks(d) == std::vector<long>{1, 1, 1});
        // a triangle: every node has degree 2
        for (std::size_t i = 0; i < 3; ++i) {
            long deg = 0;
            for (std::size_t j = 0; j < 3; ++j)
                if (i != j) deg += d.edge(i, j);
            REQUIRE(deg == 2);
        }
    }
    SECTION("fork marks at rank 4") {
        auto d = affine_diagram({GroupKind::D, 4});
        REQUIRE(sorted_marks(d) == std::vector<long>{1, 1, 1, 1, 2});
    }
    SECTION("largest exceptional marks") {
        auto d = affine_diagram({GroupKind::E8, 0});
        REQUIRE(sorted_marks(d) == std::vector<long>{1, 2, 2, 3, 3, 4, 4, 5, 6});
        REQUIRE(d.marks[d.oplus] == 1);
    }
    SECTION("node count is rank + 1") {
        for (auto spec : {GroupSpec{GroupKind::A, 7}, GroupSpec{GroupKind::D, 6},
                          GroupSpec{GroupKind::E6, 0}, GroupSpec{GroupKind::E7, 0},
                          GroupSpec{GroupKind::E8, 0}})
            REQUIRE(affine_diagram(spec).size() == static_cast<std::size_t>(spec.rank()) + 1);
    }
    SECTION("elliptic fiber labels kept as metadata") {
        REQUIRE(affine_diagram({GroupKind::A, 3}).kodaira_label == "I_4");
        REQUIRE(affine_diagram({GroupKind::D, 6}).kodaira_label == "I*_2");
        REQUIRE(affine_diagram({GroupKind::E7, 0}).kodaira_label == "III*");
    }
}

TEST_CASE("Cartan null vectors") {
    SECTION("cycle gives the all-ones vector") {
        for (int r : {1, 2, 5, 10}) {
            auto d = affine_diagram({GroupKind::A, r});
            auto nv = null_vector(cartan_matrix(d));
            REQUIRE(nv == std::vector<long>(static_cast<std::size_t>(r) + 1, 1));
        }
    }
    SECTION("null vector equals the printed marks for every kind") {
        for (auto spec : {GroupSpec{GroupKind::A, 4}, GroupSpec{GroupKind::D, 4},
                          GroupSpec{GroupKind::D, 8}, GroupSpec{GroupKind::E6, 0},
                          GroupSpec{GroupKind::E7, 0}, GroupSpec{GroupKind::E8, 0}}) {
            auto d = affine_diagram(spec);
            auto nv = null_vector(cartan_matrix(d));
            REQUIRE(nv.size() == d.size());
            for (std::size_t i = 0; i < nv.size(); ++i) REQUIRE(nv[i] == d.marks[i]);
        }
    }
    SECTION("Cartan times marks is exactly zero") {
        for (auto spec : {GroupSpec{GroupKind::D, 5}, GroupSpec{GroupKind::E8, 0}}) {
            auto d = affine_diagram(spec);
            auto c = cartan_matrix(d);
            for (std::size_t i = 0; i < d.size(); ++i) {
                long acc = 0;
                for (std::size_t j = 0; j < d.size(); ++j) acc += c[i][j] * d.marks[j];
                REQUIRE(acc == 0);
            }
        }
    }
    SECTION("non-affine input is rejected") {
        std::vector<std::vector<long>> finite{{2, -1}, {-1, 2}};
        REQUIRE_THROWS(null_vector(finite));
    }
}

TEST_CASE("profile matching") {
    SECTION("match is invariant under component relabeling") {
        auto t = invariant_triple({GroupKind::A, 3});
        auto prof = divisor_profile_A(t.x, 3);
        DivisorProfile renamed;
        auto rename = [](const std::string& id) { return "curve_" + id; };
        for (const auto& c : prof.components)
            renamed.add_component(rename(c.id), c.kind, c.multiplicity);
        for (const auto& [e, n] : prof.adjacency)
            renamed.add_adjacency(rename(e.first), rename(e.second), n);
        renamed.finalize();
        REQUIRE(match_profile(prof, affine_diagram({GroupKind::A, 3})).ok);
        REQUIRE(match_profile(renamed, affine_diagram({GroupKind::A, 3})).ok);
    }
    SECTION("doubled marks are reported as a mark mismatch") {
        auto t = invariant_triple({GroupKind::A, 2});
        auto prof = divisor_profile_A(t.x * t.x, 2);
        auto m = match_profile(prof, affine_diagram({GroupKind::A, 2}));
        REQUIRE_FALSE(m.ok);
        REQUIRE(m.reason.find("mark") != std::string::npos);
    }
    SECTION("wrong-kind diagram does not match") {
        auto t = invariant_triple({GroupKind::A, 4});
        auto prof = divisor_profile_A(t.x, 4);
        REQUIRE_FALSE(match_profile(prof, affine_diagram({GroupKind::D, 4})).ok);
    }
    SECTION("the mapping sends the boundary pair to the distinguished node") {
        auto t = invariant_triple({GroupKind::A, 3});
        auto m = match_profile(divisor_profile_A(t.x, 3), affine_diagram({GroupKind::A, 3}));
        REQUIRE(m.ok);
        REQUIRE(m.mapping.at("oplus") == "c0+c4");
    }
}
