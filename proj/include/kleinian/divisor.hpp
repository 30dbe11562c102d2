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
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace kleinian {

/// Kind of a divisor component near the exceptional set.
///  - Exceptional: compact (-2)-curve of the minimal resolution.
///  - OpenBoundary: non-compact toric boundary curve (the c-curves of the
///    A-type charts); candidates for the distinguished node, pairwise
///    coalesced when matching an A-type diagram.
///  - OpenResidual: non-compact curve cut out by a residual factor (proper
///    transform of the function's own zero set).
/// Both open kinds serialize as "open".
enum class ComponentKind { Exceptional, OpenBoundary, OpenResidual };

struct Component {
    std::string id;
    ComponentKind kind;
    long multiplicity;
};

/// Named curve components with integer multiplicities plus intersection
/// adjacency. Components with multiplicity zero are never stored.
/// `degeneracies` records configuration defects that no simply-laced dual
/// graph can represent (e.g. three divisor components through one point);
/// a profile carrying one never matches a diagram.
struct DivisorProfile {
    std::vector<Component> components;                          // sorted by id
    std::map<std::pair<std::string, std::string>, long> adjacency;  // id-sorted pairs
    std::vector<std::string> degeneracies;

    void add_component(const std::string& id, ComponentKind kind, long mult) {
        if (mult == 0) return;
        components.push_back({id, kind, mult});
    }
    void add_adjacency(std::string a, std::string b, long count = 1) {
        if (count == 0) return;
        if (a > b) std::swap(a, b);
        adjacency[{a, b}] += count;
    }

    const Component* find(const std::string& id) const {
        for (const auto& c : components)
            if (c.id == id) return &c;
        return nullptr;
    }
    bool has(const std::string& id) const { return find(id) != nullptr; }

    /// Drop adjacency entries whose endpoints are not present components and
    /// bring components into canonical (id-sorted) order.
    void finalize() {
        std::sort(components.begin(), components.end(),
                  [](const Component& x, const Component& y) { return x.id < y.id; });
        for (auto it = adjacency.begin(); it != adjacency.end();) {
            if (!has(it->first.first) || !has(it->first.second))
                it = adjacency.erase(it);
            else
                ++it;
        }
    }

    friend bool operator==(const DivisorProfile& p, const DivisorProfile& q) {
        if (p.adjacency != q.adjacency) return false;
        if (p.degeneracies != q.degeneracies) return false;
        if (p.components.size() != q.components.size()) return false;
        for (std::size_t i = 0; i < p.components.size(); ++i) {
            const auto& a = p.components[i];
            const auto& b = q.components[i];
            if (a.id != b.id || a.kind != b.kind || a.multiplicity != b.multiplicity)
                return false;
        }
        return true;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (const auto& c : components) {
            os << c.id << ":" << c.multiplicity;
            os << (c.kind == ComponentKind::Exceptional ? "" : "(open)") << " ";
        }
        for (const auto& [e, n] : adjacency)
            os << e.first << "." << e.second << "=" << n << " ";
        return os.str();
    }
};

}  // namespace kleinian
