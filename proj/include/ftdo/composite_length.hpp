/*
Copyright 2026 The ftdo Authors

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

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

namespace ftdo {

/*
 * Path length under the tie-broken order: the true weight sum paired with the
 * sum of per-edge tie keys, compared lexicographically. Reported distances are
 * always the true component; the tie component only makes optima unique.
 *
 * UNREACHABLE is encoded as both components saturated, so the defaulted
 * ordering already places it above every finite value.
 */
struct CompositeLength {
    std::uint64_t true_len = 0;
    std::uint64_t tie_key = 0;

    static constexpr CompositeLength unreachable() {
        return {std::numeric_limits<std::uint64_t>::max(), std::numeric_limits<std::uint64_t>::max()};
    }
    static constexpr CompositeLength zero() { return {0, 0}; }

    constexpr bool is_unreachable() const {
        return true_len == std::numeric_limits<std::uint64_t>::max();
    }

    friend constexpr auto operator<=>(const CompositeLength&, const CompositeLength&) = default;
    friend constexpr bool operator==(const CompositeLength&, const CompositeLength&) = default;

    // saturating
    friend constexpr CompositeLength operator+(const CompositeLength& a, const CompositeLength& b) {
        if (a.is_unreachable() || b.is_unreachable()) {
            return unreachable();
        }
        return {a.true_len + b.true_len, a.tie_key + b.tie_key};
    }
    CompositeLength& operator+=(const CompositeLength& other) { return *this = *this + other; }
};

std::ostream& operator<<(std::ostream& os, const CompositeLength& len);

}  // namespace ftdo
