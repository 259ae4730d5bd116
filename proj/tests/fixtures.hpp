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

#include <string>
#include <vector>

#include "ftdo/graph.hpp"
#include "ftdo/oracle.hpp"

namespace ftdo::testing {

// Chain 0-1-2-3 plus the long edge 0-3.
inline Graph g1() {
    return Graph(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {0, 3, 5}});
}

// Star centred at 0.
inline Graph g3() {
    return Graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
}

// Chain 0-1-2-3-4 with detours 1-5-2 and 2-6-3.
inline Graph g6() {
    return Graph(7, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {1, 5, 1}, {5, 2, 3}, {3, 6, 1}, {6, 2, 3}});
}

inline constexpr EdgeId e0 = 0, e1 = 1, e2 = 2, e3 = 3;
inline constexpr EdgeId f0 = 0, f1 = 1, f2 = 2;
inline constexpr EdgeId k0 = 0, k1 = 1, k2 = 2, k3 = 3, k4 = 4, k5 = 5, k6 = 6, k7 = 7;

inline const char* kG1Text =
    "4 4\n"
    "0 1 1\n"
    "1 2 2\n"
    "2 3 1\n"
    "0 3 5\n";

}  // namespace ftdo::testing
