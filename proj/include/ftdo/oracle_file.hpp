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

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ftdo/graph.hpp"
#include "ftdo/oracle.hpp"

namespace ftdo {

/*
 * Binary oracle file, all integers little-endian with the widths declared in
 * the header:
 *
 *   "FTDOORCL" | u32 version | u8 vertex, edge, length widths | u8 0
 *   u64 graph digest | u32 n | u32 m | u32 d | u64 seed
 *   m x (u32 a, u32 b, u64 weight, u64 tie key)
 *   n*n x (u8 unreachable, u64 true_len, u64 tie_key)            dist table
 *   n*n x (i32 parent, i32 parent edge, u32 depth, u32 in, u32 out)  per root
 *   u64 entry count (= 4n^4)
 *   entries in key order: u32 count, d x i32 ids (-1 padded),
 *                         u8 unreachable, u64 true_len, u64 tie_key
 */
inline constexpr char kOracleMagic[8] = {'F', 'T', 'D', 'O', 'O', 'R', 'C', 'L'};
inline constexpr std::uint32_t kOracleVersion = 1;

class OracleFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string serialize_oracle(const Oracle& oracle);

/// Rebuilds and cross-checks the index; `expected` (if given) must match the stored graph digest.
Oracle deserialize_oracle(std::string_view bytes, const Graph* expected = nullptr);

void save_oracle(const Oracle& oracle, const std::filesystem::path& path);
Oracle load_oracle(const std::filesystem::path& path, const Graph* expected = nullptr);

}  // namespace ftdo
