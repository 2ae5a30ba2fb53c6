// Copyright 2026 The floqscram Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "floqscram/connectivity.h"
#include "floqscram/lattice.h"

namespace floqscram::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInvariant = 3;
inline constexpr std::uint64_t kDefaultSeed = 2024;

class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class InvariantError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

struct RunConfig {
    std::string command;
    LayoutKind layout = LayoutKind::Single;
    std::size_t side = 8;
    Rule rule = Rule::One;
    std::string gate = "W";
    std::size_t t_min = 1;
    std::size_t t_max = 0;  // 0 selects a per-command default
    std::size_t threshold = 0;  // 0 means N^2 / 2
    std::string refs = "0";
    std::string rlist;
    std::string sides = "8,12,16,20,24,28,32";
    std::string pauli = "X";
    std::uint64_t seed = kDefaultSeed;
    std::string out;
    Format format = Format::Csv;
};

// "1,4,7", "2-5" and mixtures; sorted, unique.
std::vector<std::size_t> parse_index_list(const std::string& text);

// "0,9,17", "all" or "random:K" (K distinct qubits drawn with mt19937_64(seed)).
std::vector<std::size_t> resolve_refs(const std::string& text, std::size_t num_qubits, std::uint64_t seed);

std::vector<std::size_t> draw_distinct(std::size_t count, std::size_t num_qubits, std::uint64_t seed);

struct Rendered {
    std::string text;
    bool passed = true;  // false when validate found a violated invariant
};

Rendered render(const RunConfig& config);

// Parses argv-style arguments, runs, writes output; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace floqscram::cli
