// Copyright 2026 The oqec Authors
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

#include "oqec/channel.hpp"
#include "oqec/code.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

/// JSON problem files.
///
///   {
///     "dim": 8,
///     "kraus": [ <matrix>, ... ],
///     "decomposition": { "embedding": <matrix>, "m": 1, "n": 2 },
///     "recovery": [ <matrix>, ... ],      (optional)
///     "tol": 1e-9                          (optional)
///   }
///
/// A <matrix> is a list of rows, each row a list of [re, im] pairs. The
/// embedding is dim x (m n) with A-major columns. Doubles are written in the
/// shortest form that parses back to the same bits.
namespace oqec {

/// Malformed input. `where` locates the problem: "line L, column C" for
/// syntax errors, otherwise a JSON path such as "kraus[0][3]" followed by
/// its line and column.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string where, const std::string &what);
    const std::string &where() const { return where_; }

  private:
    std::string where_;
};

struct ProblemFile {
    Index dim = 0;
    std::vector<ComplexMatrix> kraus;
    ComplexMatrix embedding;
    Index m = 1;
    Index n = 1;
    std::optional<std::vector<ComplexMatrix>> recovery;
    double tol = kDefaultTol;

    QuantumChannel channel() const;
    SubsystemDecomposition decomposition() const;
    std::optional<QuantumChannel> recovery_channel() const;
};

ProblemFile parse_problem(std::string_view text);
ProblemFile read_problem(const std::filesystem::path &path);

std::string serialize_problem(const ProblemFile &problem);
void write_problem(const ProblemFile &problem, const std::filesystem::path &path);

}  // namespace oqec
