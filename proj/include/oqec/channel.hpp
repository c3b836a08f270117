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

#include "oqec/mat_core.hpp"
#include "oqec/report.hpp"

#include <cstdint>
#include <vector>

namespace oqec {

/// A linear map rho -> sum_a E_a rho E_a^dagger from B(C^dim_in) to
/// B(C^dim_out), stored as its ordered Kraus list.
///
/// Trace preservation is not enforced here; use is_cptp. Complete positivity
/// holds for any Kraus list.
class QuantumChannel {
  public:
    /// Infers dimensions from the first operator. Throws DimensionError on an
    /// empty list or inconsistent shapes.
    explicit QuantumChannel(std::vector<ComplexMatrix> kraus);

    QuantumChannel(std::vector<ComplexMatrix> kraus, Index dim_in, Index dim_out);

    static QuantumChannel identity(Index dim);
    static QuantumChannel unitary(ComplexMatrix u);

    const std::vector<ComplexMatrix> &kraus() const { return kraus_; }
    const ComplexMatrix &operator[](std::size_t a) const { return kraus_[a]; }
    std::size_t size() const { return kraus_.size(); }
    Index dim_in() const { return dim_in_; }
    Index dim_out() const { return dim_out_; }

    /// sum_a E_a^dagger E_a
    ComplexMatrix effect_sum() const;

  private:
    std::vector<ComplexMatrix> kraus_;
    Index dim_in_ = 0;
    Index dim_out_ = 0;
};

/// Trace preservation: residual ||sum_a E_a^dag E_a - 1||_F.
CheckReport is_cptp(const QuantumChannel &ch, double tol = kDefaultTol);

ComplexMatrix apply(const QuantumChannel &ch, const ComplexMatrix &rho);

/// `second` after `first`, with Kraus list {R_b E_a} ordered b-major.
QuantumChannel compose(const QuantumChannel &second, const QuantumChannel &first);

/// Maps agree on every matrix unit |i><j| of the input space within `tol`.
bool channels_equal(const QuantumChannel &a, const QuantumChannel &b, double tol = kDefaultTol);

/// Largest ||a(|i><j|) - b(|i><j|)||_F over matrix units.
double channel_distance(const QuantumChannel &a, const QuantumChannel &b);

/// E_a -> sum_b mixing(b, a) E_b. `mixing` must have one row per Kraus
/// operator; any column count is allowed. When mixing^dagger mixing = 1 the
/// new list represents the same channel.
QuantumChannel remix(const QuantumChannel &ch, const ComplexMatrix &mixing);

/// Seeded CPTP channel from a Haar isometry C^dim_in -> C^num_kraus (x) C^dim_out
/// cut into num_kraus blocks. Requires num_kraus * dim_out >= dim_in.
QuantumChannel random_channel(Index dim_in, Index dim_out, Index num_kraus, std::uint64_t seed);

/// Same construction, drawing from a caller-owned engine.
QuantumChannel random_channel(Index dim_in, Index dim_out, Index num_kraus, std::mt19937_64 &rng);

}  // namespace oqec
