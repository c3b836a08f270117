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
#include "oqec/report.hpp"

#include <stdexcept>

namespace oqec {

/// Raised when asked to build a recovery for a code that fails its condition.
class NotCorrectableError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Measurement-and-reversal recovery for a subspace code (dec.m() == 1).
///
/// `lambda` must be the standard-order tensor reported by check_kl for this
/// channel and code. Writing Lambda = u D u^dagger, the remixed errors
/// F_c = sum_a u_ac E_a satisfy P F_c^dag F_d P = d_c delta_cd P. For each
/// d_c > tol the partial isometry W_c = polar(F_c V) maps the code onto the
/// syndrome space F_c C, and the recovery applies V W_c^dagger. The part of
/// the output space outside every syndrome space is folded back onto the code
/// by ceil(rank / n) partial isometries onto the code basis so that the
/// result is trace preserving.
///
/// The channel may be rectangular: the code lives in its input space and the
/// recovery maps its output space back into that input space.
QuantumChannel build_standard_recovery(const QuantumChannel &ch, const SubsystemDecomposition &dec,
                                       const LambdaTensor &lambda, double tol = kDefaultTol);

/// Recovery R' = I_A o R for a subsystem code satisfying the operator QEC
/// condition. The sector errors E_{a,k} = E_a V (|alpha_k> (x) 1_n), scaled by
/// 1/sqrt(m), form a channel B(H^B) -> B(H) that satisfies the subspace
/// condition on all of H^B; R is its standard recovery and I_A re-inflates
/// the corrected H^B into the sector.
QuantumChannel build_oqec_recovery(const QuantumChannel &ch, const SubsystemDecomposition &dec,
                                   double tol = kDefaultTol);

/// The sector errors {E_{a,k} / sqrt(m)} as a channel C^n -> H.
QuantumChannel sector_error_channel(const QuantumChannel &ch, const SubsystemDecomposition &dec);

/// Gamma' = {P_kl / sqrt(m)} plus P_A^perp when K is non-trivial:
/// sigma^A (x) sigma^B -> (Tr sigma^A / m) 1^A (x) sigma^B on the sector,
/// identity on K.
QuantumChannel randomize_factor_A(const SubsystemDecomposition &dec);

/// I_A : B(H^B) -> B(H), rho^B -> (1/m) V (1^A (x) rho^B) V^dagger.
QuantumChannel ampliation(const SubsystemDecomposition &dec);

}  // namespace oqec
