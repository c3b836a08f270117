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

/// Correctability checkers.
///
/// Algebraic checkers extract each scalar by a normalised trace,
/// lambda = Tr(P_k M P_l P_lk) / n, and then measure how far the operator is
/// from lambda * P_kl. When the condition holds the extraction is exact; when
/// it fails the residual is the Frobenius distance to the best multiple of P_kl.
///
/// Operational checkers quantify over operator spaces (all sigma in the
/// semigroup, all of 1^A (x) B(H^B)). Both sides of every tested identity are
/// linear in sigma, so it is enough to test a spanning set; the checkers use
/// the product matrix units |p><q| (x) |r><s|, which is (m n)^2 evaluations.
///
/// Every checker requires the channel's input space to be H. The NS and
/// triple checks also compress the output, so there the output must be H too.
/// All index tuples in reports are zero-based.
namespace oqec {

/// P_C E_a^dag E_b P_C = lambda_ab P_C. Requires dec.m() == 1.
CheckReport check_kl(const QuantumChannel &ch, const SubsystemDecomposition &dec, double tol = kDefaultTol);

/// P_k E_a P_l = lambda_akl P_kl together with E_a P_A = P_A E_a P_A.
CheckReport check_ns_algebraic(const QuantumChannel &ch, const SubsystemDecomposition &dec,
                               double tol = kDefaultTol);

/// (Tr_A o P_A o E)(sigma) = Tr_A(sigma) for every sigma in the semigroup.
CheckReport check_ns_operational(const QuantumChannel &ch, const SubsystemDecomposition &dec,
                                 double tol = kDefaultTol);

/// P_k E_a^dag E_b P_l = lambda_abkl P_kl.
CheckReport check_oqec(const QuantumChannel &ch, const SubsystemDecomposition &dec, double tol = kDefaultTol);

/// (R o E)(sigma) = sigma for every sigma in 1^A (x) B(H^B).
CheckReport check_opalg_correct(const QuantumChannel &r, const QuantumChannel &ch,
                                const SubsystemDecomposition &dec, double tol = kDefaultTol);

/// (Tr_A o P_A o R o E)(sigma) = Tr_A(sigma) for every sigma in the semigroup;
/// the operational NS check applied to R o E.
CheckReport check_correctable_triple(const QuantumChannel &r, const QuantumChannel &ch,
                                     const SubsystemDecomposition &dec, double tol = kDefaultTol);

}  // namespace oqec
