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

#include <string_view>

namespace oqec {

/// H = (H^A (x) H^B) (+) K with dim H^A = m and dim H^B = n.
///
/// The decomposition is carried by an isometry V : C^m (x) C^n -> H whose
/// columns are the basis vectors |alpha_k> (x) |beta_i> in A-major order
/// (column k * n + i). A subspace code is the m = 1 case, with P_C = V V^dagger.
class SubsystemDecomposition {
  public:
    /// Throws DimensionError if V is not dim x (m * n) or V^dagger V deviates
    /// from the identity by more than `tol` in Frobenius norm.
    SubsystemDecomposition(ComplexMatrix embedding, Index m, Index n, double tol = kDefaultTol);

    /// Subspace code spanned by the (orthonormal) columns of `basis`.
    static SubsystemDecomposition subspace(ComplexMatrix basis, double tol = kDefaultTol);

    /// H = H^A (x) H^B exactly, with the standard basis.
    static SubsystemDecomposition full(Index m, Index n);

    const ComplexMatrix &embedding() const { return embedding_; }
    Index m() const { return m_; }
    Index n() const { return n_; }
    Index dim() const { return embedding_.rows(); }
    Index dim_complement() const { return dim() - m_ * n_; }
    TensorShape shape() const { return {m_, n_}; }

    /// W_k = V (|alpha_k> (x) 1_n) : C^n -> H, i.e. columns k*n .. k*n+n-1 of V.
    ComplexMatrix sector_isometry(Index k) const;

  private:
    ComplexMatrix embedding_;
    Index m_;
    Index n_;
};

/// P_kl = V (|alpha_k><alpha_l| (x) 1_n) V^dagger, zero-based k, l < m.
ComplexMatrix matrix_unit(const SubsystemDecomposition &dec, Index k, Index l);

/// P_A = V V^dagger = P_11 + ... + P_mm.
ComplexMatrix sector_projector(const SubsystemDecomposition &dec);

/// P_A^perp = 1 - P_A, the projector onto K.
ComplexMatrix complement_projector(const SubsystemDecomposition &dec);

/// P_A M P_A expressed in the (m*n)-dimensional coordinates V^dagger M V.
ComplexMatrix compress(const SubsystemDecomposition &dec, const ComplexMatrix &m);

/// V (sigma^A (x) sigma^B) V^dagger.
ComplexMatrix embed_product(const SubsystemDecomposition &dec, const ComplexMatrix &sigma_a,
                            const ComplexMatrix &sigma_b);

/// Special cases of operator error correction.
enum class CodeClass {
    StandardQEC,    // subspace, non-trivial recovery
    GeneralizedNS,  // identity recovery
    StandardNS,     // identity recovery, sector fills H
    DFS,            // identity recovery, subspace
    GeneralOQEC,    // subsystem, non-trivial recovery
};

std::string_view to_string(CodeClass c);

/// Table of special cases keyed on the decomposition shape and on whether the
/// recovery of the triple is the identity map. StandardNS is reported when
/// the sector is all of H (dim K = 0) with m > 1.
CodeClass classify(const SubsystemDecomposition &dec, bool recovery_is_identity);

}  // namespace oqec
