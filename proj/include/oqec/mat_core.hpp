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

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

/// Dense complex linear algebra used throughout the library.
///
/// Composite indices on a bipartite space H^A (x) H^B are A-major: the basis
/// vector |k> (x) |i> sits at position k * dimB + i. Every routine that builds
/// or splits tensor products uses this one convention.
namespace oqec {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Default absolute Frobenius-norm tolerance for every checker.
inline constexpr double kDefaultTol = 1e-9;

/// Raised when operands have incompatible shapes.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Factorisation dimA x dimB of a square matrix's dimension.
struct TensorShape {
    Index dimA;
    Index dimB;

    Index total() const { return dimA * dimB; }
};

ComplexMatrix identity(Index dim);

/// |row><col| in a rows x cols space.
ComplexMatrix ket_bra(Index rows, Index cols, Index row, Index col);

/// Kronecker product, left factor as the slow index.
ComplexMatrix tensor(const ComplexMatrix &left, const ComplexMatrix &right);

/// Tr_A over an A-major bipartite matrix; returns a dimB x dimB matrix.
ComplexMatrix partial_trace_A(const ComplexMatrix &m, TensorShape shape);

/// Tr_B over an A-major bipartite matrix; returns a dimA x dimA matrix.
ComplexMatrix partial_trace_B(const ComplexMatrix &m, TensorShape shape);

double frobenius_norm(const ComplexMatrix &m);

/// ||a - b||_F; throws DimensionError on shape mismatch.
double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);

/// Partial isometry W from the polar decomposition M = W sqrt(M^dagger M).
///
/// Singular values at or below `rank_tol * max(1, s_max)` are treated as zero,
/// so W acts isometrically on the support of M^dagger M and annihilates its
/// kernel. A negative `rank_tol` selects max(rows, cols) * epsilon.
ComplexMatrix polar_isometry(const ComplexMatrix &m, double rank_tol = -1.0);

struct HermitianEigen {
    RealVector eigenvalues;      // descending
    ComplexMatrix eigenvectors;  // columns, orthonormal, matching order
};

/// Eigendecomposition of a Hermitian matrix. Rejects inputs whose
/// anti-Hermitian part ||M - M^dagger||_F exceeds `tol`.
HermitianEigen herm_eig(const ComplexMatrix &m, double tol = kDefaultTol);

/// Orthonormal basis (as columns) of the range of `m`, via SVD.
ComplexMatrix range_basis(const ComplexMatrix &m, double rank_tol = -1.0);

/// Orthonormal basis of the orthogonal complement of the column span of an
/// isometry `v` inside C^{v.rows()}.
ComplexMatrix orthogonal_complement(const ComplexMatrix &v);

/// Haar-distributed unitary (QR of a complex Ginibre matrix with the phase
/// of R's diagonal folded back into Q).
ComplexMatrix random_unitary(Index dim, std::mt19937_64 &rng);

/// First `cols` columns of a Haar unitary on C^rows.
ComplexMatrix random_isometry(Index rows, Index cols, std::mt19937_64 &rng);

/// Entries i.i.d. standard complex Gaussian.
ComplexMatrix random_ginibre(Index rows, Index cols, std::mt19937_64 &rng);

std::string shape_string(const ComplexMatrix &m);

}  // namespace oqec
