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

#include "oqec/mat_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace oqec {

ComplexMatrix identity(Index dim) {
    return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix ket_bra(Index rows, Index cols, Index row, Index col) {
    if (row < 0 || row >= rows || col < 0 || col >= cols) {
        throw std::out_of_range("ket_bra: index out of range");
    }
    ComplexMatrix out = ComplexMatrix::Zero(rows, cols);
    out(row, col) = 1.0;
    return out;
}

ComplexMatrix tensor(const ComplexMatrix &left, const ComplexMatrix &right) {
    const Index rr = right.rows();
    const Index rc = right.cols();
    ComplexMatrix out(left.rows() * rr, left.cols() * rc);
    for (Index i = 0; i < left.rows(); ++i) {
        for (Index j = 0; j < left.cols(); ++j) {
            out.block(i * rr, j * rc, rr, rc) = left(i, j) * right;
        }
    }
    return out;
}

static void require_bipartite(const ComplexMatrix &m, TensorShape shape, const char *who) {
    if (shape.dimA <= 0 || shape.dimB <= 0 || m.rows() != m.cols() || m.rows() != shape.total()) {
        std::ostringstream msg;
        msg << who << ": matrix " << shape_string(m) << " does not factor as " << shape.dimA << " x "
            << shape.dimB;
        throw DimensionError(msg.str());
    }
}

ComplexMatrix partial_trace_A(const ComplexMatrix &m, TensorShape shape) {
    require_bipartite(m, shape, "partial_trace_A");
    const Index nb = shape.dimB;
    ComplexMatrix out = ComplexMatrix::Zero(nb, nb);
    for (Index k = 0; k < shape.dimA; ++k) {
        out += m.block(k * nb, k * nb, nb, nb);
    }
    return out;
}

ComplexMatrix partial_trace_B(const ComplexMatrix &m, TensorShape shape) {
    require_bipartite(m, shape, "partial_trace_B");
    const Index nb = shape.dimB;
    ComplexMatrix out(shape.dimA, shape.dimA);
    for (Index k = 0; k < shape.dimA; ++k) {
        for (Index l = 0; l < shape.dimA; ++l) {
            out(k, l) = m.block(k * nb, l * nb, nb, nb).trace();
        }
    }
    return out;
}

double frobenius_norm(const ComplexMatrix &m) {
    return m.norm();
}

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("frobenius_distance: " + shape_string(a) + " vs " + shape_string(b));
    }
    return (a - b).norm();
}

static double default_rank_tol(const ComplexMatrix &m) {
    return static_cast<double>(std::max(m.rows(), m.cols())) * std::numeric_limits<double>::epsilon();
}

ComplexMatrix polar_isometry(const ComplexMatrix &m, double rank_tol) {
    if (m.size() == 0) {
        return ComplexMatrix::Zero(m.rows(), m.cols());
    }
    if (rank_tol < 0) {
        rank_tol = default_rank_tol(m);
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto &s = svd.singularValues();
    const double cutoff = rank_tol * std::max(1.0, s.size() ? s(0) : 0.0);
    Index rank = 0;
    while (rank < s.size() && s(rank) > cutoff) {
        ++rank;
    }
    return svd.matrixU().leftCols(rank) * svd.matrixV().leftCols(rank).adjoint();
}

HermitianEigen herm_eig(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        throw DimensionError("herm_eig: matrix " + shape_string(m) + " is not square");
    }
    const double skew = (m - m.adjoint()).norm();
    if (skew > tol) {
        std::ostringstream msg;
        msg << "herm_eig: matrix is not Hermitian (||M - M^dagger||_F = " << skew << ")";
        throw std::invalid_argument(msg.str());
    }
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("herm_eig: eigensolver did not converge");
    }
    // Eigen sorts ascending.
    HermitianEigen out;
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

ComplexMatrix range_basis(const ComplexMatrix &m, double rank_tol) {
    if (m.size() == 0) {
        return ComplexMatrix(m.rows(), 0);
    }
    if (rank_tol < 0) {
        rank_tol = default_rank_tol(m);
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU);
    const auto &s = svd.singularValues();
    const double cutoff = rank_tol * std::max(1.0, s(0));
    Index rank = 0;
    while (rank < s.size() && s(rank) > cutoff) {
        ++rank;
    }
    return svd.matrixU().leftCols(rank);
}

ComplexMatrix orthogonal_complement(const ComplexMatrix &v) {
    const Index dim = v.rows();
    if (v.cols() == 0) {
        return identity(dim);
    }
    if (v.cols() >= dim) {
        return ComplexMatrix(dim, 0);
    }
    const ComplexMatrix projector = identity(dim) - v * v.adjoint();
    ComplexMatrix basis = range_basis(projector, 1e-8);
    return basis.leftCols(std::min<Index>(basis.cols(), dim - v.cols()));
}

ComplexMatrix random_ginibre(Index rows, Index cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix out(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            out(i, j) = Complex(re, im);
        }
    }
    return out;
}

ComplexMatrix random_unitary(Index dim, std::mt19937_64 &rng) {
    const ComplexMatrix z = random_ginibre(dim, dim, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        const double mag = std::abs(d);
        q.col(j) *= mag > 0 ? d / mag : Complex(1.0);
    }
    return q;
}

ComplexMatrix random_isometry(Index rows, Index cols, std::mt19937_64 &rng) {
    if (cols > rows) {
        throw DimensionError("random_isometry: cannot embed " + std::to_string(cols) + " columns in C^" +
                             std::to_string(rows));
    }
    return random_unitary(rows, rng).leftCols(cols);
}

std::string shape_string(const ComplexMatrix &m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace oqec
