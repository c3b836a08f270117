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

#include "oqec/code.hpp"

#include <sstream>

namespace oqec {

SubsystemDecomposition::SubsystemDecomposition(ComplexMatrix embedding, Index m, Index n, double tol)
    : embedding_(std::move(embedding)), m_(m), n_(n) {
    if (m <= 0 || n <= 0) {
        throw DimensionError("SubsystemDecomposition: m and n must be positive");
    }
    if (embedding_.cols() != m * n || embedding_.rows() < m * n) {
        std::ostringstream msg;
        msg << "SubsystemDecomposition: embedding is " << shape_string(embedding_) << ", expected dim x "
            << m * n << " with dim >= " << m * n;
        throw DimensionError(msg.str());
    }
    const double defect = (embedding_.adjoint() * embedding_ - identity(m * n)).norm();
    if (defect > tol) {
        std::ostringstream msg;
        msg << "SubsystemDecomposition: embedding is not an isometry (||V^dag V - 1||_F = " << defect << ")";
        throw DimensionError(msg.str());
    }
}

SubsystemDecomposition SubsystemDecomposition::subspace(ComplexMatrix basis, double tol) {
    const Index n = basis.cols();
    return SubsystemDecomposition(std::move(basis), 1, n, tol);
}

SubsystemDecomposition SubsystemDecomposition::full(Index m, Index n) {
    return SubsystemDecomposition(identity(m * n), m, n);
}

ComplexMatrix SubsystemDecomposition::sector_isometry(Index k) const {
    if (k < 0 || k >= m_) {
        throw std::out_of_range("sector_isometry: k = " + std::to_string(k) + " outside [0, " +
                                std::to_string(m_) + ")");
    }
    return embedding_.middleCols(k * n_, n_);
}

ComplexMatrix matrix_unit(const SubsystemDecomposition &dec, Index k, Index l) {
    if (k < 0 || k >= dec.m() || l < 0 || l >= dec.m()) {
        throw std::out_of_range("matrix_unit: (" + std::to_string(k) + ", " + std::to_string(l) +
                                ") outside [0, " + std::to_string(dec.m()) + ")");
    }
    return dec.sector_isometry(k) * dec.sector_isometry(l).adjoint();
}

ComplexMatrix sector_projector(const SubsystemDecomposition &dec) {
    return dec.embedding() * dec.embedding().adjoint();
}

ComplexMatrix complement_projector(const SubsystemDecomposition &dec) {
    return identity(dec.dim()) - sector_projector(dec);
}

ComplexMatrix compress(const SubsystemDecomposition &dec, const ComplexMatrix &m) {
    if (m.rows() != dec.dim() || m.cols() != dec.dim()) {
        throw DimensionError("compress: operator " + shape_string(m) + " does not act on C^" +
                             std::to_string(dec.dim()));
    }
    return dec.embedding().adjoint() * m * dec.embedding();
}

ComplexMatrix embed_product(const SubsystemDecomposition &dec, const ComplexMatrix &sigma_a,
                            const ComplexMatrix &sigma_b) {
    if (sigma_a.rows() != dec.m() || sigma_a.cols() != dec.m() || sigma_b.rows() != dec.n() ||
        sigma_b.cols() != dec.n()) {
        throw DimensionError("embed_product: factors " + shape_string(sigma_a) + " and " + shape_string(sigma_b) +
                             " do not match m = " + std::to_string(dec.m()) + ", n = " + std::to_string(dec.n()));
    }
    return dec.embedding() * tensor(sigma_a, sigma_b) * dec.embedding().adjoint();
}

std::string_view to_string(CodeClass c) {
    switch (c) {
        case CodeClass::StandardQEC:
            return "StandardQEC";
        case CodeClass::GeneralizedNS:
            return "GeneralizedNS";
        case CodeClass::StandardNS:
            return "StandardNS";
        case CodeClass::DFS:
            return "DFS";
        case CodeClass::GeneralOQEC:
            return "GeneralOQEC";
    }
    return "unknown";
}

CodeClass classify(const SubsystemDecomposition &dec, bool recovery_is_identity) {
    if (!recovery_is_identity) {
        return dec.m() == 1 ? CodeClass::StandardQEC : CodeClass::GeneralOQEC;
    }
    if (dec.m() == 1) {
        return CodeClass::DFS;
    }
    return dec.dim_complement() == 0 ? CodeClass::StandardNS : CodeClass::GeneralizedNS;
}

}  // namespace oqec
