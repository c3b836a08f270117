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

#include "oqec/recovery.hpp"

#include "oqec/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace oqec {

QuantumChannel build_standard_recovery(const QuantumChannel &ch, const SubsystemDecomposition &dec,
                                       const LambdaTensor &lambda, double tol) {
    if (dec.m() != 1) {
        throw std::invalid_argument("build_standard_recovery: decomposition must be a subspace code (m = 1)");
    }
    if (ch.dim_in() != dec.dim()) {
        throw DimensionError("build_standard_recovery: code lives in C^" + std::to_string(dec.dim()) +
                             " but the channel acts on C^" + std::to_string(ch.dim_in()));
    }
    const Index count = static_cast<Index>(ch.size());
    if (lambda.order() != LambdaOrder::Standard || lambda.extents() != std::vector<Index>{count, count}) {
        throw std::invalid_argument("build_standard_recovery: lambda is not a standard-order tensor for " +
                                    std::to_string(count) + " Kraus operators");
    }
    if (lambda.residual > tol) {
        std::ostringstream msg;
        msg << "build_standard_recovery: code condition fails (residual " << lambda.residual << " > " << tol << ")";
        throw NotCorrectableError(msg.str());
    }

    const ComplexMatrix &v = dec.embedding();
    const Index n = dec.n();
    const HermitianEigen eig = herm_eig(lambda.standard_matrix(), std::max(tol, 1e-12));

    std::vector<ComplexMatrix> kraus;
    std::vector<ComplexMatrix> syndromes;
    for (Index c = 0; c < count; ++c) {
        if (eig.eigenvalues(c) <= tol) {
            break;  // descending order
        }
        ComplexMatrix remixed = ComplexMatrix::Zero(ch.dim_out(), ch.dim_in());
        for (Index a = 0; a < count; ++a) {
            remixed += eig.eigenvectors(a, c) * ch[static_cast<std::size_t>(a)];
        }
        ComplexMatrix w = polar_isometry(remixed * v);
        kraus.push_back(v * w.adjoint());
        syndromes.push_back(std::move(w));
    }

    ComplexMatrix covered(ch.dim_out(), n * static_cast<Index>(syndromes.size()));
    for (std::size_t c = 0; c < syndromes.size(); ++c) {
        covered.middleCols(static_cast<Index>(c) * n, n) = syndromes[c];
    }
    const ComplexMatrix rest = orthogonal_complement(covered);
    for (Index start = 0; start < rest.cols(); start += n) {
        const Index len = std::min(n, rest.cols() - start);
        kraus.push_back(v.leftCols(len) * rest.middleCols(start, len).adjoint());
    }
    return QuantumChannel(std::move(kraus), ch.dim_out(), ch.dim_in());
}

QuantumChannel sector_error_channel(const QuantumChannel &ch, const SubsystemDecomposition &dec) {
    if (ch.dim_in() != dec.dim()) {
        throw DimensionError("sector_error_channel: channel acts on C^" + std::to_string(ch.dim_in()) +
                             ", decomposition lives in C^" + std::to_string(dec.dim()));
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(dec.m()));
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(ch.size() * static_cast<std::size_t>(dec.m()));
    for (const auto &e : ch.kraus()) {
        for (Index k = 0; k < dec.m(); ++k) {
            kraus.push_back(scale * (e * dec.sector_isometry(k)));
        }
    }
    return QuantumChannel(std::move(kraus), dec.n(), ch.dim_out());
}

QuantumChannel build_oqec_recovery(const QuantumChannel &ch, const SubsystemDecomposition &dec, double tol) {
    const CheckReport condition = check_oqec(ch, dec, tol);
    if (!condition.verdict) {
        std::ostringstream msg;
        msg << "build_oqec_recovery: operator QEC condition fails (residual " << condition.residual << " > " << tol
            << ")";
        throw NotCorrectableError(msg.str());
    }

    // E_{a,k}^dag E_{b,l} = lambda_abkl 1^B makes all of H^B a code for E_B.
    const QuantumChannel sector_errors = sector_error_channel(ch, dec);
    const SubsystemDecomposition whole_b = SubsystemDecomposition::full(1, dec.n());
    const CheckReport flat = check_kl(sector_errors, whole_b, tol);
    if (!flat.verdict) {
        std::ostringstream msg;
        msg << "build_oqec_recovery: sector errors fail the subspace condition (residual " << flat.residual << ")";
        throw NotCorrectableError(msg.str());
    }
    const QuantumChannel to_b = build_standard_recovery(sector_errors, whole_b, *flat.lambda, tol);
    return compose(ampliation(dec), to_b);
}

QuantumChannel randomize_factor_A(const SubsystemDecomposition &dec) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(dec.m()));
    std::vector<ComplexMatrix> kraus;
    for (Index k = 0; k < dec.m(); ++k) {
        for (Index l = 0; l < dec.m(); ++l) {
            kraus.push_back(scale * matrix_unit(dec, k, l));
        }
    }
    if (dec.dim_complement() > 0) {
        kraus.push_back(complement_projector(dec));
    }
    return QuantumChannel(std::move(kraus), dec.dim(), dec.dim());
}

QuantumChannel ampliation(const SubsystemDecomposition &dec) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(dec.m()));
    std::vector<ComplexMatrix> kraus;
    for (Index k = 0; k < dec.m(); ++k) {
        kraus.push_back(scale * dec.sector_isometry(k));
    }
    return QuantumChannel(std::move(kraus), dec.n(), dec.dim());
}

}  // namespace oqec
