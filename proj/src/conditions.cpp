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

#include "oqec/conditions.hpp"

#include <functional>
#include <sstream>

namespace oqec {

namespace {

void require_input_space(const QuantumChannel &ch, const SubsystemDecomposition &dec, const char *who) {
    if (ch.dim_in() != dec.dim()) {
        std::ostringstream msg;
        msg << who << ": channel acts on C^" << ch.dim_in() << " but the decomposition lives in C^" << dec.dim();
        throw DimensionError(msg.str());
    }
}

void require_endomorphism(const QuantumChannel &ch, const SubsystemDecomposition &dec, const char *who) {
    require_input_space(ch, dec, who);
    if (ch.dim_out() != dec.dim()) {
        std::ostringstream msg;
        msg << who << ": channel output C^" << ch.dim_out() << " is not the decomposed space C^" << dec.dim();
        throw DimensionError(msg.str());
    }
}

// E_a V for every Kraus operator: the action of each error on the sector.
std::vector<ComplexMatrix> restricted_errors(const QuantumChannel &ch, const SubsystemDecomposition &dec) {
    std::vector<ComplexMatrix> out;
    out.reserve(ch.size());
    for (const auto &e : ch.kraus()) {
        out.push_back(e * dec.embedding());
    }
    return out;
}

// Scans the n x n blocks of an (m n) x (m n) sector operator G. With
// G = V^dag M V, block (k, l) is the coordinate form of P_k M P_l, and
// ||P_k M P_l - lambda P_kl||_F = ||block - lambda 1_n||_F.
template <typename Sink>
void scan_blocks(const ComplexMatrix &g, Index m, Index n, Sink &&sink) {
    const ComplexMatrix id = identity(n);
    for (Index k = 0; k < m; ++k) {
        for (Index l = 0; l < m; ++l) {
            const auto block = g.block(k * n, l * n, n, n);
            const Complex lambda = block.trace() / static_cast<double>(n);
            sink(k, l, lambda, (block - lambda * id).norm());
        }
    }
}

using SectorMap = std::function<ComplexMatrix(const ComplexMatrix &)>;

// Tests Tr_A(P_A map(sigma) P_A) = Tr_A(sigma) over product matrix units.
CheckReport semigroup_trace_check(const SectorMap &map, const SubsystemDecomposition &dec, Condition condition,
                                  double tol) {
    const Index m = dec.m();
    const Index n = dec.n();
    WorstCase worst;
    for (Index p = 0; p < m; ++p) {
        for (Index q = 0; q < m; ++q) {
            const ComplexMatrix sigma_a = ket_bra(m, m, p, q);
            for (Index r = 0; r < n; ++r) {
                for (Index s = 0; s < n; ++s) {
                    const ComplexMatrix sigma_b = ket_bra(n, n, r, s);
                    const ComplexMatrix out = map(embed_product(dec, sigma_a, sigma_b));
                    const ComplexMatrix reduced = partial_trace_A(compress(dec, out), dec.shape());
                    const ComplexMatrix expected = p == q ? sigma_b : ComplexMatrix::Zero(n, n);
                    worst.offer((reduced - expected).norm(), {p, q, r, s}, "sigma = |p><q| (x) |r><s|");
                }
            }
        }
    }
    CheckReport report = make_report(condition, worst.residual(), tol);
    worst.write_to(report);
    return report;
}

}  // namespace

CheckReport check_kl(const QuantumChannel &ch, const SubsystemDecomposition &dec, double tol) {
    if (dec.m() != 1) {
        throw std::invalid_argument("check_kl: decomposition has m = " + std::to_string(dec.m()) +
                                    "; use check_oqec for subsystem codes");
    }
    require_input_space(ch, dec, "check_kl");
    const auto restricted = restricted_errors(ch, dec);
    const Index count = static_cast<Index>(ch.size());
    const Index n = dec.n();

    LambdaTensor lambda(LambdaOrder::Standard, {count, count});
    WorstCase worst;
    for (Index a = 0; a < count; ++a) {
        for (Index b = 0; b < count; ++b) {
            const ComplexMatrix g = restricted[a].adjoint() * restricted[b];
            scan_blocks(g, 1, n, [&](Index, Index, Complex value, double residual) {
                lambda.at({a, b}) = value;
                worst.offer(residual, {a, b}, "P E_a^dag E_b P - lambda_ab P");
            });
        }
    }
    lambda.residual = worst.residual();

    CheckReport report = make_report(Condition::KL, worst.residual(), tol);
    report.lambda = std::move(lambda);
    worst.write_to(report);
    return report;
}

CheckReport check_ns_algebraic(const QuantumChannel &ch, const SubsystemDecomposition &dec, double tol) {
    require_endomorphism(ch, dec, "check_ns_algebraic");
    const Index count = static_cast<Index>(ch.size());
    const Index m = dec.m();
    const Index n = dec.n();
    const ComplexMatrix &v = dec.embedding();
    const ComplexMatrix outside = complement_projector(dec);

    LambdaTensor lambda(LambdaOrder::NS, {count, m, m});
    WorstCase worst;
    for (Index a = 0; a < count; ++a) {
        const ComplexMatrix ev = ch[static_cast<std::size_t>(a)] * v;
        scan_blocks(v.adjoint() * ev, m, n, [&](Index k, Index l, Complex value, double residual) {
            lambda.at({a, k, l}) = value;
            worst.offer(residual, {a, k, l}, "P_k E_a P_l - lambda_akl P_kl");
        });
        // ||E_a P_A - P_A E_a P_A||_F = ||(1 - P_A) E_a V||_F since V is an isometry.
        worst.offer((outside * ev).norm(), {a}, "E_a P_A - P_A E_a P_A");
    }
    lambda.residual = worst.residual();

    CheckReport report = make_report(Condition::NSAlgebraic, worst.residual(), tol);
    report.lambda = std::move(lambda);
    worst.write_to(report);
    return report;
}

CheckReport check_ns_operational(const QuantumChannel &ch, const SubsystemDecomposition &dec, double tol) {
    require_endomorphism(ch, dec, "check_ns_operational");
    return semigroup_trace_check([&](const ComplexMatrix &sigma) { return oqec::apply(ch, sigma); }, dec,
                                 Condition::NSOperational, tol);
}

CheckReport check_oqec(const QuantumChannel &ch, const SubsystemDecomposition &dec, double tol) {
    require_input_space(ch, dec, "check_oqec");
    const auto restricted = restricted_errors(ch, dec);
    const Index count = static_cast<Index>(ch.size());
    const Index m = dec.m();
    const Index n = dec.n();

    LambdaTensor lambda(LambdaOrder::OQEC, {count, count, m, m});
    WorstCase worst;
    for (Index a = 0; a < count; ++a) {
        for (Index b = 0; b < count; ++b) {
            const ComplexMatrix g = restricted[a].adjoint() * restricted[b];
            scan_blocks(g, m, n, [&](Index k, Index l, Complex value, double residual) {
                lambda.at({a, b, k, l}) = value;
                worst.offer(residual, {a, b, k, l}, "P_k E_a^dag E_b P_l - lambda_abkl P_kl");
            });
        }
    }
    lambda.residual = worst.residual();

    CheckReport report = make_report(Condition::OQEC, worst.residual(), tol);
    std::ostringstream note;
    note << "lambda hermiticity defect " << lambda.hermiticity_defect();
    report.note = note.str();
    report.lambda = std::move(lambda);
    worst.write_to(report);
    return report;
}

CheckReport check_opalg_correct(const QuantumChannel &r, const QuantumChannel &ch, const SubsystemDecomposition &dec,
                                double tol) {
    require_endomorphism(ch, dec, "check_opalg_correct");
    if (r.dim_in() != dec.dim() || r.dim_out() != dec.dim()) {
        throw DimensionError("check_opalg_correct: recovery must act on C^" + std::to_string(dec.dim()));
    }
    const Index n = dec.n();
    const ComplexMatrix id_a = identity(dec.m());
    WorstCase worst;
    for (Index r_idx = 0; r_idx < n; ++r_idx) {
        for (Index s_idx = 0; s_idx < n; ++s_idx) {
            const ComplexMatrix sigma = embed_product(dec, id_a, ket_bra(n, n, r_idx, s_idx));
            const ComplexMatrix out = oqec::apply(r, oqec::apply(ch, sigma));
            worst.offer((out - sigma).norm(), {r_idx, s_idx}, "sigma = 1^A (x) |r><s|");
        }
    }
    CheckReport report = make_report(Condition::OpAlgCorrect, worst.residual(), tol);
    worst.write_to(report);
    return report;
}

CheckReport check_correctable_triple(const QuantumChannel &r, const QuantumChannel &ch,
                                     const SubsystemDecomposition &dec, double tol) {
    require_endomorphism(ch, dec, "check_correctable_triple");
    if (r.dim_in() != dec.dim() || r.dim_out() != dec.dim()) {
        throw DimensionError("check_correctable_triple: recovery must act on C^" + std::to_string(dec.dim()));
    }
    const QuantumChannel composite = compose(r, ch);
    return semigroup_trace_check([&](const ComplexMatrix &sigma) { return oqec::apply(composite, sigma); }, dec,
                                 Condition::CorrectableTriple, tol);
}

}  // namespace oqec
