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

#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace oqec;
using namespace oqec::testing;

namespace {

// Largest ||(R o E)(sigma) - sigma||_F over the matrix units of B(C).
double code_recovery_error(const QuantumChannel &r, const QuantumChannel &ch, const SubsystemDecomposition &code) {
    double worst = 0.0;
    for (Index i = 0; i < code.n(); ++i) {
        for (Index j = 0; j < code.n(); ++j) {
            const ComplexMatrix sigma = embed_product(code, identity(1), ket_bra(code.n(), code.n(), i, j));
            worst = std::max(worst, (oqec::apply(r, oqec::apply(ch, sigma)) - sigma).norm());
        }
    }
    return worst;
}

QuantumChannel standard_recovery(const QuantumChannel &ch, const SubsystemDecomposition &code) {
    const CheckReport kl = check_kl(ch, code);
    return build_standard_recovery(ch, code, *kl.lambda);
}

}  // namespace

TEST(build_standard_recovery, bitflip_example) {
    const QuantumChannel ch = bitflip3_channel();
    const SubsystemDecomposition code = bitflip3_code();
    const QuantumChannel r = standard_recovery(ch, code);
    EXPECT_EQ(r.size(), 4U);
    EXPECT_LE(is_cptp(r).residual, 10 * kDefaultTol);
    EXPECT_LE(code_recovery_error(r, ch, code), 1e-8);
}

TEST(build_standard_recovery, single_unitary_is_reversal_on_image) {
    std::mt19937_64 rng(1);
    const SubsystemDecomposition code = random_decomposition(5, 1, 2, rng);
    const ComplexMatrix u = random_unitary(5, rng);
    const QuantumChannel r = standard_recovery(QuantumChannel::unitary(u), code);
    ASSERT_TRUE(is_cptp(r).verdict);
    // On operators supported in U C the recovery is conjugation by U^dag.
    const ComplexMatrix image = u * code.embedding();
    for (Index i = 0; i < 2; ++i) {
        for (Index j = 0; j < 2; ++j) {
            const ComplexMatrix tau = image * ket_bra(2, 2, i, j) * image.adjoint();
            EXPECT_LT(frobenius_distance(oqec::apply(r, tau), u.adjoint() * tau * u), 1e-12);
        }
    }
}

TEST(build_standard_recovery, orthogonal_range_errors) {
    std::mt19937_64 rng(2);
    const SubsystemDecomposition code = random_decomposition(8, 1, 2, rng);
    // Two isometries with orthogonal images of C, weights 0.3 and 0.7.
    const ComplexMatrix images = random_isometry(8, 4, rng);
    const ComplexMatrix e0 = std::sqrt(0.3) * unitary_mapping(code.embedding(), images.leftCols(2), rng);
    const ComplexMatrix e1 = std::sqrt(0.7) * unitary_mapping(code.embedding(), images.rightCols(2), rng);
    const QuantumChannel ch({e0, e1});
    const QuantumChannel r = standard_recovery(ch, code);
    EXPECT_TRUE(is_cptp(r).verdict);
    EXPECT_LE(code_recovery_error(r, ch, code), 1e-9);
}

TEST(build_standard_recovery, composite_is_identity_on_code_property) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const Index n = uniform_index(1, 3, rng);
        const SubsystemDecomposition code = random_decomposition(n + uniform_index(1, 8, rng), 1, n, rng);
        const QuantumChannel ch = correctable_channel(code, rng);
        const QuantumChannel r = standard_recovery(ch, code);
        EXPECT_LE(is_cptp(r).residual, 10 * kDefaultTol);
        // compose(R, E) restricted to B(C) against the identity on B(C).
        const QuantumChannel restricted = compose(compose(r, ch), QuantumChannel({code.embedding()}));
        const QuantumChannel embed({code.embedding()});
        EXPECT_TRUE(channels_equal(restricted, embed, 1e-9)) << "trial " << trial;
    }
}

TEST(build_standard_recovery, refuses_non_codes) {
    std::mt19937_64 rng(4);
    const SubsystemDecomposition code = random_decomposition(6, 1, 2, rng);
    const QuantumChannel ch = random_channel(6, 6, 3, rng);
    const CheckReport kl = check_kl(ch, code);
    ASSERT_FALSE(kl.verdict);
    EXPECT_THROW(build_standard_recovery(ch, code, *kl.lambda), NotCorrectableError);
    const LambdaTensor wrong(LambdaOrder::Standard, {2, 2});
    EXPECT_THROW(build_standard_recovery(ch, code, wrong), std::invalid_argument);
    EXPECT_THROW(build_standard_recovery(QuantumChannel::identity(4), SubsystemDecomposition::full(2, 2), wrong),
                 std::invalid_argument);
}

TEST(build_oqec_recovery, single_unitary) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        const SubsystemDecomposition dec = random_decomposition(uniform_index(4, 9, rng), 2, 2, rng);
        const QuantumChannel ch = QuantumChannel::unitary(random_unitary(dec.dim(), rng));
        const QuantumChannel r = build_oqec_recovery(ch, dec);
        EXPECT_TRUE(is_cptp(r).verdict);
        EXPECT_TRUE(check_opalg_correct(r, ch, dec).verdict);
        EXPECT_TRUE(check_correctable_triple(r, ch, dec).verdict);
    }
}

TEST(build_oqec_recovery, product_noise_on_full_space) {
    std::mt19937_64 rng(6);
    const SubsystemDecomposition dec = SubsystemDecomposition::full(2, 3);
    const QuantumChannel phi = random_channel(2, 2, 2, rng);
    std::vector<ComplexMatrix> kraus;
    for (const auto &a : phi.kraus()) {
        kraus.push_back(tensor(a, identity(3)));
    }
    const QuantumChannel ch(kraus);
    const QuantumChannel r = build_oqec_recovery(ch, dec);
    EXPECT_TRUE(check_correctable_triple(r, ch, dec).verdict);
    EXPECT_TRUE(check_correctable_triple(QuantumChannel::identity(6), ch, dec).verdict);
}

TEST(build_oqec_recovery, unitary_after_sector_noise) {
    std::mt19937_64 rng(7);
    const SubsystemDecomposition dec = SubsystemDecomposition::full(2, 2);
    const ComplexMatrix u = random_unitary(4, rng);
    const QuantumChannel phi = random_channel(2, 2, 2, rng);
    std::vector<ComplexMatrix> kraus;
    for (const auto &a : phi.kraus()) {
        kraus.push_back(u * tensor(a, identity(2)));
    }
    const QuantumChannel ch(kraus);
    const QuantumChannel r = build_oqec_recovery(ch, dec);
    // (R o E)(1 (x) e_rs) on each of the four matrix units of B(H^B).
    for (Index i = 0; i < 2; ++i) {
        for (Index j = 0; j < 2; ++j) {
            const ComplexMatrix sigma = tensor(identity(2), ket_bra(2, 2, i, j));
            EXPECT_LT(frobenius_distance(oqec::apply(r, oqec::apply(ch, sigma)), sigma), 1e-9);
        }
    }
}

TEST(build_oqec_recovery, sufficiency_property) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const Index m = uniform_index(1, 3, rng);
        const Index n = uniform_index(1, 3, rng);
        const SubsystemDecomposition dec = random_decomposition(m * n + uniform_index(0, 6, rng), m, n, rng);
        const QuantumChannel ch = correctable_channel(dec, rng);
        const QuantumChannel r = build_oqec_recovery(ch, dec);
        EXPECT_LE(is_cptp(r).residual, 10 * kDefaultTol);
        EXPECT_TRUE(check_opalg_correct(r, ch, dec).verdict) << "trial " << trial;
        EXPECT_TRUE(check_correctable_triple(r, ch, dec).verdict) << "trial " << trial;
    }
}

TEST(build_oqec_recovery, refuses_non_codes) {
    std::mt19937_64 rng(9);
    const SubsystemDecomposition dec = random_decomposition(6, 2, 2, rng);
    EXPECT_THROW(build_oqec_recovery(random_channel(6, 6, 2, rng), dec), NotCorrectableError);
}

TEST(build_oqec_recovery, code_is_invariant_under_corrected_noise) {
    // For a correctable triple the operators R_b E_a leave the sector invariant.
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 20; ++trial) {
        const SubsystemDecomposition dec = random_decomposition(uniform_index(4, 9, rng), 2, 2, rng);
        const QuantumChannel ch = correctable_channel(dec, rng);
        const QuantumChannel composite = compose(build_oqec_recovery(ch, dec), ch);
        const ComplexMatrix outside = complement_projector(dec);
        for (const auto &op : composite.kraus()) {
            EXPECT_LT((outside * op * dec.embedding()).norm(), 1e-9);
        }
    }
}

TEST(randomize_factor_A, kraus_sum_oracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const Index m = uniform_index(1, 3, rng);
        const Index n = uniform_index(1, 3, rng);
        const SubsystemDecomposition dec = random_decomposition(m * n + uniform_index(0, 3, rng), m, n, rng);
        const QuantumChannel gamma = randomize_factor_A(dec);
        EXPECT_TRUE(is_cptp(gamma).verdict);
        const ComplexMatrix sa = random_ginibre(m, m, rng);
        const ComplexMatrix sb = random_ginibre(n, n, rng);
        const ComplexMatrix out = oqec::apply(gamma, embed_product(dec, sa, sb));
        EXPECT_LT(frobenius_distance(out, (sa.trace() / static_cast<double>(m)) * embed_product(dec, identity(m), sb)),
                  1e-12);
    }
}

TEST(randomize_factor_A, fixes_complement_states) {
    std::mt19937_64 rng(12);
    const SubsystemDecomposition dec = random_decomposition(7, 2, 2, rng);
    const ComplexMatrix k = orthogonal_complement(dec.embedding());
    const ComplexMatrix rho = k * random_density(3, rng) * k.adjoint();
    EXPECT_LT(frobenius_distance(oqec::apply(randomize_factor_A(dec), rho), rho), 1e-12);
    // No complement term when K is trivial.
    EXPECT_EQ(randomize_factor_A(SubsystemDecomposition::full(2, 2)).size(), 4U);
}

TEST(randomize_factor_A, idempotent_on_sector) {
    std::mt19937_64 rng(13);
    const SubsystemDecomposition dec = random_decomposition(6, 2, 2, rng);
    const QuantumChannel gamma = randomize_factor_A(dec);
    const QuantumChannel on_sector({dec.embedding()});
    EXPECT_TRUE(channels_equal(compose(compose(gamma, gamma), on_sector), compose(gamma, on_sector), 1e-12));
}

TEST(ampliation, embeds_maximally_mixed_on_a) {
    std::mt19937_64 rng(14);
    const SubsystemDecomposition dec = random_decomposition(7, 3, 2, rng);
    const QuantumChannel amp = ampliation(dec);
    EXPECT_EQ(amp.dim_in(), 2);
    EXPECT_EQ(amp.dim_out(), 7);
    EXPECT_TRUE(is_cptp(amp).verdict);
    const ComplexMatrix rho = random_density(2, rng);
    const ComplexMatrix out = oqec::apply(amp, rho);
    EXPECT_LT(frobenius_distance(out, embed_product(dec, identity(3) / 3.0, rho)), 1e-12);
    EXPECT_LT(frobenius_distance(partial_trace_A(compress(dec, out), dec.shape()), rho), 1e-12);
}

TEST(ampliation, subspace_case_is_isometric_embedding) {
    const SubsystemDecomposition code = bitflip3_code();
    const QuantumChannel amp = ampliation(code);
    ASSERT_EQ(amp.size(), 1U);
    EXPECT_LT(frobenius_distance(amp[0], code.embedding()), 1e-15);
}
