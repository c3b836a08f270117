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
#include "oqec/conditions.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace oqec;
using namespace oqec::testing;

TEST(SubsystemDecomposition, validates_embedding) {
    EXPECT_THROW(SubsystemDecomposition(identity(4), 3, 1), DimensionError);
    EXPECT_THROW(SubsystemDecomposition(2.0 * identity(4), 2, 2), DimensionError);
    EXPECT_THROW(SubsystemDecomposition(identity(4), 0, 4), DimensionError);
    const SubsystemDecomposition dec(identity(6).leftCols(4), 2, 2);
    EXPECT_EQ(dec.dim(), 6);
    EXPECT_EQ(dec.dim_complement(), 2);
}

TEST(matrix_unit, subspace_case_is_code_projector) {
    const SubsystemDecomposition code = bitflip3_code();
    ComplexMatrix expected = ComplexMatrix::Zero(8, 8);
    expected(0, 0) = 1.0;
    expected(7, 7) = 1.0;
    EXPECT_LT(frobenius_distance(matrix_unit(code, 0, 0), expected), 1e-15);
    EXPECT_LT(frobenius_distance(sector_projector(code), expected), 1e-15);
}

TEST(matrix_unit, out_of_range) {
    const SubsystemDecomposition dec = SubsystemDecomposition::full(2, 2);
    EXPECT_THROW(matrix_unit(dec, 2, 0), std::out_of_range);
    EXPECT_THROW(matrix_unit(dec, 0, -1), std::out_of_range);
}

TEST(matrix_unit, algebra_relations_property) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const Index m = uniform_index(1, 3, rng);
        const Index n = uniform_index(1, 3, rng);
        const SubsystemDecomposition dec = random_decomposition(m * n + uniform_index(0, 3, rng), m, n, rng);
        ComplexMatrix sum = ComplexMatrix::Zero(dec.dim(), dec.dim());
        for (Index k = 0; k < m; ++k) {
            sum += matrix_unit(dec, k, k);
            for (Index l = 0; l < m; ++l) {
                const ComplexMatrix pkl = matrix_unit(dec, k, l);
                EXPECT_LT(frobenius_distance(pkl.adjoint(), matrix_unit(dec, l, k)), 1e-12);
                for (Index lp = 0; lp < m; ++lp) {
                    for (Index kp = 0; kp < m; ++kp) {
                        const ComplexMatrix product = pkl * matrix_unit(dec, lp, kp);
                        const ComplexMatrix expected =
                            l == lp ? matrix_unit(dec, k, kp) : ComplexMatrix::Zero(dec.dim(), dec.dim());
                        EXPECT_LT(frobenius_distance(product, expected), 1e-12);
                    }
                }
            }
        }
        EXPECT_LT(frobenius_distance(sum, sector_projector(dec)), 1e-12);
    }
}

TEST(sector_projector, trivial_and_idempotent) {
    EXPECT_LT(frobenius_distance(sector_projector(SubsystemDecomposition::full(2, 3)), identity(6)), 1e-15);
    std::mt19937_64 rng(2);
    const SubsystemDecomposition dec = random_decomposition(7, 2, 2, rng);
    const ComplexMatrix p = sector_projector(dec);
    EXPECT_LT(frobenius_distance(p * p, p), 1e-12);
    EXPECT_LT(frobenius_distance(p + complement_projector(dec), identity(7)), 1e-12);
    EXPECT_NEAR(p.trace().real(), 4.0, 1e-12);
}

TEST(sector_projector, local_basis_change_invariance) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const SubsystemDecomposition dec = random_decomposition(9, 2, 3, rng);
        const ComplexMatrix local = tensor(random_unitary(2, rng), random_unitary(3, rng));
        const SubsystemDecomposition rotated(dec.embedding() * local, 2, 3);
        EXPECT_LT(frobenius_distance(sector_projector(dec), sector_projector(rotated)), 1e-12);
        const QuantumChannel ns = noiseless_channel(dec, rng);
        EXPECT_TRUE(check_ns_algebraic(ns, rotated).verdict);
        EXPECT_TRUE(check_oqec(ns, rotated).verdict);
        const QuantumChannel broken = mix_with_random(ns, 0.3, rng);
        EXPECT_EQ(check_oqec(broken, dec).verdict, check_oqec(broken, rotated).verdict);
    }
}

TEST(compress, slicing_oracle) {
    std::mt19937_64 rng(4);
    // Columns 1, 3, 4, 6 of the identity: V^dag M V is a plain submatrix.
    const SubsystemDecomposition dec(basis_columns(7, {1, 3, 4, 6}), 2, 2);
    const ComplexMatrix m = random_ginibre(7, 7, rng);
    const std::vector<Index> rows = {1, 3, 4, 6};
    ComplexMatrix expected(4, 4);
    for (Index i = 0; i < 4; ++i) {
        for (Index j = 0; j < 4; ++j) {
            expected(i, j) = m(rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(j)]);
        }
    }
    EXPECT_LT(frobenius_distance(compress(dec, m), expected), 1e-15);
    EXPECT_THROW(compress(dec, identity(3)), DimensionError);
}

TEST(compress, kills_the_complement) {
    std::mt19937_64 rng(5);
    const SubsystemDecomposition dec = random_decomposition(6, 1, 3, rng);
    const ComplexMatrix k = complement_projector(dec) * random_ginibre(6, 6, rng) * complement_projector(dec);
    EXPECT_LT(frobenius_norm(compress(dec, k)), 1e-12);
}

TEST(embed_product, round_trip_property) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const Index m = uniform_index(1, 3, rng);
        const Index n = uniform_index(1, 3, rng);
        const SubsystemDecomposition dec = random_decomposition(m * n + uniform_index(0, 3, rng), m, n, rng);
        const ComplexMatrix sa = random_ginibre(m, m, rng);
        const ComplexMatrix sb = random_ginibre(n, n, rng);
        EXPECT_LT(frobenius_distance(compress(dec, embed_product(dec, sa, sb)), tensor(sa, sb)), 1e-12);
    }
    EXPECT_THROW(embed_product(SubsystemDecomposition::full(2, 2), identity(3), identity(2)), DimensionError);
}

TEST(embed_product, subspace_placement) {
    std::mt19937_64 rng(7);
    const SubsystemDecomposition code = bitflip3_code();
    const ComplexMatrix rho = random_density(2, rng);
    const ComplexMatrix placed = embed_product(code, identity(1), rho);
    EXPECT_EQ(placed(0, 0), rho(0, 0));
    EXPECT_EQ(placed(0, 7), rho(0, 1));
    EXPECT_EQ(placed(7, 0), rho(1, 0));
    EXPECT_EQ(placed(7, 7), rho(1, 1));
    EXPECT_NEAR(frobenius_norm(placed), frobenius_norm(rho), 1e-15);
}

TEST(embed_product, maximally_mixed_on_a) {
    std::mt19937_64 rng(8);
    const SubsystemDecomposition dec = random_decomposition(5, 2, 2, rng);
    const ComplexMatrix rho = random_density(2, rng);
    // (1/m) V (1 (x) rho) V^dag written out through the sector isometries.
    ComplexMatrix expected = ComplexMatrix::Zero(5, 5);
    for (Index k = 0; k < 2; ++k) {
        expected += dec.sector_isometry(k) * rho * dec.sector_isometry(k).adjoint() / 2.0;
    }
    EXPECT_LT(frobenius_distance(embed_product(dec, identity(2) / 2.0, rho), expected), 1e-14);
}

TEST(classify, table) {
    EXPECT_EQ(classify(bitflip3_code(), false), CodeClass::StandardQEC);
    EXPECT_EQ(classify(bitflip3_code(), true), CodeClass::DFS);
    EXPECT_EQ(classify(SubsystemDecomposition::full(2, 2), true), CodeClass::StandardNS);
    EXPECT_EQ(classify(SubsystemDecomposition(identity(5).leftCols(4), 2, 2), true), CodeClass::GeneralizedNS);
    EXPECT_EQ(classify(SubsystemDecomposition::full(2, 2), false), CodeClass::GeneralOQEC);
    EXPECT_EQ(to_string(CodeClass::GeneralizedNS), "GeneralizedNS");
}
