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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oqec {

/// Which correction condition a set of scalars belongs to.
enum class LambdaOrder {
    Standard,  // lambda_ab:   P E_a^dag E_b P = lambda_ab P
    NS,        // lambda_akl:  P_k E_a P_l = lambda_akl P_kl
    OQEC,      // lambda_abkl: P_k E_a^dag E_b P_l = lambda_abkl P_kl
};

std::string_view to_string(LambdaOrder order);

/// Scalars extracted from a condition check, stored densely.
///
/// All indices are zero-based. The extents are (a, b) for Standard,
/// (a, k, l) for NS and (a, b, k, l) for OQEC.
class LambdaTensor {
  public:
    LambdaTensor() = default;
    LambdaTensor(LambdaOrder order, std::vector<Index> extents);

    LambdaOrder order() const { return order_; }
    const std::vector<Index> &extents() const { return extents_; }
    const std::vector<Complex> &values() const { return values_; }

    Complex &at(std::initializer_list<Index> idx);
    const Complex &at(std::initializer_list<Index> idx) const;

    /// Frobenius norm of the worst constraint violation seen during extraction.
    double residual = 0.0;

    /// The (a, b) matrix for Standard order.
    ComplexMatrix standard_matrix() const;

    /// Flattened ((a,k), (b,l)) matrix for OQEC order, index a * m + k.
    ComplexMatrix oqec_matrix() const;

    /// max |lambda_abkl - conj(lambda_ba,lk)| (OQEC) or max |lambda_ab - conj(lambda_ba)|
    /// (Standard). Zero for NS order, which has no such symmetry.
    double hermiticity_defect() const;

  private:
    std::size_t offset(std::initializer_list<Index> idx) const;

    LambdaOrder order_ = LambdaOrder::Standard;
    std::vector<Index> extents_;
    std::vector<Complex> values_;
};

enum class Condition {
    CPTP,               // sum_a E_a^dag E_a = 1
    KL,                 // subspace correctability
    NSAlgebraic,        // matrix-unit form of the noiseless-subsystem condition
    NSOperational,      // Tr_A o P_A o E = Tr_A on the semigroup
    OQEC,               // operator QEC condition
    OpAlgCorrect,       // (R o E)(sigma) = sigma on 1^A (x) B(H^B)
    CorrectableTriple,  // Tr_A o P_A o R o E = Tr_A on the semigroup
};

std::string_view to_string(Condition condition);

/// Outcome of a checker.
struct CheckReport {
    Condition condition = Condition::CPTP;
    bool verdict = false;
    double residual = 0.0;
    double tol = kDefaultTol;
    std::optional<LambdaTensor> lambda;
    /// Index tuple attaining `residual`, e.g. (a, b, k, l). Empty when the
    /// residual is not attributable to a single term.
    std::vector<Index> worst_index;
    /// Which family of constraints `worst_index` refers to.
    std::string worst_term;
    std::string note;
};

/// Builds a report with verdict = (residual <= tol).
CheckReport make_report(Condition condition, double residual, double tol);

/// Tracks the largest residual seen and the index tuple that produced it.
class WorstCase {
  public:
    void offer(double residual, std::vector<Index> index, std::string_view term);

    double residual() const { return residual_; }
    const std::vector<Index> &index() const { return index_; }
    const std::string &term() const { return term_; }

    void write_to(CheckReport &report) const;

  private:
    double residual_ = 0.0;
    std::vector<Index> index_;
    std::string term_;
};

}  // namespace oqec
