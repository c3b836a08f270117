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

#include "oqec/report.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oqec {

std::string_view to_string(LambdaOrder order) {
    switch (order) {
        case LambdaOrder::Standard:
            return "standard";
        case LambdaOrder::NS:
            return "ns";
        case LambdaOrder::OQEC:
            return "oqec";
    }
    return "unknown";
}

std::string_view to_string(Condition condition) {
    switch (condition) {
        case Condition::CPTP:
            return "CPTP";
        case Condition::KL:
            return "KL";
        case Condition::NSAlgebraic:
            return "NS_alg";
        case Condition::NSOperational:
            return "NS_op";
        case Condition::OQEC:
            return "OQEC";
        case Condition::OpAlgCorrect:
            return "OpAlgCorrect";
        case Condition::CorrectableTriple:
            return "CorrectableTriple";
    }
    return "unknown";
}

static std::size_t expected_rank(LambdaOrder order) {
    switch (order) {
        case LambdaOrder::Standard:
            return 2;
        case LambdaOrder::NS:
            return 3;
        case LambdaOrder::OQEC:
            return 4;
    }
    return 0;
}

LambdaTensor::LambdaTensor(LambdaOrder order, std::vector<Index> extents)
    : order_(order), extents_(std::move(extents)) {
    if (extents_.size() != expected_rank(order_)) {
        throw std::invalid_argument("LambdaTensor: wrong number of extents for order " +
                                    std::string(to_string(order_)));
    }
    std::size_t total = 1;
    for (Index e : extents_) {
        if (e < 0) {
            throw std::invalid_argument("LambdaTensor: negative extent");
        }
        total *= static_cast<std::size_t>(e);
    }
    values_.assign(total, Complex(0.0));
}

std::size_t LambdaTensor::offset(std::initializer_list<Index> idx) const {
    if (idx.size() != extents_.size()) {
        throw std::out_of_range("LambdaTensor: index rank mismatch");
    }
    std::size_t off = 0;
    auto extent = extents_.begin();
    for (Index i : idx) {
        if (i < 0 || i >= *extent) {
            throw std::out_of_range("LambdaTensor: index out of range");
        }
        off = off * static_cast<std::size_t>(*extent) + static_cast<std::size_t>(i);
        ++extent;
    }
    return off;
}

Complex &LambdaTensor::at(std::initializer_list<Index> idx) {
    return values_[offset(idx)];
}

const Complex &LambdaTensor::at(std::initializer_list<Index> idx) const {
    return values_[offset(idx)];
}

ComplexMatrix LambdaTensor::standard_matrix() const {
    if (order_ != LambdaOrder::Standard) {
        throw std::logic_error("standard_matrix: tensor is not of standard order");
    }
    ComplexMatrix out(extents_[0], extents_[1]);
    for (Index a = 0; a < extents_[0]; ++a) {
        for (Index b = 0; b < extents_[1]; ++b) {
            out(a, b) = at({a, b});
        }
    }
    return out;
}

ComplexMatrix LambdaTensor::oqec_matrix() const {
    if (order_ != LambdaOrder::OQEC) {
        throw std::logic_error("oqec_matrix: tensor is not of oqec order");
    }
    const Index na = extents_[0];
    const Index m = extents_[2];
    ComplexMatrix out(na * m, na * m);
    for (Index a = 0; a < na; ++a) {
        for (Index b = 0; b < na; ++b) {
            for (Index k = 0; k < m; ++k) {
                for (Index l = 0; l < m; ++l) {
                    out(a * m + k, b * m + l) = at({a, b, k, l});
                }
            }
        }
    }
    return out;
}

double LambdaTensor::hermiticity_defect() const {
    switch (order_) {
        case LambdaOrder::Standard: {
            const ComplexMatrix lam = standard_matrix();
            return (lam - lam.adjoint()).cwiseAbs().maxCoeff();
        }
        case LambdaOrder::OQEC: {
            const ComplexMatrix lam = oqec_matrix();
            return lam.size() ? (lam - lam.adjoint()).cwiseAbs().maxCoeff() : 0.0;
        }
        case LambdaOrder::NS:
            return 0.0;
    }
    return 0.0;
}

CheckReport make_report(Condition condition, double residual, double tol) {
    CheckReport report;
    report.condition = condition;
    report.residual = residual;
    report.tol = tol;
    report.verdict = residual <= tol;
    return report;
}

void WorstCase::offer(double residual, std::vector<Index> index, std::string_view term) {
    if (index_.empty() || residual > residual_) {
        residual_ = residual;
        index_ = std::move(index);
        term_ = term;
    }
}

void WorstCase::write_to(CheckReport &report) const {
    report.worst_index = index_;
    report.worst_term = term_;
}

}  // namespace oqec
