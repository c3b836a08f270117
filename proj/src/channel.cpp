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

#include "oqec/channel.hpp"

#include <algorithm>
#include <sstream>

namespace oqec {

static const ComplexMatrix &front_of(const std::vector<ComplexMatrix> &kraus) {
    if (kraus.empty()) {
        throw DimensionError("QuantumChannel: empty Kraus list");
    }
    return kraus.front();
}

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus)
    : QuantumChannel(kraus, front_of(kraus).cols(), front_of(kraus).rows()) {}

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus, Index dim_in, Index dim_out)
    : kraus_(std::move(kraus)), dim_in_(dim_in), dim_out_(dim_out) {
    if (dim_in <= 0 || dim_out <= 0) {
        throw DimensionError("QuantumChannel: dimensions must be positive");
    }
    if (kraus_.empty()) {
        throw DimensionError("QuantumChannel: empty Kraus list");
    }
    for (std::size_t a = 0; a < kraus_.size(); ++a) {
        if (kraus_[a].rows() != dim_out || kraus_[a].cols() != dim_in) {
            std::ostringstream msg;
            msg << "QuantumChannel: Kraus operator " << a << " is " << shape_string(kraus_[a])
                << ", expected " << dim_out << "x" << dim_in;
            throw DimensionError(msg.str());
        }
    }
}

QuantumChannel QuantumChannel::identity(Index dim) {
    return QuantumChannel({oqec::identity(dim)}, dim, dim);
}

QuantumChannel QuantumChannel::unitary(ComplexMatrix u) {
    return QuantumChannel(std::vector<ComplexMatrix>{std::move(u)});
}

ComplexMatrix QuantumChannel::effect_sum() const {
    ComplexMatrix sum = ComplexMatrix::Zero(dim_in_, dim_in_);
    for (const auto &e : kraus_) {
        sum.noalias() += e.adjoint() * e;
    }
    return sum;
}

CheckReport is_cptp(const QuantumChannel &ch, double tol) {
    const double residual = frobenius_distance(ch.effect_sum(), identity(ch.dim_in()));
    CheckReport report = make_report(Condition::CPTP, residual, tol);
    report.note = "complete positivity holds for any Kraus form; residual is ||sum E^dag E - 1||_F";
    return report;
}

ComplexMatrix apply(const QuantumChannel &ch, const ComplexMatrix &rho) {
    if (rho.rows() != ch.dim_in() || rho.cols() != ch.dim_in()) {
        throw DimensionError("apply: input " + shape_string(rho) + " does not match channel input dimension " +
                             std::to_string(ch.dim_in()));
    }
    ComplexMatrix out = ComplexMatrix::Zero(ch.dim_out(), ch.dim_out());
    for (const auto &e : ch.kraus()) {
        out.noalias() += e * rho * e.adjoint();
    }
    return out;
}

QuantumChannel compose(const QuantumChannel &second, const QuantumChannel &first) {
    if (first.dim_out() != second.dim_in()) {
        throw DimensionError("compose: first maps into C^" + std::to_string(first.dim_out()) +
                             " but second acts on C^" + std::to_string(second.dim_in()));
    }
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(first.size() * second.size());
    for (const auto &r : second.kraus()) {
        for (const auto &e : first.kraus()) {
            kraus.push_back(r * e);
        }
    }
    return QuantumChannel(std::move(kraus), first.dim_in(), second.dim_out());
}

double channel_distance(const QuantumChannel &a, const QuantumChannel &b) {
    if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) {
        throw DimensionError("channel_distance: channels have different shapes");
    }
    const Index d = a.dim_in();
    double worst = 0.0;
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            const ComplexMatrix unit = ket_bra(d, d, i, j);
            worst = std::max(worst, (oqec::apply(a, unit) - oqec::apply(b, unit)).norm());
        }
    }
    return worst;
}

bool channels_equal(const QuantumChannel &a, const QuantumChannel &b, double tol) {
    return channel_distance(a, b) <= tol;
}

QuantumChannel remix(const QuantumChannel &ch, const ComplexMatrix &mixing) {
    if (mixing.rows() != static_cast<Index>(ch.size()) || mixing.cols() == 0) {
        throw DimensionError("remix: mixing matrix " + shape_string(mixing) + " does not match " +
                             std::to_string(ch.size()) + " Kraus operators");
    }
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(static_cast<std::size_t>(mixing.cols()));
    for (Index a = 0; a < mixing.cols(); ++a) {
        ComplexMatrix e = ComplexMatrix::Zero(ch.dim_out(), ch.dim_in());
        for (Index b = 0; b < mixing.rows(); ++b) {
            e += mixing(b, a) * ch[static_cast<std::size_t>(b)];
        }
        kraus.push_back(std::move(e));
    }
    return QuantumChannel(std::move(kraus), ch.dim_in(), ch.dim_out());
}

QuantumChannel random_channel(Index dim_in, Index dim_out, Index num_kraus, std::mt19937_64 &rng) {
    if (dim_in <= 0 || dim_out <= 0 || num_kraus <= 0) {
        throw DimensionError("random_channel: dimensions and Kraus count must be positive");
    }
    if (num_kraus * dim_out < dim_in) {
        throw DimensionError("random_channel: " + std::to_string(num_kraus) + " Kraus operators of size " +
                             std::to_string(dim_out) + "x" + std::to_string(dim_in) +
                             " cannot be trace preserving");
    }
    const ComplexMatrix w = random_isometry(num_kraus * dim_out, dim_in, rng);
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(static_cast<std::size_t>(num_kraus));
    for (Index a = 0; a < num_kraus; ++a) {
        kraus.push_back(w.middleRows(a * dim_out, dim_out));
    }
    return QuantumChannel(std::move(kraus), dim_in, dim_out);
}

QuantumChannel random_channel(Index dim_in, Index dim_out, Index num_kraus, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_channel(dim_in, dim_out, num_kraus, rng);
}

}  // namespace oqec
