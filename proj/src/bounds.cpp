// Copyright 2026 The cssqec Authors
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

#include "cssqec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cssqec::bounds {

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error(std::string(what) + ": argument must lie in [0, 1]");
    }
}

}  // namespace

double h2(double p) {
    check_probability(p, "h2");
    if (p == 0.0 || p == 1.0) {
        return 0.0;
    }
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double holevo_capacity_bound(double p) {
    check_probability(p, "holevo_capacity_bound");
    return 1.0 - h2(2.0 * p / 3.0);
}

double entanglement_bound(double p) {
    check_probability(p, "entanglement_bound");
    if (p >= 0.5) {
        return 0.0;
    }
    return h2(std::min(1.0, 0.5 + std::sqrt(p * (1.0 - p))));
}

double composite_upper_bound(double error_fraction) {
    check_probability(error_fraction, "composite_upper_bound");
    const double x = error_fraction;
    if (x >= 0.5) {
        return 0.0;
    }
    return std::min(1.0 - h2(2.0 * x / 3.0), h2(std::min(1.0, 0.5 + std::sqrt((1.0 - x) * x))));
}

double gv_rate_curve(double x) {
    if (!(x >= 0.0 && x <= 0.5)) {
        throw std::domain_error("gv_rate_curve: x must lie in [0, 1/2]");
    }
    // Past 2x = 1/2 the binary entropy is at its maximum of 1.
    const double h = 2.0 * x >= 0.5 ? 1.0 : h2(2.0 * x);
    return std::max(0.0, 1.0 - 2.0 * h);
}

double holevo_chi(const std::vector<std::pair<double, qsim::DensityMatrix>>& ensemble) {
    if (ensemble.empty()) {
        throw std::invalid_argument("holevo_chi: empty ensemble");
    }
    const auto dim = static_cast<Eigen::Index>(ensemble.front().second.dim());
    Eigen::MatrixXcd average = Eigen::MatrixXcd::Zero(dim, dim);
    double total = 0.0;
    double member_entropy = 0.0;
    for (const auto& [p, rho] : ensemble) {
        if (p < 0.0) {
            throw std::invalid_argument("holevo_chi: negative probability");
        }
        if (static_cast<Eigen::Index>(rho.dim()) != dim) {
            throw std::invalid_argument("holevo_chi: members have different dimensions");
        }
        total += p;
        average += p * rho.matrix();
        member_entropy += p * qsim::von_neumann_entropy(rho);
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw std::invalid_argument("holevo_chi: probabilities do not sum to 1");
    }
    return std::max(0.0, qsim::von_neumann_entropy(qsim::DensityMatrix(average)) - member_entropy);
}

std::vector<BoundCurvePoint> figure1_table(double step) {
    if (!(step > 0.0 && step <= 0.01)) {
        throw std::invalid_argument("figure1_table: step must satisfy 0 < step <= 0.01");
    }
    const auto count = static_cast<std::size_t>(std::ceil(0.5 / step - 1e-9));
    std::vector<BoundCurvePoint> table;
    table.reserve(count + 1);
    for (std::size_t i = 0; i <= count; ++i) {
        const double x = std::min(0.5, static_cast<double>(i) * step);
        table.push_back({x, gv_rate_curve(x), holevo_capacity_bound(x), entanglement_bound(x)});
    }
    return table;
}

std::string figure1_csv(const std::vector<BoundCurvePoint>& table) {
    std::string out = "x,gv_rate,holevo_bound,entanglement_bound\n";
    char buf[128];
    for (const auto& pt : table) {
        std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g,%.9g\n", pt.x, pt.gv, pt.holevo, pt.entangle);
        out += buf;
    }
    return out;
}

}  // namespace cssqec::bounds
