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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cssqec/qsim.hpp"

namespace cssqec::bounds {

/// Binary entropy in bits, with 0 log 0 = 0.
double h2(double p);

/// Levitin-Holevo upper bound 1 - H2(2p/3) for the depolarizing channel.
double holevo_capacity_bound(double p);

/// Entanglement transmission bound H2(1/2 + sqrt(p(1-p))), zero for p >= 1/2.
double entanglement_bound(double p);

/// min[1 - H2(2t/3n), H2(1/2 + sqrt((1 - t/n) t/n))] for t/n < 1/2, else 0,
/// parameterized by the error fraction t/n.
double composite_upper_bound(double error_fraction);

/// Lower-bound rate curve max(0, 1 - 2 H2(2x)); zero once 2x passes the
/// root of H2 = 1/2.
double gv_rate_curve(double x);

/// H(sum p_a rho_a) - sum p_a H(rho_a).
double holevo_chi(const std::vector<std::pair<double, qsim::DensityMatrix>>& ensemble);

struct BoundCurvePoint {
    double x;
    double gv;
    double holevo;
    double entangle;
};

/// Grid over [0, 1/2] with the given step; the last point is exactly 1/2.
std::vector<BoundCurvePoint> figure1_table(double step);

/// CSV with header `x,gv_rate,holevo_bound,entanglement_bound`, 9 significant digits.
std::string figure1_csv(const std::vector<BoundCurvePoint>& table);

/// Root of `f` on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.
template <class F>
double bisect(F&& f, double lo, double hi, double tol = 1e-9) {
    double flo = f(lo);
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if ((fmid > 0) == (flo > 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace cssqec::bounds
