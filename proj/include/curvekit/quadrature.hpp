// Copyright 2026 The Curvekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CURVEKIT_QUADRATURE_HPP
#define CURVEKIT_QUADRATURE_HPP

#include <cstddef>
#include <vector>

#include <curvekit/error.hpp>

namespace curvekit {

/// Fixed composite rule used by the closed-form generators: each output step
/// is split into `substeps` Simpson subintervals (must be even, >= 2).
struct QuadratureConfig {
    int substeps = 2;

    void validate() const {
        if (substeps < 2 || substeps % 2 != 0) {
            throw CurveError(ErrorKind::InvalidArgument,
                             "quadrature substeps must be even and >= 2");
        }
    }
};

/// Composite Simpson over `intervals` subintervals (rounded up to even).
template <class F>
double simpson(F&& f, double a, double b, int intervals) {
    if (intervals < 2) {
        intervals = 2;
    }
    if (intervals % 2 != 0) {
        ++intervals;
    }
    const double h = (b - a) / intervals;
    double odd = 0.0;
    double even = 0.0;
    for (int i = 1; i < intervals; ++i) {
        const double v = f(a + i * h);
        if (i % 2 == 1) {
            odd += v;
        }
        else {
            even += v;
        }
    }
    return h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

/// Simpson at n and 2n intervals combined by one Richardson step (O(h^6)).
template <class F>
double simpsonRichardson(F&& f, double a, double b, int intervals) {
    const double coarse = simpson(f, a, b, intervals);
    const double fine = simpson(f, a, b, 2 * intervals);
    return fine + (fine - coarse) / 15.0;
}

/// Cumulative integral of f on the grid a + i*step, i = 0..count, with one
/// Simpson panel (endpoints plus midpoint) per grid interval. The first value
/// is exactly zero; nonnegative integrands give nondecreasing output.
template <class F>
std::vector<double> cumulativeSimpson(F&& f, double a, double step, std::size_t count) {
    std::vector<double> out(count + 1, 0.0);
    double left = f(a);
    for (std::size_t i = 0; i < count; ++i) {
        const double x0 = a + static_cast<double>(i) * step;
        const double x1 = a + static_cast<double>(i + 1) * step;
        const double right = f(x1);
        out[i + 1] = out[i] + (x1 - x0) / 6.0 * (left + 4.0 * f(0.5 * (x0 + x1)) + right);
        left = right;
    }
    return out;
}

/// Fourth-order cumulative integral of uniformly sampled data. Interior
/// intervals use the centred four-point Lagrange weights, the two end
/// intervals the one-sided ones. Falls back to trapezoids below four samples.
template <class V>
std::vector<V> cumulativeSampled(const std::vector<V>& f, double step) {
    const std::size_t n = f.size();
    std::vector<V> out(n);
    if (n == 0) {
        return out;
    }
    out[0] = f[0] * 0.0;
    if (n < 4) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            out[i + 1] = out[i] + (f[i] + f[i + 1]) * (0.5 * step);
        }
        return out;
    }
    const double w = step / 24.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        V inc;
        if (i == 0) {
            inc = (f[0] * 9.0 + f[1] * 19.0 - f[2] * 5.0 + f[3]) * w;
        }
        else if (i + 2 == n) {
            inc = (f[n - 4] - f[n - 3] * 5.0 + f[n - 2] * 19.0 + f[n - 1] * 9.0) * w;
        }
        else {
            inc = ((f[i] + f[i + 1]) * 13.0 - f[i - 1] - f[i + 2]) * w;
        }
        out[i + 1] = out[i] + inc;
    }
    return out;
}

} // namespace curvekit

#endif // CURVEKIT_QUADRATURE_HPP
