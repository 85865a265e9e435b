#pragma once

// Test-only reference computations. Nothing here calls into the library's
// regression or estimator code.

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace posenergy::oracle {

struct Line {
    double k;
    double lambda;
    double r2;
};

/// Raw-sum normal equations
///     [ n    Sx  ] [k]   [ Sy  ]
///     [ Sx   Sxx ] [l] = [ Sxy ]
/// solved by Cramer's rule in long double. R^2 is the squared Pearson
/// correlation (equal to 1 - SSres/SStot for OLS with an intercept).
inline Line normal_equations(const std::vector<std::pair<double, double>>& xy) {
    long double n = static_cast<long double>(xy.size());
    long double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (auto [x, y] : xy) {
        sx += x;
        sy += y;
        sxx += static_cast<long double>(x) * x;
        sxy += static_cast<long double>(x) * y;
        syy += static_cast<long double>(y) * y;
    }
    long double det = n * sxx - sx * sx;
    long double k = (sy * sxx - sx * sxy) / det;
    long double lambda = (n * sxy - sx * sy) / det;
    long double cov = n * sxy - sx * sy;
    long double var_y = n * syy - sy * sy;
    long double r2 = var_y == 0 ? 1.0L : (cov * cov) / (det * var_y);
    return {static_cast<double>(k), static_cast<double>(lambda), static_cast<double>(r2)};
}

/// Direct evaluation of (k + lambda*l) * p / l in kWh, with 1 kWh = 3.6e6 J.
inline double band_value(double k, double lambda, double watts, double l) {
    return (k + lambda * l) * watts / l / 3.6e6;
}

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

} // namespace posenergy::oracle
