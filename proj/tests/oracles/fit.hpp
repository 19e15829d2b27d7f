#pragma once

#include <cmath>
#include <vector>

namespace oracle {

// least-squares slope of log|y| against log x
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = std::log(x[i]), b = std::log(std::abs(y[i]));
        sx += a;
        sy += b;
        sxx += a * a;
        sxy += a * b;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracle
