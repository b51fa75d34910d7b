// Globally adaptive 7/15-point Gauss-Kronrod integration

#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>

namespace becdeco {

struct QuadratureConfig {
    double rel_tol = 1e-6;
    double abs_tol = 0.0;
    std::size_t max_subdivisions = 400;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t subdivisions = 0;
};

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bisects the interval with the largest error estimate until the summed
// estimate meets max(abs_tol, rel_tol·|I|). Throws QuadratureError otherwise.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureConfig& cfg = {});

}  // namespace becdeco
