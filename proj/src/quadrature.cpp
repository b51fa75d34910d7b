#include "becdeco/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

namespace becdeco {

namespace {

// Kronrod nodes on [0, 1]; odd indices are the embedded Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kNodes[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[j] * pair;
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureConfig& cfg) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("integrate_adaptive: bounds must be finite");
    }
    if (a == b) return {};
    if (cfg.rel_tol <= 0.0 && cfg.abs_tol <= 0.0) {
        throw std::invalid_argument("integrate_adaptive: need a positive tolerance");
    }

    std::priority_queue<Segment> heap;
    Segment first = gauss_kronrod(f, a, b);
    double total = first.value;
    double error = first.error;
    heap.push(first);
    std::size_t subdivisions = 0;

    const auto target = [&] { return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)); };
    while (error > target()) {
        if (subdivisions >= cfg.max_subdivisions) {
            throw QuadratureError("integrate_adaptive: tolerance not met after " +
                                  std::to_string(subdivisions) + " subdivisions (estimate " +
                                  std::to_string(error) + ", target " + std::to_string(target()) + ")");
        }
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Segment left = gauss_kronrod(f, worst.a, mid);
        const Segment right = gauss_kronrod(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
    }
    // Re-sum to shed drift from the incremental updates.
    total = 0.0;
    error = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    if (!std::isfinite(total)) throw QuadratureError("integrate_adaptive: non-finite integral");
    return {total, error, subdivisions};
}

}  // namespace becdeco
