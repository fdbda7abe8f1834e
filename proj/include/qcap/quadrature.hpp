#ifndef QCAP_QUADRATURE_HPP
#define QCAP_QUADRATURE_HPP

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "qcap/errors.hpp"

namespace qcap {

template <typename Scalar>
struct QuadratureResult {
    Scalar value;
    Scalar error_estimate;
    int intervals;
};

namespace detail {

// Kronrod 15-point abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename Scalar>
struct Segment {
    Scalar a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <typename Scalar, typename F>
Segment<Scalar> gauss_kronrod_15(F& f, Scalar a, Scalar b) {
    const Scalar center = (a + b) / 2;
    const Scalar half = (b - a) / 2;
    const Scalar f_center = f(center);
    Scalar kronrod = f_center * Scalar(kKronrodWeights[7]);
    Scalar gauss = f_center * Scalar(kGaussWeights[3]);
    for (int j = 0; j < 7; ++j) {
        const Scalar dx = half * Scalar(kKronrodNodes[j]);
        const Scalar pair = f(center - dx) + f(center + dx);
        kronrod += Scalar(kKronrodWeights[j]) * pair;
        if (j % 2 == 1) gauss += Scalar(kGaussWeights[j / 2]) * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// Throws QuadratureFailure if the relative tolerance is not met within
/// `max_intervals` bisections.
template <typename Scalar, typename F>
QuadratureResult<Scalar> integrate_adaptive(F&& f, Scalar a, Scalar b, Scalar rel_tol = Scalar(1e-10),
                                            int max_intervals = 2000) {
    if (a == b) return {Scalar(0), Scalar(0), 0};
    std::priority_queue<detail::Segment<Scalar>> heap;
    auto first = detail::gauss_kronrod_15<Scalar>(f, a, b);
    Scalar total = first.value;
    Scalar total_error = first.error;
    heap.push(first);
    const Scalar tiny = std::numeric_limits<Scalar>::min();

    int intervals = 1;
    while (total_error > rel_tol * std::abs(total) && total_error > tiny) {
        if (intervals >= max_intervals) {
            throw QuadratureFailure("adaptive quadrature did not reach relative tolerance " +
                                    std::to_string(double(rel_tol)));
        }
        auto worst = heap.top();
        heap.pop();
        const Scalar mid = (worst.a + worst.b) / 2;
        auto left = detail::gauss_kronrod_15<Scalar>(f, worst.a, mid);
        auto right = detail::gauss_kronrod_15<Scalar>(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++intervals;
    }
    // Re-sum to shed the drift accumulated by the incremental updates.
    Scalar sum = 0, err = 0;
    while (!heap.empty()) {
        sum += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    return {sum, err, intervals};
}

}  // namespace qcap

#endif  // QCAP_QUADRATURE_HPP
