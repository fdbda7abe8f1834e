#ifndef QCAP_TEST_SUPPORT_HPP
#define QCAP_TEST_SUPPORT_HPP

#include <cmath>
#include <random>

namespace qcap::test {

inline constexpr int kPropertyInstances = 1000;

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240611ULL);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

// Log-uniform draw, for quantities spanning decades.
inline double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

}  // namespace qcap::test

#endif  // QCAP_TEST_SUPPORT_HPP
