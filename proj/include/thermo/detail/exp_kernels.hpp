#pragma once

#include <cmath>
#include <complex>

namespace thermo::detail {

using cplx = std::complex<double>;

// Series branch for |z| < 1; the closed forms lose all digits as z -> 0.
inline cplx exp_kernel_series(cplx z, int shift) {
    cplx term = 1.0;
    for (int k = 1; k <= shift; ++k) term /= static_cast<double>(k);
    cplx sum = term;
    for (int k = 1; k < 40; ++k) {
        term *= z / static_cast<double>(k + shift);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

/// (e^z - 1) / z
inline cplx phi1(cplx z) {
    if (std::abs(z) < 1.0) return exp_kernel_series(z, 1);
    return (std::exp(z) - 1.0) / z;
}

/// (e^z - 1 - z) / z²
inline cplx phi2(cplx z) {
    if (std::abs(z) < 1.0) return exp_kernel_series(z, 2);
    return (std::exp(z) - 1.0 - z) / (z * z);
}

}  // namespace thermo::detail
