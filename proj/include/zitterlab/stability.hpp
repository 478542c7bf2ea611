#pragma once

#include <complex>
#include <vector>

#include "zitterlab/lagrangian.hpp"

// Characteristic-equation analysis of the free equation of motion:
// 0 = m - k1 z^2 + k2 z^4 - ... with u = z^2. Oscillatory motion needs every
// u-root real and strictly negative; the alternating-sign condition on the
// k_i is the Descartes necessary condition for that.

namespace zitterlab {

struct Spectrum {
    std::vector<std::complex<double>> roots_z2;
    std::vector<double> frequencies;  // omega_i = sqrt(-u_i), ascending
    bool oscillatory = false;
};

/// Coefficients of the degree-n polynomial in u = z^2: [m, -k1, +k2, ...].
std::vector<double> characteristic_coefficients(const LagrangianSpec& spec);

/// All u-roots plus the extracted real frequencies. Roots are accepted only
/// if |poly(u)| <= 1e-9 * max|coeff|; otherwise RootFindingFailure.
Spectrum spectrum(const LagrangianSpec& spec);

/// True iff every nonzero k_i has sign (-1)^i.
bool descartes_check(const LagrangianSpec& spec);

}  // namespace zitterlab
