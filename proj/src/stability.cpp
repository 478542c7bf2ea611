#include "zitterlab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace zitterlab {

namespace {

using cplx = std::complex<double>;

cplx poly_eval(const std::vector<double>& c, cplx u) {
    cplx r = 0.0;
    for (size_t i = c.size(); i-- > 0;) r = r * u + c[i];
    return r;
}

// Durand-Kerner simultaneous iteration; coefficients ascending in degree.
std::vector<cplx> all_roots(const std::vector<double>& coeffs) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    std::vector<cplx> roots(static_cast<size_t>(deg));
    const cplx seed(0.4, 0.9);
    cplx g = 1.0;
    for (auto& r : roots) {
        r = g;
        g *= seed;
    }
    const double lead = coeffs.back();
    for (int it = 0; it < 500; ++it) {
        double shift = 0.0;
        for (int i = 0; i < deg; ++i) {
            cplx denom = lead;
            for (int j = 0; j < deg; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            const cplx dr = poly_eval(coeffs, roots[i]) / denom;
            roots[i] -= dr;
            shift = std::max(shift, std::abs(dr));
        }
        if (shift < 1e-14) break;
    }
    return roots;
}

}  // namespace

std::vector<double> characteristic_coefficients(const LagrangianSpec& spec) {
    if (spec.order() < 1)
        throw UnsupportedOrder("characteristic equation needs order n >= 1");
    std::vector<double> c(static_cast<size_t>(spec.order()) + 1);
    double sign = 1.0;
    for (int i = 0; i <= spec.order(); ++i, sign = -sign) c[static_cast<size_t>(i)] = sign * spec.k(i);
    return c;
}

Spectrum spectrum(const LagrangianSpec& spec) {
    std::vector<double> coeffs = characteristic_coefficients(spec);
    while (coeffs.size() > 1 && coeffs.back() == 0.0) coeffs.pop_back();

    Spectrum s;
    if (coeffs.size() == 1) {
        s.oscillatory = true;  // no dynamical modes at all
        return s;
    }

    s.roots_z2 = all_roots(coeffs);

    double scale = 0.0;
    for (double c : coeffs) scale = std::max(scale, std::fabs(c));
    for (const auto& u : s.roots_z2) {
        const double resid = std::abs(poly_eval(coeffs, u));
        if (resid > 1e-9 * scale)
            throw RootFindingFailure("root " + num_str(u.real()) + "+" +
                                     num_str(u.imag()) + "i has residual " +
                                     num_str(resid));
    }

    s.oscillatory = true;
    for (const auto& u : s.roots_z2) {
        const bool real_negative = std::fabs(u.imag()) <= 1e-9 && u.real() <= -1e-12;
        if (real_negative)
            s.frequencies.push_back(std::sqrt(-u.real()));
        else
            s.oscillatory = false;
    }
    std::sort(s.frequencies.begin(), s.frequencies.end());
    return s;
}

bool descartes_check(const LagrangianSpec& spec) {
    double expected = -1.0;  // sign of k_1
    for (int i = 1; i <= spec.order(); ++i, expected = -expected) {
        const double ki = spec.k(i);
        if (ki != 0.0 && std::copysign(1.0, ki) != expected) return false;
    }
    return true;
}

}  // namespace zitterlab
