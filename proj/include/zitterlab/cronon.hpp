#pragma once

#include <array>
#include <vector>

#include "zitterlab/minkowski.hpp"

// Elementary-time-step electrodynamics: the infinite-order coefficient
// family k_i = (-1)^i m T^{2i} / (2i+1)! and the two-point recurrence
//   m [Dv + v (v . Dv)] / 2T = e F v,     Dv = v(tau+T) - v(tau-T),
// a time-symmetric discretization of m v' = e F v for a charge in a constant
// field.

namespace zitterlab {

struct CrononParams {
    double m = 1.0;
    double e = 1.0;
    double T = 0.0;        // elementary time step
    AntisymTensor field;   // constant F^{mu nu}

    /// (4/3) e^2 / m, the step the coefficient family is built from (c = 1).
    static double default_cronon(double charge, double mass) {
        return (4.0 / 3.0) * charge * charge / mass;
    }
};

/// k_i = (-1)^i m T^{2i} / (2i+1)!; the signs alternate for every i.
double cronon_coefficient(double m, double T, int i);

/// 4x4 matrix of the implicit step, M = I + v (x) (g v).
std::array<std::array<double, 4>, 4> fd_matrix(const FourVector& v);

/// One recurrence step: solves M Dv = (2Te/m) F v_curr and returns
/// v_prev + Dv. Throws SingularSystem when M is numerically singular
/// (infinity-norm condition above 1e12).
FourVector fd_step(const CrononParams& params, const FourVector& v_prev,
                   const FourVector& v_curr);

/// Backward Euler-Lorentz seed: v(-T) from v(0), local error O(T^2).
FourVector euler_lorentz_seed(const CrononParams& params, const FourVector& v0);

/// Velocity sequence v(0), v(T), ..., v(steps*T) from the seed pair
/// (v at -T, v at 0).
std::vector<FourVector> simulate_cronon(const CrononParams& params, const FourVector& v_prev,
                                        const FourVector& v_curr, int steps);

/// Field tensor from lab-frame electric and magnetic 3-vectors:
/// F^{i0} = E_i, F^{ij} = -eps_ijk B_k.
AntisymTensor field_from_eb(const ThreeVector& efield, const ThreeVector& bfield);

}  // namespace zitterlab
