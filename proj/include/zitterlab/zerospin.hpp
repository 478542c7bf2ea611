#pragma once

#include <optional>

#include "zitterlab/lagrangian.hpp"

// Spinning systems with zero intrinsic angular momentum: a single linear
// oscillation mode v = p/m + F cos(omega tau + phase) of the first-order
// system, omega = sqrt(-m/k1). The CMF spin vanishes identically (velocity
// and all its derivatives stay collinear); a boosted observer sees a spin
// vector vibrating orthogonally to the momentum, with zero helicity and a
// null Pauli-Lubanski vector.

namespace zitterlab {

struct LinearOscParams {
    double m = 1.0;
    double k1 = -0.25;
    FourVector p{1.0, 0.0, 0.0, 0.0};
    FourVector amp_f{};  // F, spatial in the CMF
    double phase = 0.0;

    double omega() const { return std::sqrt(-m / k1); }

    LagrangianSpec spec() const { return {m, {k1}}; }
};

/// Throws InvalidParams unless m > 0, k1 < 0, p^2 = m^2 and p.F = 0.
void require_valid(const LinearOscParams& params, double tol = 1e-10);

/// Analytic CMF chain x(0)..x(depth) of the linear mode.
KinematicState linear_state_at(const LinearOscParams& params, double tau, int depth = 4);

/// Spin vector in the CMF: identically zero (collinear velocity chain).
ThreeVector cmf_spin(const LinearOscParams& params, double tau);

/// k1 (v x a) of the state seen from a frame moving at -w relative to the
/// CMF; sinusoidal and orthogonal to the momentum.
ThreeVector boosted_spin(const LinearOscParams& params, const BoostVelocity& w, double tau);

struct HelicityCheck {
    std::optional<double> max_helicity;  // absent when |p| = 0 (CMF)
    double max_w_component;              // largest |W^mu| over the sampled cycle
};

/// Samples one cycle in the boosted frame: the normalized spin projection on
/// the momentum stays zero and the Pauli-Lubanski vector built from the spin
/// tensor stays null.
HelicityCheck helicity_zero_check(const LinearOscParams& params, const BoostVelocity& w,
                                  int samples = 64);

struct MeanSpinSquared {
    double implemented;        // cycle average of |k1 (v x a)|^2 = |F_perp x p|^2 / (2 omega^2)
    double literature_formula; // the published closed form |F_perp x p|^2 / (2 omega)
};

/// Cycle average of the boosted spin squared, both as derived here and as
/// printed in the literature; the two disagree by a factor omega.
MeanSpinSquared mean_spin_squared(const LinearOscParams& params, const BoostVelocity& w);

}  // namespace zitterlab
