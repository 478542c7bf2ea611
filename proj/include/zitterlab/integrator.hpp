#pragma once

#include <vector>

#include "zitterlab/lagrangian.hpp"

// Fixed-step RK4 integration of the free equation of motion
// 0 = sum_i (-1)^i k_i a(2i), reduced to first order over the chain
// x(0)..x(2n+1); the top derivative is closed algebraically. Each stored
// sample carries the chain plus the closure entry x(2n+2) so the audit
// operations can evaluate every charge on it.

namespace zitterlab {

struct Trajectory {
    LagrangianSpec spec;
    double dtau = 0.0;
    std::vector<KinematicState> samples;
};

struct ConservationReport {
    double p_drift = 0.0;  // max over tau of |p(tau)-p(0)|_inf / max(1, |p(0)|_inf)
    double j_drift = 0.0;  // same for J = x^p + S
    double h_drift = 0.0;  // same for the Hamiltonian
    bool j_skipped = false;  // no closed form (n > 3)
    bool h_skipped = false;  // no closed form (n > 2)

    // per-sample constraint residual maxima
    double max_h1 = 0.0;    // |p.p - m^2|
    double max_h2 = 0.0;    // |p.v - m|
    double max_orto = 0.0;  // |w.V| with w = p/m, V = v - p/m
};

/// Dimension of the reduced first-order system, 4*(2n+2).
int reduce_order(const LagrangianSpec& spec);

/// RK4 from init (chain x(0)..x(2n+1)) to tau_end. Aborts with NonFiniteState
/// if any component exceeds 1e12 in magnitude or stops being finite.
Trajectory integrate(const LagrangianSpec& spec, const KinematicState& init, double tau_end,
                     double dtau);

/// Drift of p, J, H plus mass-shell / orthogonality residuals along the run.
ConservationReport conservation_report(const Trajectory& traj);

}  // namespace zitterlab
