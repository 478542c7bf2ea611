#pragma once

#include <optional>
#include <vector>

#include "zitterlab/kinematics.hpp"
#include "zitterlab/lagrangian.hpp"

// Closed-form states of the first-order system with k1 = -1/(4m):
//   v(tau) = p/m + E cos(2m tau) + H sin(2m tau),
// parameterized by (m, p, E, H, x0). Consistent parameters satisfy
// p^2 = m^2, p.E = p.H = 0 and, consequently, E0 = w.E and H0 = w.H with
// w = p/p0 the center-of-mass 3-velocity.

namespace zitterlab {

struct DiracParams {
    double m = 1.0;
    FourVector p{1.0, 0.0, 0.0, 0.0};
    FourVector amp_e{};  // E
    FourVector amp_h{};  // H
    FourVector x0{};

    /// CMF spin-1/2 state: p = (m;0,0,0), E = x_hat, H = y_hat.
    static DiracParams canonical(double mass);

    ThreeVector cm_velocity() const { return p.spatial() * (1.0 / p.t); }
    double omega() const { return 2.0 * m; }
};

struct ConstraintResidual {
    const char* name;
    double value;
};

struct PolarizationInfo {
    bool is_standard_frame = false;       // w.E = w.H = 0, i.e. V0 vanishes identically
    std::optional<double> helicity;       // absent when |p| = 0 or the spin vanishes
    double longitudinal_amp = 0.0;        // max over tau of |V parallel to p|
    double transverse_amp = 0.0;          // max over tau of |V orthogonal to p|
};

struct PauliLubanski {
    FourVector w;
    double w_sq;
    std::optional<double> helicity;
};

struct ConstantV2Info {
    double v2;
    double cmf_speed;
    double radius;
};

/// Residuals of the five parameter constraints; all ~0 means valid.
std::vector<ConstraintResidual> validate(const DiracParams& params);

/// Max absolute constraint residual.
double max_constraint_residual(const DiracParams& params);

/// Throws InvalidParams when any constraint residual exceeds tol.
void require_valid(const DiracParams& params, double tol = 1e-10);

/// Analytic state with the chain x(0)..x(depth). Default depth covers every
/// audit in this library.
KinematicState state_at(const DiracParams& params, double tau, int depth = 6);

/// Boosts (p, E, H, x0) into the frame where the CM moves with velocity
/// boost (on top of its current motion).
DiracParams boost_params(const DiracParams& params, const BoostVelocity& boost);

/// E*^2 H*^2 - (E*.H*)^2 - 1 evaluated in the CMF; zero for spin-1/2 states.
double spin_half_residual(const DiracParams& params, double tol = 1e-10);

/// Present iff E.H = 0 and E^2 = H^2 (constant v^2 family); then v^2 = 1+E^2,
/// |v*| = sqrt(-E^2) and the CMF orbit radius is sqrt(-E^2)/(2m).
std::optional<ConstantV2Info> constant_v2_info(const DiracParams& params, double tol = 1e-10);

/// v0(tau) = p0/m + w.E cos(2m tau) + w.H sin(2m tau); oscillates around the
/// Lorentz factor p0/m.
double times_ratio(const DiracParams& params, double tau, double tol = 1e-10);

/// Exact period mean of v0, i.e. p0/m.
double times_ratio_mean(const DiracParams& params);

/// dt/dt' between two frames reached from these params by frame1 and frame2.
double times_ratio_between(const DiracParams& params, const BoostVelocity& frame1,
                           const BoostVelocity& frame2, double tau, double tol = 1e-10);

/// W0 = p.(H x E)/2, W = [p0 (H x E) + H0 (E x p) + E0 (p x H)]/2, plus the
/// helicity, the spin projection onto p normalized by the invariant CMF spin
/// magnitude sqrt(-W^2)/m.
PauliLubanski pauli_lubanski(const DiracParams& params, double tol = 1e-10);

/// Standard-frame test and the longitudinal/transverse split of the
/// oscillating velocity relative to the momentum direction.
PolarizationInfo polarization_info(const DiracParams& params, double tol = 1e-10);

/// Cycle average of the boost generator k = (S^01,S^02,S^03):
/// (H0 E - E0 H)/2. Zero exactly in the standard frames.
ThreeVector mean_boost_vector(const DiracParams& params, double tol = 1e-10);

/// Intrinsic electric dipole in the CMF, -(e/(4 m^2)) a*(tau) = (e/m) k*(tau).
ThreeVector dipole_cmf(const DiracParams& params, double charge, double tau, double tol = 1e-10);

struct SdotTimesP {
    FourVector value;          // S'^{mu nu} p_nu
    double dos_residual;       // |value - a'/4|_inf
    double inertia_residual;   // |a + S''^{mu nu} p_nu / m^2|_inf
};

/// S'^{mu nu} p_nu from the analytic spin tensor derivative, with the two
/// identity residuals (equality with a'/4, and a = -S'' p / m^2).
SdotTimesP sdot_times_p(const DiracParams& params, double tau, double tol = 1e-10);

}  // namespace zitterlab
