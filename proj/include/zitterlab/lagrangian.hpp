#pragma once

#include <vector>

#include "zitterlab/minkowski.hpp"

// Free higher-derivative Lagrangian layer: L_n = (1/2) sum_{i=0..n} k_i v(i)^2
// with k_0 = m. Canonical momentum, Newton residual, spin vector/tensor
// (closed forms for n <= 3), conserved Hamiltonians (n <= 2) and the
// second-order Hamilton formalism for n = 1.

namespace zitterlab {

struct LagrangianSpec {
    double m = 1.0;               // k_0
    std::vector<double> coeffs;   // k_1 .. k_n

    int order() const { return static_cast<int>(coeffs.size()); }

    /// k_i with k_0 = m.
    double k(int i) const { return i == 0 ? m : coeffs.at(static_cast<size_t>(i) - 1); }

    /// First-order spec with k_1 = -1/(4m); oscillates at frequency 2m.
    static LagrangianSpec dirac(double mass) { return {mass, {-0.25 / mass}}; }

    static LagrangianSpec spinless(double mass) { return {mass, {}}; }
};

/// Proper time plus the derivative chain x, x', x'', ... of the worldline.
/// Operations state how deep a chain they need; deriv() throws
/// InsufficientDerivatives past the stored depth.
struct KinematicState {
    double tau = 0.0;
    std::vector<FourVector> derivs;

    KinematicState() = default;
    KinematicState(double tau_, std::vector<FourVector> derivs_)
        : tau(tau_), derivs(std::move(derivs_)) {}

    int depth() const { return static_cast<int>(derivs.size()) - 1; }

    const FourVector& deriv(int k) const;

    const FourVector& position() const { return deriv(0); }
    const FourVector& velocity() const { return deriv(1); }
    const FourVector& acceleration() const { return deriv(2); }
};

/// First- and second-order canonical momenta of an n = 1 system.
struct CanonicalPair {
    FourVector p;
    FourVector pi;
};

/// Canonical variables (x, p; v, pi) of the first-order Hamilton formalism.
struct CanonicalVars {
    FourVector x, p, v, pi;
};

struct HamiltonResiduals {
    FourVector dHdp_minus_xdot;
    FourVector dHdx_plus_pdot;
    FourVector dHdpi_minus_vdot;
    FourVector dHdv_plus_pidot;

    double max_abs() const {
        return std::max({dHdp_minus_xdot.max_abs(), dHdx_plus_pdot.max_abs(),
                         dHdpi_minus_vdot.max_abs(), dHdv_plus_pidot.max_abs()});
    }
};

/// p = sum_i (-1)^i k_i v(2i); constant along free trajectories.
FourVector canonical_momentum(const LagrangianSpec& spec, const KinematicState& state);

/// v - p/m, the oscillating part of the velocity.
FourVector zbw_velocity(const LagrangianSpec& spec, const KinematicState& state);

/// sum_i (-1)^i k_i a(2i); vanishes on true free trajectories.
FourVector newton_residual(const LagrangianSpec& spec, const KinematicState& state);

/// Spin 3-vector s = (S^23, S^31, S^12). Closed forms for n in {1,2,3};
/// identically zero for n = 0; UnsupportedOrder beyond 3.
ThreeVector spin_vector(const LagrangianSpec& spec, const KinematicState& state);

/// Spin tensor; same order support as spin_vector.
AntisymTensor spin_tensor(const LagrangianSpec& spec, const KinematicState& state);

/// Proper-time derivative of the spin tensor, v ^ (k1 a' - k2 a''' + k3 a(5)).
AntisymTensor spin_tensor_dot(const LagrangianSpec& spec, const KinematicState& state);

/// Total angular momentum J = x ^ p + S (n <= 3); constant along trajectories.
AntisymTensor total_angular_momentum(const LagrangianSpec& spec, const KinematicState& state);

/// Conserved Hamiltonian for n in {0,1,2}.
double hamiltonian(const LagrangianSpec& spec, const KinematicState& state);

/// pi = k1 a (n = 1 only).
FourVector second_momentum(const LagrangianSpec& spec, const KinematicState& state);

/// Both momenta of an n = 1 system.
CanonicalPair canonical_momenta(const LagrangianSpec& spec, const KinematicState& state);

/// Canonical variables read off the derivative chain (n = 1 only).
CanonicalVars canonical_vars(const LagrangianSpec& spec, const KinematicState& state);

/// Residuals of the double couple of Hamilton equations for
/// H(x,p;v,pi) = p.v + pi^2/(2 k1) - (1/2) m v^2, with the dotted quantities
/// read from the state chain. The overload taking CanonicalVars evaluates the
/// gradients at (possibly perturbed) canonical variables.
HamiltonResiduals hamilton_residuals(const LagrangianSpec& spec, const KinematicState& state);
HamiltonResiduals hamilton_residuals(const LagrangianSpec& spec, const KinematicState& state,
                                     const CanonicalVars& vars);

}  // namespace zitterlab
