#include "zitterlab/lagrangian.hpp"

#include <string>

namespace zitterlab {

const FourVector& KinematicState::deriv(int k) const {
    if (k < 0 || k >= static_cast<int>(derivs.size()))
        throw InsufficientDerivatives("state stores x(0)..x(" + std::to_string(depth()) +
                                      "), operation needs x(" + std::to_string(k) + ")");
    return derivs[static_cast<size_t>(k)];
}

namespace {

// v(k) = x(k+1), a(k) = x(k+2)
const FourVector& vderiv(const KinematicState& s, int k) { return s.deriv(k + 1); }
const FourVector& aderiv(const KinematicState& s, int k) { return s.deriv(k + 2); }

void require_order(const LagrangianSpec& spec, int max_order, const char* what) {
    if (spec.order() > max_order)
        throw UnsupportedOrder(std::string(what) + " has no closed form for order n = " +
                               std::to_string(spec.order()) + " (supported up to " +
                               std::to_string(max_order) + ")");
}

}  // namespace

FourVector canonical_momentum(const LagrangianSpec& spec, const KinematicState& state) {
    FourVector p{};
    double sign = 1.0;
    for (int i = 0; i <= spec.order(); ++i, sign = -sign)
        p = p + sign * spec.k(i) * vderiv(state, 2 * i);
    return p;
}

FourVector zbw_velocity(const LagrangianSpec& spec, const KinematicState& state) {
    return state.velocity() - canonical_momentum(spec, state) / spec.m;
}

FourVector newton_residual(const LagrangianSpec& spec, const KinematicState& state) {
    FourVector r{};
    double sign = 1.0;
    for (int i = 0; i <= spec.order(); ++i, sign = -sign)
        r = r + sign * spec.k(i) * aderiv(state, 2 * i);
    return r;
}

AntisymTensor spin_tensor(const LagrangianSpec& spec, const KinematicState& state) {
    require_order(spec, 3, "spin tensor");
    const int n = spec.order();
    AntisymTensor s{};
    if (n >= 1) {
        const FourVector& v = state.velocity();
        const FourVector& a = state.acceleration();
        s = s + wedge_over(v, a, spec.k(1));
        if (n >= 2) {
            const FourVector& adot = aderiv(state, 1);
            const FourVector& addot = aderiv(state, 2);
            s = s + wedge_over(a, adot, spec.k(2)) - wedge_over(v, addot, spec.k(2));
            if (n >= 3) {
                const FourVector& a3 = aderiv(state, 3);
                const FourVector& a4 = aderiv(state, 4);
                s = s + wedge_over(adot, addot, spec.k(3)) - wedge_over(a, a3, spec.k(3)) +
                    wedge_over(v, a4, spec.k(3));
            }
        }
    }
    return s;
}

ThreeVector spin_vector(const LagrangianSpec& spec, const KinematicState& state) {
    return spin_tensor(spec, state).axial_part();
}

AntisymTensor spin_tensor_dot(const LagrangianSpec& spec, const KinematicState& state) {
    require_order(spec, 3, "spin tensor derivative");
    FourVector q{};
    double sign = 1.0;  // (-1)^(i+1) starting at i = 1
    for (int i = 1; i <= spec.order(); ++i, sign = -sign)
        q = q + sign * spec.k(i) * aderiv(state, 2 * i - 1);
    return wedge_over(state.velocity(), q, 1.0);
}

AntisymTensor total_angular_momentum(const LagrangianSpec& spec, const KinematicState& state) {
    const FourVector p = canonical_momentum(spec, state);
    return wedge_over(state.position(), p, 1.0) + spin_tensor(spec, state);
}

double hamiltonian(const LagrangianSpec& spec, const KinematicState& state) {
    require_order(spec, 2, "Hamiltonian");
    const int n = spec.order();
    const FourVector& v = state.velocity();
    double h = 0.5 * spec.m * minkowski_dot(v, v);
    if (n >= 1) {
        const FourVector& a = aderiv(state, 0);
        const FourVector& adot = aderiv(state, 1);
        h += 0.5 * spec.k(1) * minkowski_dot(a, a) - spec.k(1) * minkowski_dot(adot, v);
        if (n >= 2) {
            const FourVector& addot = aderiv(state, 2);
            const FourVector& a3 = aderiv(state, 3);
            h += 0.5 * spec.k(2) * minkowski_dot(adot, adot) +
                 spec.k(2) * minkowski_dot(a3, v) - spec.k(2) * minkowski_dot(addot, a);
        }
    }
    return h;
}

FourVector second_momentum(const LagrangianSpec& spec, const KinematicState& state) {
    if (spec.order() != 1)
        throw UnsupportedOrder("second-order momentum is defined for n = 1, got n = " +
                               std::to_string(spec.order()));
    return spec.k(1) * state.acceleration();
}

CanonicalPair canonical_momenta(const LagrangianSpec& spec, const KinematicState& state) {
    return {canonical_momentum(spec, state), second_momentum(spec, state)};
}

CanonicalVars canonical_vars(const LagrangianSpec& spec, const KinematicState& state) {
    if (spec.order() != 1)
        throw UnsupportedOrder("Hamilton formalism is defined for n = 1, got n = " +
                               std::to_string(spec.order()));
    return {state.position(), canonical_momentum(spec, state), state.velocity(),
            second_momentum(spec, state)};
}

HamiltonResiduals hamilton_residuals(const LagrangianSpec& spec, const KinematicState& state) {
    return hamilton_residuals(spec, state, canonical_vars(spec, state));
}

HamiltonResiduals hamilton_residuals(const LagrangianSpec& spec, const KinematicState& state,
                                     const CanonicalVars& vars) {
    if (spec.order() != 1)
        throw UnsupportedOrder("Hamilton formalism is defined for n = 1, got n = " +
                               std::to_string(spec.order()));
    const double k1 = spec.k(1);

    // dotted quantities from the chain; pdot is m a - k1 a''
    const FourVector xdot = state.deriv(1);
    const FourVector vdot = state.deriv(2);
    const FourVector pidot = spec.k(1) * state.deriv(3);
    const FourVector pdot = spec.m * state.deriv(2) - spec.k(1) * state.deriv(4);

    HamiltonResiduals r;
    r.dHdp_minus_xdot = vars.v - xdot;                        // dH/dp = v
    r.dHdx_plus_pdot = pdot;                                  // dH/dx = 0 (free)
    r.dHdpi_minus_vdot = vars.pi / k1 - vdot;                 // dH/dpi = pi/k1
    r.dHdv_plus_pidot = vars.p - spec.m * vars.v + pidot;     // dH/dv = p - m v
    return r;
}

}  // namespace zitterlab
