#include "zitterlab/integrator.hpp"

#include <cmath>
#include <string>

namespace zitterlab {

namespace {

// x(2n+2) from the equation of motion: the sum over i < n of (-1)^i k_i x(2i+2),
// moved across (-1)^n k_n. Empty sum (n = 0) forces a = 0.
FourVector closure_top(const LagrangianSpec& spec, const std::vector<FourVector>& chain) {
    const int n = spec.order();
    FourVector acc{};
    double sign = 1.0;
    for (int i = 0; i < n; ++i, sign = -sign)
        acc = acc + sign * spec.k(i) * chain[static_cast<size_t>(2 * i + 2)];
    const double lead = (n % 2 == 0 ? 1.0 : -1.0) * spec.k(n);  // (-1)^n k_n
    if (n == 0) return FourVector{};
    return acc * (-1.0 / lead);
}

struct FlatState {
    std::vector<double> q;  // 4*(2n+2) doubles, blocks of 4 per derivative

    static FlatState from_chain(const KinematicState& init, int blocks) {
        FlatState f;
        f.q.resize(static_cast<size_t>(4 * blocks));
        for (int b = 0; b < blocks; ++b) {
            const FourVector& d = init.deriv(b);
            f.q[static_cast<size_t>(4 * b) + 0] = d.t;
            f.q[static_cast<size_t>(4 * b) + 1] = d.x;
            f.q[static_cast<size_t>(4 * b) + 2] = d.y;
            f.q[static_cast<size_t>(4 * b) + 3] = d.z;
        }
        return f;
    }

    FourVector block(int b) const {
        return {q[static_cast<size_t>(4 * b) + 0], q[static_cast<size_t>(4 * b) + 1],
                q[static_cast<size_t>(4 * b) + 2], q[static_cast<size_t>(4 * b) + 3]};
    }
};

std::vector<FourVector> to_chain(const FlatState& f, int blocks) {
    std::vector<FourVector> chain(static_cast<size_t>(blocks));
    for (int b = 0; b < blocks; ++b) chain[static_cast<size_t>(b)] = f.block(b);
    return chain;
}

void derivative(const LagrangianSpec& spec, const std::vector<double>& q,
                std::vector<double>& dq) {
    const size_t dim = q.size();
    const int blocks = static_cast<int>(dim / 4);
    // shift: d/dtau of block b is block b+1
    for (size_t i = 0; i + 4 < dim; ++i) dq[i] = q[i + 4];
    // top block from the closure
    std::vector<FourVector> chain(static_cast<size_t>(blocks) + 1);
    for (int b = 0; b < blocks; ++b)
        chain[static_cast<size_t>(b)] = {q[static_cast<size_t>(4 * b)], q[static_cast<size_t>(4 * b) + 1],
                                         q[static_cast<size_t>(4 * b) + 2], q[static_cast<size_t>(4 * b) + 3]};
    const FourVector top = closure_top(spec, chain);
    dq[dim - 4] = top.t;
    dq[dim - 3] = top.x;
    dq[dim - 2] = top.y;
    dq[dim - 1] = top.z;
}

bool state_ok(const std::vector<double>& q) {
    for (double v : q)
        if (!std::isfinite(v) || std::fabs(v) > 1e12) return false;
    return true;
}

KinematicState make_sample(const LagrangianSpec& spec, double tau, const FlatState& f, int blocks) {
    std::vector<FourVector> chain = to_chain(f, blocks);
    chain.push_back(closure_top(spec, chain));
    return KinematicState(tau, std::move(chain));
}

}  // namespace

int reduce_order(const LagrangianSpec& spec) {
    if (spec.order() > 0 && spec.k(spec.order()) == 0.0)
        throw DegenerateLeadingCoefficient("k_" + std::to_string(spec.order()) +
                                           " = 0; the system is not of order " +
                                           std::to_string(spec.order()));
    return 4 * (2 * spec.order() + 2);
}

Trajectory integrate(const LagrangianSpec& spec, const KinematicState& init, double tau_end,
                     double dtau) {
    const int blocks = reduce_order(spec) / 4;
    if (!(dtau > 0.0)) throw ConfigParseError("dtau must be positive");
    if (!(tau_end > init.tau)) throw ConfigParseError("tau_end must exceed the initial tau");

    const long nsteps = std::lround((tau_end - init.tau) / dtau);

    FlatState f = FlatState::from_chain(init, blocks);
    const size_t dim = f.q.size();
    std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

    Trajectory traj{spec, dtau, {}};
    traj.samples.reserve(static_cast<size_t>(nsteps) + 1);
    traj.samples.push_back(make_sample(spec, init.tau, f, blocks));

    for (long step = 0; step < nsteps; ++step) {
        derivative(spec, f.q, k1);
        for (size_t i = 0; i < dim; ++i) tmp[i] = f.q[i] + 0.5 * dtau * k1[i];
        derivative(spec, tmp, k2);
        for (size_t i = 0; i < dim; ++i) tmp[i] = f.q[i] + 0.5 * dtau * k2[i];
        derivative(spec, tmp, k3);
        for (size_t i = 0; i < dim; ++i) tmp[i] = f.q[i] + dtau * k3[i];
        derivative(spec, tmp, k4);
        for (size_t i = 0; i < dim; ++i)
            f.q[i] += dtau * (1.0 / 6.0) * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);

        const double tau = init.tau + static_cast<double>(step + 1) * dtau;
        if (!state_ok(f.q))
            throw NonFiniteState("state diverged at tau = " + num_str(tau));
        traj.samples.push_back(make_sample(spec, tau, f, blocks));
    }
    return traj;
}

ConservationReport conservation_report(const Trajectory& traj) {
    if (traj.samples.empty()) throw ConfigParseError("empty trajectory");
    const LagrangianSpec& spec = traj.spec;
    const double m = spec.m;

    ConservationReport rep;
    rep.h_skipped = spec.order() > 2;
    rep.j_skipped = spec.order() > 3;

    const FourVector p0 = canonical_momentum(spec, traj.samples.front());
    const double pden = std::max(1.0, p0.max_abs());
    AntisymTensor j0{};
    double jden = 1.0;
    if (!rep.j_skipped) {
        j0 = total_angular_momentum(spec, traj.samples.front());
        jden = std::max(1.0, j0.max_abs());
    }
    double h0 = 0.0;
    if (!rep.h_skipped) h0 = hamiltonian(spec, traj.samples.front());
    const double hden = std::max(1.0, std::fabs(h0));

    for (const KinematicState& s : traj.samples) {
        const FourVector p = canonical_momentum(spec, s);
        rep.p_drift = std::max(rep.p_drift, (p - p0).max_abs() / pden);
        if (!rep.j_skipped) {
            const AntisymTensor j = total_angular_momentum(spec, s);
            rep.j_drift = std::max(rep.j_drift, (j - j0).max_abs() / jden);
        }
        if (!rep.h_skipped)
            rep.h_drift = std::max(rep.h_drift, std::fabs(hamiltonian(spec, s) - h0) / hden);

        const FourVector& v = s.velocity();
        const double pv = minkowski_dot(p, v);
        const double pp = minkowski_dot(p, p);
        rep.max_h1 = std::max(rep.max_h1, std::fabs(pp - m * m));
        rep.max_h2 = std::max(rep.max_h2, std::fabs(pv - m));
        rep.max_orto = std::max(rep.max_orto, std::fabs(pv / m - pp / (m * m)));
    }
    return rep;
}

}  // namespace zitterlab
