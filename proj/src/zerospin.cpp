#include "zitterlab/zerospin.hpp"

#include <cmath>
#include <string>

namespace zitterlab {

void require_valid(const LinearOscParams& params, double tol) {
    if (!(params.m > 0.0))
        throw InvalidParams("mass must be positive, got " + num_str(params.m));
    if (!(params.k1 < 0.0))
        throw InvalidParams("k1 must be negative for an oscillatory mode, got " +
                            num_str(params.k1));
    const double h1 = minkowski_dot(params.p, params.p) - params.m * params.m;
    if (std::fabs(h1) > tol)
        throw InvalidParams("p.p - m^2 = " + num_str(h1));
    const double pf = minkowski_dot(params.p, params.amp_f);
    if (std::fabs(pf) > tol) throw InvalidParams("p.F = " + num_str(pf));
}

KinematicState linear_state_at(const LinearOscParams& params, double tau, int depth) {
    require_valid(params);
    const double w = params.omega();
    const double theta = w * tau + params.phase;
    const double c = std::cos(theta);
    const double s = std::sin(theta);

    std::vector<FourVector> chain;
    chain.reserve(static_cast<size_t>(depth) + 1);
    chain.push_back((params.p / params.m) * tau + params.amp_f * (s / w));

    // x(k) = F (ck cos + sk sin) (+ p/m at k = 1); (ck,sk) -> (w sk, -w ck)
    double ck = 1.0, sk = 0.0;
    for (int k = 1; k <= depth; ++k) {
        FourVector d = params.amp_f * (ck * c + sk * s);
        if (k == 1) d = d + params.p / params.m;
        chain.push_back(d);
        const double nck = w * sk;
        const double nsk = -w * ck;
        ck = nck;
        sk = nsk;
    }
    return KinematicState(tau, std::move(chain));
}

ThreeVector cmf_spin(const LinearOscParams& params, double tau) {
    require_valid(params);
    (void)tau;
    // v* and a* are both multiples of F, so k1 (v* x a*) vanishes identically.
    return ThreeVector{};
}

ThreeVector boosted_spin(const LinearOscParams& params, const BoostVelocity& w, double tau) {
    const KinematicState cmf = linear_state_at(params, tau, 2);
    const ThreeVector v = boost_apply(w, cmf.velocity()).spatial();
    const ThreeVector a = boost_apply(w, cmf.acceleration()).spatial();
    return cross(v, a) * params.k1;
}

HelicityCheck helicity_zero_check(const LinearOscParams& params, const BoostVelocity& w,
                                  int samples) {
    require_valid(params);
    const FourVector p = boost_apply(w, params.p);
    const ThreeVector pv = p.spatial();
    const double period = 2.0 * M_PI / params.omega();

    HelicityCheck out{std::nullopt, 0.0};
    double worst = 0.0;
    bool any = false;
    for (int i = 0; i < samples; ++i) {
        const double tau = period * static_cast<double>(i) / static_cast<double>(samples);
        const KinematicState cmf = linear_state_at(params, tau, 2);
        const FourVector v = boost_apply(w, cmf.velocity());
        const FourVector a = boost_apply(w, cmf.acceleration());
        const AntisymTensor S = wedge_over(v, a, params.k1);
        const ThreeVector s = S.axial_part();
        const ThreeVector k = S.boost_part();

        // W = (s.p ; p0 s - p x k)
        const FourVector W = make_four(s.dot(pv), p.t * s - cross(pv, k));
        out.max_w_component = std::max(out.max_w_component, W.max_abs());

        if (pv.norm() > 1e-12 && s.norm() > 1e-12) {
            worst = std::max(worst, std::fabs(s.dot(pv)) / (s.norm() * pv.norm()));
            any = true;
        }
    }
    if (any) out.max_helicity = worst;
    return out;
}

MeanSpinSquared mean_spin_squared(const LinearOscParams& params, const BoostVelocity& w) {
    require_valid(params);
    const double omega = params.omega();
    const FourVector p = boost_apply(w, params.p);
    const ThreeVector pv = p.spatial();

    // F component orthogonal to the boost (untouched by it)
    const ThreeVector f = params.amp_f.spatial();
    ThreeVector f_perp = f;
    if (w.vec().norm() > 0.0) {
        const ThreeVector what = w.vec() * (1.0 / w.vec().norm());
        f_perp = f - what * f.dot(what);
    }
    const double cross_sq = cross(f_perp, pv).norm_sq();

    return {cross_sq / (2.0 * omega * omega), cross_sq / (2.0 * omega)};
}

}  // namespace zitterlab
