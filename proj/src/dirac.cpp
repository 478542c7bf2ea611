#include "zitterlab/dirac.hpp"

#include <cmath>
#include <string>

namespace zitterlab {

namespace {

// Largest |V_perp| over a cycle for V(tau) = e cos + h sin: square root of the
// top eigenvalue of the 2x2 Gram matrix of (e, h).
double max_ellipse_radius(const ThreeVector& e, const ThreeVector& h) {
    const double a = e.norm_sq();
    const double b = e.dot(h);
    const double c = h.norm_sq();
    const double disc = std::sqrt(std::max(0.0, (a - c) * (a - c) / 4.0 + b * b));
    return std::sqrt(std::max(0.0, (a + c) / 2.0 + disc));
}

}  // namespace

DiracParams DiracParams::canonical(double mass) {
    DiracParams d;
    d.m = mass;
    d.p = {mass, 0.0, 0.0, 0.0};
    d.amp_e = {0.0, 1.0, 0.0, 0.0};
    d.amp_h = {0.0, 0.0, 1.0, 0.0};
    d.x0 = {};
    return d;
}

std::vector<ConstraintResidual> validate(const DiracParams& params) {
    const ThreeVector w = params.cm_velocity();
    return {
        {"p.p - m^2", minkowski_dot(params.p, params.p) - params.m * params.m},
        {"p.E", minkowski_dot(params.p, params.amp_e)},
        {"p.H", minkowski_dot(params.p, params.amp_h)},
        {"E0 - w.E", params.amp_e.t - w.dot(params.amp_e.spatial())},
        {"H0 - w.H", params.amp_h.t - w.dot(params.amp_h.spatial())},
    };
}

double max_constraint_residual(const DiracParams& params) {
    double worst = 0.0;
    for (const auto& r : validate(params)) worst = std::max(worst, std::fabs(r.value));
    return worst;
}

void require_valid(const DiracParams& params, double tol) {
    if (!(params.m > 0.0))
        throw InvalidParams("mass must be positive, got " + num_str(params.m));
    if (!(params.p.t > 0.0))
        throw InvalidParams("p0 must be positive, got " + num_str(params.p.t));
    for (const auto& r : validate(params))
        if (std::fabs(r.value) > tol)
            throw InvalidParams(std::string(r.name) + " = " + num_str(r.value) +
                                " exceeds tolerance " + num_str(tol));
}

KinematicState state_at(const DiracParams& params, double tau, int depth) {
    const double w = params.omega();
    const double theta = w * tau;
    const double c = std::cos(theta);
    const double s = std::sin(theta);

    std::vector<FourVector> chain;
    chain.reserve(static_cast<size_t>(depth) + 1);

    // x = x0 + (p/m) tau - (H/2m) cos + (E/2m) sin
    chain.push_back(params.x0 + (params.p / params.m) * tau +
                    (params.amp_e * s - params.amp_h * c) / w);

    // x(k) = A cos + B sin (+ p/m at k = 1), with (A,B) -> (w B, -w A)
    FourVector A = params.amp_e;
    FourVector B = params.amp_h;
    for (int k = 1; k <= depth; ++k) {
        FourVector d = A * c + B * s;
        if (k == 1) d = d + params.p / params.m;
        chain.push_back(d);
        const FourVector nextA = B * w;
        const FourVector nextB = A * (-w);
        A = nextA;
        B = nextB;
    }
    return KinematicState(tau, std::move(chain));
}

DiracParams boost_params(const DiracParams& params, const BoostVelocity& boost) {
    DiracParams out = params;
    out.p = boost_apply(boost, params.p);
    out.amp_e = boost_apply(boost, params.amp_e);
    out.amp_h = boost_apply(boost, params.amp_h);
    out.x0 = boost_apply(boost, params.x0);
    return out;
}

double spin_half_residual(const DiracParams& params, double tol) {
    require_valid(params, tol);
    const BoostVelocity to_cmf(-params.cm_velocity());
    const ThreeVector e = boost_apply(to_cmf, params.amp_e).spatial();
    const ThreeVector h = boost_apply(to_cmf, params.amp_h).spatial();
    const double eh = e.dot(h);
    return e.norm_sq() * h.norm_sq() - eh * eh - 1.0;
}

std::optional<ConstantV2Info> constant_v2_info(const DiracParams& params, double tol) {
    require_valid(params, tol);
    const double e2 = minkowski_dot(params.amp_e, params.amp_e);
    const double h2 = minkowski_dot(params.amp_h, params.amp_h);
    const double eh = minkowski_dot(params.amp_e, params.amp_h);
    if (std::fabs(eh) > tol || std::fabs(e2 - h2) > tol) return std::nullopt;

    ConstantV2Info info;
    info.v2 = 1.0 + e2;
    info.cmf_speed = std::sqrt(std::max(0.0, -e2));
    info.radius = info.cmf_speed / params.omega();
    return info;
}

double times_ratio(const DiracParams& params, double tau, double tol) {
    require_valid(params, tol);
    const ThreeVector w = params.cm_velocity();
    return params.p.t / params.m + w.dot(params.amp_e.spatial()) * std::cos(params.omega() * tau) +
           w.dot(params.amp_h.spatial()) * std::sin(params.omega() * tau);
}

double times_ratio_mean(const DiracParams& params) { return params.p.t / params.m; }

double times_ratio_between(const DiracParams& params, const BoostVelocity& frame1,
                           const BoostVelocity& frame2, double tau, double tol) {
    const DiracParams p1 = boost_params(params, frame1);
    const DiracParams p2 = boost_params(params, frame2);
    return times_ratio(p1, tau, tol) / times_ratio(p2, tau, tol);
}

PauliLubanski pauli_lubanski(const DiracParams& params, double tol) {
    require_valid(params, tol);
    const ThreeVector pe = params.amp_e.spatial();
    const ThreeVector ph = params.amp_h.spatial();
    const ThreeVector pv = params.p.spatial();
    const ThreeVector hxe = cross(ph, pe);

    PauliLubanski out;
    out.w = make_four(0.5 * pv.dot(hxe),
                      0.5 * (params.p.t * hxe + params.amp_h.t * cross(pe, pv) +
                             params.amp_e.t * cross(pv, ph)));
    out.w_sq = minkowski_dot(out.w, out.w);

    // helicity: spin projection on p over the invariant |s*| = sqrt(-W^2)/m
    const double s_star = std::sqrt(std::max(0.0, -out.w_sq)) / params.m;
    const double p_norm = pv.norm();
    if (p_norm > tol && s_star > tol)
        out.helicity = out.w.t / (p_norm * s_star);
    return out;
}

PolarizationInfo polarization_info(const DiracParams& params, double tol) {
    require_valid(params, tol);
    const ThreeVector pv = params.p.spatial();
    const ThreeVector w = params.cm_velocity();
    const ThreeVector e = params.amp_e.spatial();
    const ThreeVector h = params.amp_h.spatial();

    PolarizationInfo info;
    const double scale = std::max(1.0, std::max(e.norm(), h.norm()));
    if (pv.norm() <= tol) {
        // CMF: V0 = 0 identically and the whole oscillation is transverse
        info.is_standard_frame = true;
        info.longitudinal_amp = 0.0;
        info.transverse_amp = max_ellipse_radius(e, h);
    } else {
        const ThreeVector phat = pv * (1.0 / pv.norm());
        info.is_standard_frame = std::fabs(w.dot(e)) <= tol * scale &&
                                 std::fabs(w.dot(h)) <= tol * scale;
        const double le = e.dot(phat);
        const double lh = h.dot(phat);
        info.longitudinal_amp = std::hypot(le, lh);
        info.transverse_amp = max_ellipse_radius(e - phat * le, h - phat * lh);
    }
    info.helicity = pauli_lubanski(params, tol).helicity;
    return info;
}

ThreeVector mean_boost_vector(const DiracParams& params, double tol) {
    require_valid(params, tol);
    return (params.amp_e.spatial() * params.amp_h.t - params.amp_h.spatial() * params.amp_e.t) *
           0.5;
}

ThreeVector dipole_cmf(const DiracParams& params, double charge, double tau, double tol) {
    require_valid(params, tol);
    const DiracParams cmf = boost_params(params, BoostVelocity(-params.cm_velocity()));
    const ThreeVector a_star = state_at(cmf, tau, 2).acceleration().spatial();
    return a_star * (-charge / (4.0 * params.m * params.m));
}

SdotTimesP sdot_times_p(const DiracParams& params, double tau, double tol) {
    require_valid(params, tol);
    const KinematicState st = state_at(params, tau, 4);
    const FourVector& v = st.deriv(1);
    const FourVector& a = st.deriv(2);
    const FourVector& adot = st.deriv(3);
    const FourVector& addot = st.deriv(4);
    const double m = params.m;

    // S = (a ^ v)/4m, so S' = (a' ^ v)/4m and S'' = (a'' ^ v + a' ^ a)/4m
    const AntisymTensor sdot = wedge_over(adot, v, 0.25 / m);
    const AntisymTensor sddot =
        wedge_over(addot, v, 0.25 / m) + wedge_over(adot, a, 0.25 / m);

    SdotTimesP out;
    out.value = contract_right(sdot, params.p);
    out.dos_residual = (out.value - adot * 0.25).max_abs();
    out.inertia_residual = (a + contract_right(sddot, params.p) / (m * m)).max_abs();
    return out;
}

}  // namespace zitterlab
