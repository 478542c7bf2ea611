#include "zitterlab/kinematics.hpp"

#include <string>

namespace zitterlab {

ZbwDecomposition decompose_velocity(const FourVector& v, const FourVector& p, double m) {
    if (!(m > 0.0)) throw ConstraintViolation("mass must be positive, got " + num_str(m));

    const double h1 = minkowski_dot(p, p) - m * m;
    if (std::fabs(h1) > 1e-8 * std::max(1.0, m * m))
        throw ConstraintViolation("H1 violated: p.p - m^2 = " + num_str(h1));
    const double h2 = minkowski_dot(p, v) - m;
    if (std::fabs(h2) > 1e-8 * std::max(1.0, m))
        throw ConstraintViolation("H2 violated: p.v - m = " + num_str(h2));

    ZbwDecomposition d;
    d.w_part = p / m;
    d.v_part = v - d.w_part;
    d.times_ratio = v.t;
    d.drift_u = v.spatial() * (1.0 / v.t) - p.spatial() * (1.0 / p.t);
    return d;
}

MotionClass classify_v2(const FourVector& v, double tol) {
    const double v2 = minkowski_dot(v, v);
    if (v2 > 1.0 + tol)
        throw SuperunitaryV2("v^2 = " + num_str(v2) +
                             " exceeds 1; inconsistent input state");
    MotionClass c;
    c.v2 = v2;
    c.cmf_speed = std::sqrt(std::max(0.0, 1.0 - v2));
    if (std::fabs(v2) <= tol)
        c.kind = MotionKind::Lightlike;
    else if (v2 > 0.0)
        c.kind = MotionKind::Timelike;
    else
        c.kind = MotionKind::Spacelike;
    return c;
}

std::pair<double, double> v2_identities_residual(const FourVector& v, const FourVector& p,
                                                 double m, const AntisymTensor& sdot) {
    const double v2 = minkowski_dot(v, v);
    const double r1 = v2 - (1.0 + double_contraction(sdot, sdot) / (2.0 * m * m));
    // S'^{mu nu} p_mu v_nu = p . (S' v)
    const double mixed = minkowski_dot(p, contract_right(sdot, v));
    const double r2 = v2 - (1.0 + mixed / (m * m));
    return {r1, r2};
}

}  // namespace zitterlab
