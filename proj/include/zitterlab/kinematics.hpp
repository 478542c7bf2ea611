#pragma once

#include <utility>

#include "zitterlab/minkowski.hpp"

// Model-independent kinematics of spinning systems: split of the 4-velocity
// into the constant p/m part and the oscillating remainder, v^2
// classification, and the two v^2 identities used as consistency audits.

namespace zitterlab {

struct ZbwDecomposition {
    FourVector w_part;     // p/m, unit timelike
    FourVector v_part;     // v - p/m, spacelike, orthogonal to w_part
    ThreeVector drift_u;   // charge drift v/v0 - p/p0
    double times_ratio;    // v0 = dt/dtau
};

enum class MotionKind { Timelike, Lightlike, Spacelike };

struct MotionClass {
    MotionKind kind;
    double v2;
    double cmf_speed;  // |v*| = sqrt(1 - v^2)
};

inline const char* to_string(MotionKind k) {
    switch (k) {
        case MotionKind::Timelike: return "timelike";
        case MotionKind::Lightlike: return "lightlike";
        case MotionKind::Spacelike: return "spacelike";
    }
    return "?";
}

/// Splits v into p/m plus remainder, checking the mass-shell constraints
/// p^2 = m^2 and p.v = m first (ConstraintViolation names the failing one).
ZbwDecomposition decompose_velocity(const FourVector& v, const FourVector& p, double m);

/// Classifies v^2 against [-inf, 1]; v^2 > 1 + tol is rejected as
/// SuperunitaryV2 since no consistent state can produce it.
MotionClass classify_v2(const FourVector& v, double tol = 1e-9);

/// Residuals of v^2 = 1 + S'.S'/(2m^2) and v^2 = 1 + S'^{mu nu} p_mu v_nu / m^2,
/// where sdot is the proper-time derivative of the spin tensor.
std::pair<double, double> v2_identities_residual(const FourVector& v, const FourVector& p,
                                                 double m, const AntisymTensor& sdot);

}  // namespace zitterlab
