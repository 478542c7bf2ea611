#pragma once

#include <cmath>
#include <string>

#include "zitterlab/errors.hpp"

// Minkowski 4-vector / antisymmetric-tensor algebra with metric (+,-,-,-).
// Index convention is (t,x,y,z); lowering an index flips the sign of the
// space components. Everything here is pure value arithmetic.

namespace zitterlab {

struct ThreeVector {
    double x = 0.0, y = 0.0, z = 0.0;

    ThreeVector operator+(const ThreeVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
    ThreeVector operator-(const ThreeVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
    ThreeVector operator-() const { return {-x, -y, -z}; }
    ThreeVector operator*(double s) const { return {x * s, y * s, z * s}; }

    double dot(const ThreeVector& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm_sq() const { return dot(*this); }
    double norm() const { return std::sqrt(norm_sq()); }
    double max_abs() const { return std::max({std::fabs(x), std::fabs(y), std::fabs(z)}); }
};

inline ThreeVector operator*(double s, const ThreeVector& v) { return v * s; }

/// Right-handed cross product.
inline ThreeVector cross(const ThreeVector& u, const ThreeVector& v) {
    return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

struct FourVector {
    double t = 0.0, x = 0.0, y = 0.0, z = 0.0;

    FourVector operator+(const FourVector& o) const { return {t + o.t, x + o.x, y + o.y, z + o.z}; }
    FourVector operator-(const FourVector& o) const { return {t - o.t, x - o.x, y - o.y, z - o.z}; }
    FourVector operator-() const { return {-t, -x, -y, -z}; }
    FourVector operator*(double s) const { return {t * s, x * s, y * s, z * s}; }
    FourVector operator/(double s) const { return {t / s, x / s, y / s, z / s}; }

    ThreeVector spatial() const { return {x, y, z}; }
    double max_abs() const { return std::max({std::fabs(t), std::fabs(x), std::fabs(y), std::fabs(z)}); }
    bool finite() const {
        return std::isfinite(t) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline FourVector operator*(double s, const FourVector& v) { return v * s; }

inline FourVector make_four(double t, const ThreeVector& r) { return {t, r.x, r.y, r.z}; }

/// a.b = a0*b0 - a.b (metric +,-,-,-).
inline double minkowski_dot(const FourVector& a, const FourVector& b) {
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

/// Index lowering: g = diag(+1,-1,-1,-1).
inline FourVector lower(const FourVector& a) { return {a.t, -a.x, -a.y, -a.z}; }

/// Rank-2 antisymmetric tensor, stored as the six independent contravariant
/// components in the order (01,02,03,23,31,12). The (23,31,12) triple is the
/// axial part (spin vector slots), the (01,02,03) triple the boost generator.
struct AntisymTensor {
    double s01 = 0.0, s02 = 0.0, s03 = 0.0;
    double s23 = 0.0, s31 = 0.0, s12 = 0.0;

    /// Signed component T^{mu nu}; component(nu,mu) == -component(mu,nu).
    double component(int mu, int nu) const {
        if (mu == nu) return 0.0;
        if (mu > nu) return -component(nu, mu);
        switch (mu * 10 + nu) {
            case 1: return s01;
            case 2: return s02;
            case 3: return s03;
            case 12: return s12;
            case 13: return -s31;  // T^{13} = -T^{31}
            case 23: return s23;
        }
        return 0.0;
    }

    ThreeVector axial_part() const { return {s23, s31, s12}; }
    ThreeVector boost_part() const { return {s01, s02, s03}; }

    AntisymTensor operator+(const AntisymTensor& o) const {
        return {s01 + o.s01, s02 + o.s02, s03 + o.s03, s23 + o.s23, s31 + o.s31, s12 + o.s12};
    }
    AntisymTensor operator-(const AntisymTensor& o) const {
        return {s01 - o.s01, s02 - o.s02, s03 - o.s03, s23 - o.s23, s31 - o.s31, s12 - o.s12};
    }
    AntisymTensor operator*(double s) const {
        return {s01 * s, s02 * s, s03 * s, s23 * s, s31 * s, s12 * s};
    }
    double max_abs() const {
        return std::max({std::fabs(s01), std::fabs(s02), std::fabs(s03),
                         std::fabs(s23), std::fabs(s31), std::fabs(s12)});
    }
};

/// scale * (a^mu b^nu - a^nu b^mu).
inline AntisymTensor wedge_over(const FourVector& a, const FourVector& b, double scale) {
    AntisymTensor w;
    w.s01 = scale * (a.t * b.x - a.x * b.t);
    w.s02 = scale * (a.t * b.y - a.y * b.t);
    w.s03 = scale * (a.t * b.z - a.z * b.t);
    w.s23 = scale * (a.y * b.z - a.z * b.y);
    w.s31 = scale * (a.z * b.x - a.x * b.z);
    w.s12 = scale * (a.x * b.y - a.y * b.x);
    return w;
}

/// X^mu = T^{mu nu} b_nu.
inline FourVector contract_right(const AntisymTensor& T, const FourVector& b) {
    FourVector x;
    x.t = -(T.s01 * b.x + T.s02 * b.y + T.s03 * b.z);
    x.x = -T.s01 * b.t - T.s12 * b.y + T.s31 * b.z;
    x.y = -T.s02 * b.t + T.s12 * b.x - T.s23 * b.z;
    x.z = -T.s03 * b.t - T.s31 * b.x + T.s23 * b.y;
    return x;
}

/// S^{mu nu} T_{mu nu}.
inline double double_contraction(const AntisymTensor& S, const AntisymTensor& T) {
    return 2.0 * (S.s23 * T.s23 + S.s31 * T.s31 + S.s12 * T.s12
                  - S.s01 * T.s01 - S.s02 * T.s02 - S.s03 * T.s03);
}

/// Subluminal frame velocity. The constructor enforces |w| < 1.
class BoostVelocity {
public:
    BoostVelocity() = default;
    explicit BoostVelocity(const ThreeVector& w) : w_(w) {
        if (!(w.norm_sq() < 1.0))
            throw ConstraintViolation("boost speed |w| = " + num_str(w.norm()) +
                                      " must be strictly below 1");
    }

    const ThreeVector& vec() const { return w_; }
    double speed_sq() const { return w_.norm_sq(); }
    double gamma() const { return 1.0 / std::sqrt(1.0 - speed_sq()); }
    BoostVelocity inverse() const { return BoostVelocity(-w_); }

private:
    ThreeVector w_;
};

/// Lorentz boost of a 4-vector. A CMF quantity boosted by w lands in the
/// frame where the center of mass moves with velocity +w. (gamma-1)/w^2 is
/// evaluated as gamma^2/(gamma+1) so w -> 0 is exact.
inline FourVector boost_apply(const BoostVelocity& w, const FourVector& a) {
    const ThreeVector wv = w.vec();
    const double g = w.gamma();
    const double wr = wv.dot(a.spatial());
    const double tp = g * (a.t + wr);
    const ThreeVector rp = a.spatial() + wv * (g * g / (g + 1.0) * wr + g * a.t);
    return make_four(tp, rp);
}

}  // namespace zitterlab
