#include "zitterlab/cronon.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace zitterlab {

namespace {

using Mat4 = std::array<std::array<double, 4>, 4>;
using Vec4 = std::array<double, 4>;

// Gaussian elimination with partial pivoting; returns false on a zero pivot.
bool solve4(Mat4 a, Vec4 rhs, Vec4& out) {
    int perm[4] = {0, 1, 2, 3};
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::fabs(a[perm[r]][col]) > std::fabs(a[perm[piv]][col])) piv = r;
        std::swap(perm[col], perm[piv]);
        const double d = a[perm[col]][col];
        if (d == 0.0) return false;
        for (int r = col + 1; r < 4; ++r) {
            const double f = a[perm[r]][col] / d;
            if (f == 0.0) continue;
            for (int c = col; c < 4; ++c) a[perm[r]][c] -= f * a[perm[col]][c];
            rhs[perm[r]] -= f * rhs[perm[col]];
        }
    }
    for (int col = 3; col >= 0; --col) {
        double acc = rhs[perm[col]];
        for (int c = col + 1; c < 4; ++c) acc -= a[perm[col]][c] * out[c];
        out[col] = acc / a[perm[col]][col];
    }
    return true;
}

double norm_inf(const Mat4& a) {
    double n = 0.0;
    for (const auto& row : a) {
        double s = 0.0;
        for (double v : row) s += std::fabs(v);
        n = std::max(n, s);
    }
    return n;
}

// Condition estimate from the explicit inverse (fine at 4x4 scale).
double cond_inf(const Mat4& a) {
    Mat4 inv{};
    for (int c = 0; c < 4; ++c) {
        Vec4 e{}, x{};
        e[c] = 1.0;
        if (!solve4(a, e, x)) return std::numeric_limits<double>::infinity();
        for (int r = 0; r < 4; ++r) inv[r][c] = x[r];
    }
    return norm_inf(a) * norm_inf(inv);
}

Vec4 to_vec(const FourVector& v) { return {v.t, v.x, v.y, v.z}; }
FourVector from_vec(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }

}  // namespace

double cronon_coefficient(double m, double T, int i) {
    double value = m;
    // T^{2i} / (2i+1)! accumulated pairwise to stay in range
    for (int j = 1; j <= i; ++j)
        value *= T * T / (static_cast<double>(2 * j) * static_cast<double>(2 * j + 1));
    return (i % 2 == 0) ? value : -value;
}

Mat4 fd_matrix(const FourVector& v) {
    const Vec4 vc = to_vec(v);
    const Vec4 vl = to_vec(lower(v));
    Mat4 mat{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) mat[r][c] = (r == c ? 1.0 : 0.0) + vc[r] * vl[c];
    return mat;
}

FourVector fd_step(const CrononParams& params, const FourVector& v_prev,
                   const FourVector& v_curr) {
    const Mat4 mat = fd_matrix(v_curr);
    if (cond_inf(mat) > 1e12)
        throw SingularSystem("step matrix condition exceeds 1e12 at v = (" +
                             num_str(v_curr.t) + "," + num_str(v_curr.x) + "," +
                             num_str(v_curr.y) + "," + num_str(v_curr.z) + ")");

    const FourVector force = contract_right(params.field, v_curr);
    const Vec4 rhs = to_vec(force * (2.0 * params.T * params.e / params.m));
    Vec4 delta{};
    solve4(mat, rhs, delta);
    return v_prev + from_vec(delta);
}

FourVector euler_lorentz_seed(const CrononParams& params, const FourVector& v0) {
    return v0 - contract_right(params.field, v0) * (params.T * params.e / params.m);
}

std::vector<FourVector> simulate_cronon(const CrononParams& params, const FourVector& v_prev,
                                        const FourVector& v_curr, int steps) {
    std::vector<FourVector> seq;
    seq.reserve(static_cast<size_t>(steps) + 1);
    seq.push_back(v_curr);
    FourVector prev = v_prev;
    FourVector curr = v_curr;
    for (int k = 0; k < steps; ++k) {
        FourVector next = fd_step(params, prev, curr);
        if (!next.finite())
            throw NonFiniteState("recurrence diverged at step " + std::to_string(k + 1));
        prev = curr;
        curr = next;
        seq.push_back(curr);
    }
    return seq;
}

AntisymTensor field_from_eb(const ThreeVector& efield, const ThreeVector& bfield) {
    AntisymTensor f;
    // F^{0i} = -E_i, F^{ij} = -eps_ijk B_k
    f.s01 = -efield.x;
    f.s02 = -efield.y;
    f.s03 = -efield.z;
    f.s23 = -bfield.x;
    f.s31 = -bfield.y;
    f.s12 = -bfield.z;
    return f;
}

}  // namespace zitterlab
