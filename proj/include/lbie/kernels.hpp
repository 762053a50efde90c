#pragma once

#include "lbie/types.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace lbie {

/// Laplace layer-potential kernels, G(x, y) = 1 / (4 pi |x - y|).
enum class KernelKind {
    Single,       ///< G
    Double,       ///< dG/dn_y
    SinglePrime,  ///< dG/dn_x
    DiffSum,      ///< d/dn_x (dG/dn_x + dG/dn_y), weakly singular on smooth surfaces
};

inline constexpr std::array<KernelKind, 4> kAllKernels = {
    KernelKind::Single, KernelKind::Double, KernelKind::SinglePrime, KernelKind::DiffSum};
inline constexpr int kNumKernels = 4;

const char* to_string(KernelKind kind);

/// All four kernels at one point pair, indexed by static_cast<int>(KernelKind).
/// No check for x == y: the caller owns the singularity.
template <typename Scalar>
std::array<Scalar, 4> eval_all_kernels(const Vec3<Scalar>& x, const Vec3<Scalar>& nx,
                                       const Vec3<Scalar>& y, const Vec3<Scalar>& ny)
{
    const Vec3<Scalar> R = x - y;
    const Scalar r2 = R.squaredNorm();
    const Scalar inv_r = Scalar(1) / std::sqrt(r2);
    const Scalar inv_r3 = inv_r / r2;
    const Scalar c = Scalar(1) / (Scalar(4) * std::numbers::pi_v<Scalar>);
    const Scalar nxR = nx.dot(R);
    const Scalar nyR = ny.dot(R);
    // n_x . n_y - 1 without cancellation for nearly parallel normals
    const Scalar dot_m1 = Scalar(-0.5) * (nx - ny).squaredNorm();
    const Scalar diff = (ny - nx).dot(R);
    return {c * inv_r,
            c * nyR * inv_r3,
            -c * nxR * inv_r3,
            c * inv_r3 * (dot_m1 - Scalar(3) * diff * nxR / r2)};
}

/// One kernel at x != y. Throws DomainError when the points coincide.
template <typename Scalar>
Scalar eval_kernel(KernelKind kind, const Vec3<Scalar>& x, const Vec3<Scalar>& nx,
                   const Vec3<Scalar>& y, const Vec3<Scalar>& ny)
{
    if ((x - y).squaredNorm() == Scalar(0)) throw DomainError("eval_kernel: coincident points");
    return eval_all_kernels(x, nx, y, ny)[static_cast<int>(kind)];
}

}  // namespace lbie
