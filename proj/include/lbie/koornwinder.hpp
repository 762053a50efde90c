#pragma once

#include "lbie/types.hpp"

namespace lbie {

/// Number of polynomials of total degree <= p in two variables.
constexpr int n_pol(int p) { return (p + 1) * (p + 2) / 2; }

/// Values and derivatives of all orthonormal Koornwinder polynomials of
/// degree <= p at one point of the reference triangle. Entry l corresponds
/// to the pair (m, n) returned by koornwinder_index(p, l).
struct KoornwinderJet {
    VectorXd value, du, dv, duu, duv, dvv;
};

/// Degree pair (m, n) of the l-th basis function; ordering is by total degree
/// m + n, then by decreasing m.
std::pair<int, int> koornwinder_index(int l);

/// Orthonormal basis on {u, v >= 0, u + v <= 1}:
///   K_mn = c_mn P_m(2u/(1-v) - 1) (1-v)^m P_n^{(2m+1,0)}(2v - 1),
/// evaluated through polynomial recurrences in (u, v) with no division, so
/// the vertex (0, 1) is handled like any other point.
VectorXd koornwinder(int p, double u, double v);

/// As koornwinder(), with first derivatives (second derivatives left empty)
/// unless `second` is set.
KoornwinderJet koornwinder_jet(int p, double u, double v, bool second = false);

/// Values at many points: result(q, l) = K_l(points(:, q)).
MatrixXd koornwinder_matrix(int p, const Eigen::Ref<const Eigen::Matrix2Xd>& points);

}  // namespace lbie
