#include "lbie/koornwinder.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace lbie {

std::pair<int, int> koornwinder_index(int l)
{
    int d = 0;
    while (n_pol(d) <= l) ++d;
    const int first = d == 0 ? 0 : n_pol(d - 1);
    const int m = d - (l - first);
    return {m, d - m};
}

namespace {

// Value with first and second partial derivatives in (u, v).
struct Poly2 {
    double f = 0, fu = 0, fv = 0, fuu = 0, fuv = 0, fvv = 0;
};

// Q_m(u, v) = P_m(a) (1 - v)^m for m = 0..p, with a = 2u/(1-v) - 1, from
//   Q_{m+1} = (2m+1)/(m+1) t Q_m - m/(m+1) s Q_{m-1},  t = 2u - 1 + v, s = (1-v)^2.
void scaled_legendre(int p, double u, double v, std::vector<Poly2>& q)
{
    q.assign(p + 1, Poly2{});
    q[0].f = 1.0;
    if (p == 0) return;
    const double t = 2.0 * u - 1.0 + v;
    const double s = (1.0 - v) * (1.0 - v);
    const double sv = -2.0 * (1.0 - v);
    q[1] = Poly2{t, 2.0, 1.0, 0.0, 0.0, 0.0};
    for (int m = 1; m < p; ++m) {
        const double a = (2.0 * m + 1.0) / (m + 1.0);
        const double b = static_cast<double>(m) / (m + 1.0);
        const Poly2& q1 = q[m];
        const Poly2& q0 = q[m - 1];
        Poly2& r = q[m + 1];
        r.f = a * t * q1.f - b * s * q0.f;
        r.fu = a * (2.0 * q1.f + t * q1.fu) - b * s * q0.fu;
        r.fv = a * (q1.f + t * q1.fv) - b * (sv * q0.f + s * q0.fv);
        r.fuu = a * (4.0 * q1.fu + t * q1.fuu) - b * s * q0.fuu;
        r.fuv = a * (2.0 * q1.fv + q1.fu + t * q1.fuv) - b * (sv * q0.fu + s * q0.fuv);
        r.fvv = a * (2.0 * q1.fv + t * q1.fvv) - b * (2.0 * q0.f + 2.0 * sv * q0.fv + s * q0.fvv);
    }
}

// Jacobi P_n^{(alpha,0)}(y) with first and second derivatives in y, n = 0..nmax.
void jacobi(int nmax, double alpha, double y, std::vector<std::array<double, 3>>& out)
{
    out.assign(nmax + 1, {0.0, 0.0, 0.0});
    out[0] = {1.0, 0.0, 0.0};
    if (nmax == 0) return;
    out[1] = {((alpha + 2.0) * y + alpha) / 2.0, (alpha + 2.0) / 2.0, 0.0};
    for (int n = 2; n <= nmax; ++n) {
        const double c = 2.0 * n + alpha;
        const double a1 = 2.0 * n * (n + alpha) * (c - 2.0);
        const double a2 = (c - 1.0) * alpha * alpha;
        const double a3 = (c - 1.0) * c * (c - 2.0);
        const double a4 = 2.0 * (n + alpha - 1.0) * (n - 1.0) * c;
        const auto& p1 = out[n - 1];
        const auto& p0 = out[n - 2];
        const double lin = a2 + a3 * y;
        out[n][0] = (lin * p1[0] - a4 * p0[0]) / a1;
        out[n][1] = (a3 * p1[0] + lin * p1[1] - a4 * p0[1]) / a1;
        out[n][2] = (2.0 * a3 * p1[1] + lin * p1[2] - a4 * p0[2]) / a1;
    }
}

// Index of (m, n) in the ordering by total degree, then decreasing m.
int basis_index(int m, int n)
{
    const int d = m + n;
    return (d == 0 ? 0 : n_pol(d - 1)) + n;
}

// Values only: Q_m and one Jacobi sequence per m, O(p^2) per point.
void evaluate_values(int p, double u, double v, double* out)
{
    thread_local std::vector<double> q, jac;
    q.resize(p + 1);
    jac.resize(p + 1);
    const double t = 2.0 * u - 1.0 + v;
    const double s = (1.0 - v) * (1.0 - v);
    q[0] = 1.0;
    if (p > 0) q[1] = t;
    for (int m = 1; m < p; ++m)
        q[m + 1] = ((2.0 * m + 1.0) * t * q[m] - m * s * q[m - 1]) / (m + 1.0);
    const double y = 2.0 * v - 1.0;
    for (int m = 0; m <= p; ++m) {
        const int nmax = p - m;
        const double alpha = 2.0 * m + 1.0;
        jac[0] = 1.0;
        if (nmax > 0) jac[1] = ((alpha + 2.0) * y + alpha) / 2.0;
        for (int n = 2; n <= nmax; ++n) {
            const double c = 2.0 * n + alpha;
            const double a1 = 2.0 * n * (n + alpha) * (c - 2.0);
            const double lin = (c - 1.0) * alpha * alpha + (c - 1.0) * c * (c - 2.0) * y;
            const double a4 = 2.0 * (n + alpha - 1.0) * (n - 1.0) * c;
            jac[n] = (lin * jac[n - 1] - a4 * jac[n - 2]) / a1;
        }
        for (int n = 0; n <= nmax; ++n)
            out[basis_index(m, n)] = std::sqrt((2.0 * m + 1.0) * (2.0 * m + 2.0 * n + 2.0)) * q[m] * jac[n];
    }
}

void evaluate(int p, double u, double v, bool first, bool second, KoornwinderJet& jet)
{
    const int np = n_pol(p);
    jet.value.resize(np);
    if (!first && !second) {
        evaluate_values(p, u, v, jet.value.data());
        return;
    }
    if (first) {
        jet.du.resize(np);
        jet.dv.resize(np);
    }
    if (second) {
        jet.duu.resize(np);
        jet.duv.resize(np);
        jet.dvv.resize(np);
    }
    thread_local std::vector<Poly2> q;
    thread_local std::vector<std::array<double, 3>> jac;
    scaled_legendre(p, u, v, q);
    const double y = 2.0 * v - 1.0;
    for (int m = 0; m <= p; ++m) {
        jacobi(p - m, 2.0 * m + 1.0, y, jac);
        const Poly2& a = q[m];
        for (int n = 0; n <= p - m; ++n) {
            const int l = basis_index(m, n);
            const double c = std::sqrt((2.0 * m + 1.0) * (2.0 * m + 2.0 * n + 2.0));
            const double j0 = jac[n][0];
            const double j1 = 2.0 * jac[n][1];
            const double j2 = 4.0 * jac[n][2];
            jet.value[l] = c * a.f * j0;
            if (first) {
                jet.du[l] = c * a.fu * j0;
                jet.dv[l] = c * (a.fv * j0 + a.f * j1);
            }
            if (second) {
                jet.duu[l] = c * a.fuu * j0;
                jet.duv[l] = c * (a.fuv * j0 + a.fu * j1);
                jet.dvv[l] = c * (a.fvv * j0 + 2.0 * a.fv * j1 + a.f * j2);
            }
        }
    }
}

}  // namespace

VectorXd koornwinder(int p, double u, double v)
{
    KoornwinderJet jet;
    evaluate(p, u, v, false, false, jet);
    return jet.value;
}

KoornwinderJet koornwinder_jet(int p, double u, double v, bool second)
{
    KoornwinderJet jet;
    evaluate(p, u, v, true, second, jet);
    return jet;
}

MatrixXd koornwinder_matrix(int p, const Eigen::Ref<const Eigen::Matrix2Xd>& points)
{
    // filled transposed so each point writes a contiguous column
    MatrixXd out_t(n_pol(p), points.cols());
    for (Index k = 0; k < points.cols(); ++k) evaluate_values(p, points(0, k), points(1, k), out_t.col(k).data());
    return out_t.transpose();
}

}  // namespace lbie
