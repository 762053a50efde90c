#include "lbie/quadrature.hpp"

#include "lbie/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lbie {

void QuadConfig::validate(int p) const
{
    if (!(tol_adaptive > 0)) throw ContractError("QuadConfig: tol_adaptive must be positive");
    if (max_depth < 1) throw ContractError("QuadConfig: max_depth must be positive");
    if (!(near_factor > 1)) throw ContractError("QuadConfig: near_factor must exceed 1");
    if (!(polar_panel > 0)) throw ContractError("QuadConfig: polar_panel must be positive");
    if (radial_order(p) < p + 1 || angular_order(p) < p + 1 || smooth_order(p) < p + 1)
        throw ContractError("QuadConfig: quadrature orders must be at least p + 1 = " +
                            std::to_string(p + 1));
}

namespace {

// Subdivision nodes whose samples are kept for reuse across targets: all of
// them down to kCacheDepth, deeper ones until the cache holds kCacheEntries.
constexpr int kCacheDepth = 4;
constexpr int kMaxKeyDepth = 20;
constexpr size_t kCacheEntries = 1200;

double twice_area(const std::array<Vector2d, 3>& tri)
{
    const Vector2d a = tri[1] - tri[0], b = tri[2] - tri[0];
    return std::abs(a.x() * b.y() - a.y() * b.x());
}

std::array<std::array<Vector2d, 3>, 4> quadrisect(const std::array<Vector2d, 3>& t)
{
    const Vector2d ab = 0.5 * (t[0] + t[1]), bc = 0.5 * (t[1] + t[2]), ca = 0.5 * (t[2] + t[0]);
    return {{{t[0], ab, ca}, {ab, t[1], bc}, {ca, bc, t[2]}, {bc, ca, ab}}};
}

}  // namespace

TriangleQuadrature::TriangleQuadrature(const TriangleChart& chart, const ReferenceElement& ref,
                                       const QuadConfig& cfg, int triangle)
    : chart_(chart), ref_(ref), cfg_(cfg), triangle_(triangle), p_(ref.order)
{
    cfg_.validate(p_);
    const TriangleRule rule = collapsed_gauss_rule(cfg_.smooth_order(p_));
    smooth_points_ = rule.points;
    smooth_weights_ = rule.weights;
    root_ = build_rule({Vector2d(0, 0), Vector2d(1, 0), Vector2d(0, 1)});
    centroid_ = chart_.point(1.0 / 3.0, 1.0 / 3.0);
    diameter_ = chart_diameter(chart_);
}

Regime TriangleQuadrature::classify(const Vector3d& x) const
{
    if (cfg_.adaptive_everywhere) return Regime::Near;
    return (x - centroid_).norm() >= cfg_.near_factor * diameter_ ? Regime::Far : Regime::Near;
}

TriangleQuadrature::Rule TriangleQuadrature::build_rule(const Vertices& tri) const
{
    const Index nq = smooth_weights_.size();
    const double jac = twice_area(tri);
    Rule rule{Matrix3Xd(3, nq), Matrix3Xd(3, nq), VectorXd(nq), MatrixXd()};
    const Vector2d e1 = tri[1] - tri[0], e2 = tri[2] - tri[0];
    Eigen::Matrix2Xd z(2, nq);
    for (Index q = 0; q < nq; ++q) {
        z.col(q) = tri[0] + smooth_points_(0, q) * e1 + smooth_points_(1, q) * e2;
        const auto d = chart_.derivatives(z(0, q), z(1, q));
        const Vector3d c = d.xu.cross(d.xv);
        const double sqrt_g = c.norm();
        if (!(sqrt_g > 1e-14 * d.xu.norm() * d.xv.norm()))
            throw DegenerateElementError("degenerate chart inside triangle " + std::to_string(triangle_),
                                         triangle_);
        rule.y.col(q) = d.x;
        rule.n.col(q) = c / sqrt_g;
        rule.w[q] = smooth_weights_[q] * jac * sqrt_g;
    }
    rule.basis = koornwinder_matrix(p_, z);
    return rule;
}

Moments TriangleQuadrature::apply(const Rule& rule, const Target& t) const
{
    const Index nq = rule.w.size();
    Eigen::Matrix<double, kNumKernels, Eigen::Dynamic> kw(kNumKernels, nq);
    for (Index q = 0; q < nq; ++q) {
        const auto k = eval_all_kernels<double>(t.x, t.n, rule.y.col(q), rule.n.col(q));
        for (int a = 0; a < kNumKernels; ++a) kw(a, q) = k[a] * rule.w[q];
    }
    return kw * rule.basis;
}

Moments TriangleQuadrature::far(const Target& t) const { return apply(root_, t); }

const TriangleQuadrature::Rule& TriangleQuadrature::node_rule(std::uint64_t key, int depth,
                                                              const Vertices& tri, Rule& scratch)
{
    if (depth > kMaxKeyDepth) {
        scratch = build_rule(tri);
        return scratch;
    }
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    if (depth > kCacheDepth && cache_.size() >= kCacheEntries) {
        scratch = build_rule(tri);
        return scratch;
    }
    return cache_.emplace(key, build_rule(tri)).first->second;
}

Moments TriangleQuadrature::refine(const Target& t, std::uint64_t key, int depth,
                                   const Vertices& tri, const Moments& parent)
{
    const auto children = quadrisect(tri);
    std::array<Moments, 4> est;
    Moments sum = Moments::Zero(kNumKernels, parent.cols());
    Rule scratch;
    for (int k = 0; k < 4; ++k) {
        est[k] = apply(node_rule(key * 5 + k + 1, depth + 1, children[k], scratch), t);
        sum += est[k];
    }
    const double diff = (sum - parent).cwiseAbs().maxCoeff();
    if (diff <= cfg_.tol_adaptive) return sum;
    if (depth + 1 >= cfg_.max_depth)
        throw QuadratureError("adaptive quadrature exceeded max depth " +
                                  std::to_string(cfg_.max_depth) + " on triangle " +
                                  std::to_string(triangle_),
                              diff, cfg_.tol_adaptive);
    Moments total = Moments::Zero(kNumKernels, parent.cols());
    for (int k = 0; k < 4; ++k) total += refine(t, key * 5 + k + 1, depth + 1, children[k], est[k]);
    return total;
}

Moments TriangleQuadrature::near(const Target& t)
{
    const Vertices root{Vector2d(0, 0), Vector2d(1, 0), Vector2d(0, 1)};
    return refine(t, 0, 0, root, apply(root_, t));
}

// Polar rule about the target in coordinates xi = L (z - z0) with L^T L = g(z0),
// where the kernels behave like 1 / |xi|. Each of the three sub-triangles
// (z0, V_a, V_b) is written as xi = s (f + tau e), with f the foot of the
// perpendicular from the target to the edge, d = |f| and tau = d sinh(eta).
// The area element s d ds dtau then cancels the singularity and the Lorentzian
// d / sqrt(d^2 + tau^2) along the edge.
Moments TriangleQuadrature::polar(const Vector2d& uv, int n_radial, int n_angular) const
{
    const auto j0 = evaluate_jet(chart_, uv.x(), uv.y(), triangle_);
    const Target t{j0.x, j0.n};
    const Eigen::LLT<Mat2<double>> llt(j0.g);
    const Mat2<double> L = llt.matrixU();
    const Mat2<double> L_inv = L.inverse();
    const double det_L = L(0, 0) * L(1, 1);

    const GaussRule radial = gauss_legendre(n_radial);
    const GaussRule angular = gauss_legendre(n_angular);
    const std::array<Vector2d, 3> corners{Vector2d(0, 0), Vector2d(1, 0), Vector2d(0, 1)};

    std::vector<Vector2d> pts;
    std::vector<double> wts;
    for (int s = 0; s < 3; ++s) {
        const Vector2d pa = L * (corners[s] - uv), pb = L * (corners[(s + 1) % 3] - uv);
        const double len = (pb - pa).norm();
        const Vector2d e = (pb - pa) / len;
        const Vector2d f = pa - pa.dot(e) * e;
        const double d = f.norm();
        if (d <= 1e-14 * len) continue;  // target on this edge
        const double eta_a = std::asinh((pa - f).dot(e) / d);
        const double eta_b = std::asinh((pb - f).dot(e) / d);
        const int panels = std::max(1, static_cast<int>(std::ceil((eta_b - eta_a) / cfg_.polar_panel)));
        const double h = (eta_b - eta_a) / panels;
        for (int k = 0; k < panels; ++k)
            for (int a = 0; a < n_angular; ++a) {
                const double eta = eta_a + h * (k + angular.nodes[a]);
                const double tau = d * std::sinh(eta);
                const double w_eta = h * angular.weights[a] * d * d * std::cosh(eta);
                const Vector2d dir = f + tau * e;
                for (int r = 0; r < n_radial; ++r) {
                    const double sr = radial.nodes[r];
                    pts.push_back(uv + L_inv * (sr * dir));
                    wts.push_back(w_eta * radial.weights[r] * sr / det_L);
                }
            }
    }

    const Index nq = static_cast<Index>(pts.size());
    Rule rule{Matrix3Xd(3, nq), Matrix3Xd(3, nq), VectorXd(nq), MatrixXd(nq, n_pol(p_))};
    for (Index q = 0; q < nq; ++q) {
        // the polar points stay in the closed triangle up to rounding
        const double u = std::clamp(pts[q].x(), 0.0, 1.0);
        const double v = std::clamp(pts[q].y(), 0.0, 1.0 - u);
        const auto jet = evaluate_jet(chart_, u, v, triangle_);
        rule.y.col(q) = jet.x;
        rule.n.col(q) = jet.n;
        rule.w[q] = wts[q] * jet.sqrt_g;
        rule.basis.row(q) = koornwinder(p_, u, v).transpose();
    }
    return apply(rule, t);
}

Moments TriangleQuadrature::self(const Vector2d& uv) const
{
    const int nr = cfg_.radial_order(p_), na = cfg_.angular_order(p_);
    Moments m = polar(uv, nr, na);
    if (cfg_.self_check) {
        const Moments fine = polar(uv, 2 * nr, 2 * na);
        const double diff = (fine - m).cwiseAbs().maxCoeff();
        if (diff > 10 * cfg_.tol_adaptive)
            throw QuadratureError("self quadrature order check failed on triangle " +
                                      std::to_string(triangle_),
                                  diff, 10 * cfg_.tol_adaptive);
    }
    return m;
}

Moments integrate_far(const Target& t, const TriangleChart& chart, const ReferenceElement& ref,
                      const QuadConfig& cfg)
{
    return TriangleQuadrature(chart, ref, cfg).far(t);
}

Moments integrate_near(const Target& t, const TriangleChart& chart, const ReferenceElement& ref,
                       const QuadConfig& cfg)
{
    return TriangleQuadrature(chart, ref, cfg).near(t);
}

Moments integrate_self(const Vector2d& uv, const TriangleChart& chart, const ReferenceElement& ref,
                       const QuadConfig& cfg)
{
    return TriangleQuadrature(chart, ref, cfg).self(uv);
}

}  // namespace lbie
