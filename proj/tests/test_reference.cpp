#include "lbie/gauss.hpp"
#include "lbie/koornwinder.hpp"
#include "lbie/reference_element.hpp"

#include <doctest.h>

#include <cmath>

using namespace lbie;

TEST_SUITE_BEGIN("property");

TEST_CASE("gauss-legendre integrates polynomials of degree 2n-1 on [0,1]")
{
    for (int n : {1, 3, 8, 20}) {
        const GaussRule rule = gauss_legendre(n);
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], k);
            CHECK(s == doctest::Approx(1.0 / (k + 1)).epsilon(1e-13));
        }
    }
}

TEST_CASE("collapsed gauss rule integrates monomials on the triangle")
{
    const TriangleRule rule = collapsed_gauss_rule(6);
    // int u^a v^b = a! b! / (a + b + 2)!
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; a + b <= 10; ++b) {
            double s = 0.0;
            for (Index q = 0; q < rule.size(); ++q)
                s += rule.weights[q] * std::pow(rule.points(0, q), a) * std::pow(rule.points(1, q), b);
            const double exact = std::tgamma(a + 1) * std::tgamma(b + 1) / std::tgamma(a + b + 3);
            CHECK(s == doctest::Approx(exact).epsilon(1e-13));
        }
}

TEST_CASE("koornwinder values match independent jacobi evaluation")
{
    // scipy eval_legendre / eval_jacobi of the defining formula
    const double at_a[] = {1.4142135623730951, -1.039230484541326, -0.19999999999999929,
                           -0.60249481325568333, -0.63639610306789252, -1.2247448713915894,
                           1.1449471603528263, -0.76527119376074904, 1.0434826304256337,
                           1.1172287142747452, -0.37852463592215457, 2.176152729015131,
                           0.4355777772109129, -0.013145341380123448, 0.35607246453496016};
    const double at_b[] = {1.4142135623730951, 0.0, 3.4000000000000004, -0.027386127875258296, 0.0,
                           4.6540305112880391, 0.0, -0.16760071598892409, 0.0, 4.4264884502277901,
                           0.00035575623676894238, 0.0, -0.55720014357499936, 0.0,
                           2.6329123798561955};
    const VectorXd ka = koornwinder(4, 0.2, 0.3);
    const VectorXd kb = koornwinder(4, 0.05, 0.9);
    REQUIRE(ka.size() == 15);
    for (int l = 0; l < 15; ++l) {
        CHECK(ka[l] == doctest::Approx(at_a[l]).epsilon(1e-13));
        CHECK(std::abs(kb[l] - at_b[l]) < 1e-12);
    }
}

TEST_CASE("koornwinder basis is orthonormal and finite at the apex")
{
    const int p = 7;
    const TriangleRule rule = collapsed_gauss_rule(p + 2);
    const MatrixXd K = koornwinder_matrix(p, rule.points);
    const MatrixXd gram = K.transpose() * rule.weights.asDiagonal() * K;
    CHECK((gram - MatrixXd::Identity(n_pol(p), n_pol(p))).cwiseAbs().maxCoeff() < 1e-12);
    const VectorXd apex = koornwinder(p, 0.0, 1.0);
    CHECK(apex.allFinite());
}

TEST_CASE("koornwinder derivatives agree with finite differences")
{
    const int p = 6;
    const double u = 0.27, v = 0.41, h = 1e-5;
    const KoornwinderJet jet = koornwinder_jet(p, u, v, true);
    const VectorXd du = (koornwinder(p, u + h, v) - koornwinder(p, u - h, v)) / (2 * h);
    const VectorXd dv = (koornwinder(p, u, v + h) - koornwinder(p, u, v - h)) / (2 * h);
    CHECK((jet.du - du).cwiseAbs().maxCoeff() < 1e-6);
    CHECK((jet.dv - dv).cwiseAbs().maxCoeff() < 1e-6);
    const KoornwinderJet up = koornwinder_jet(p, u + h, v), um = koornwinder_jet(p, u - h, v);
    const KoornwinderJet vp = koornwinder_jet(p, u, v + h), vm = koornwinder_jet(p, u, v - h);
    CHECK((jet.duu - (up.du - um.du) / (2 * h)).cwiseAbs().maxCoeff() < 1e-5);
    CHECK((jet.duv - (vp.du - vm.du) / (2 * h)).cwiseAbs().maxCoeff() < 1e-5);
    CHECK((jet.dvv - (vp.dv - vm.dv) / (2 * h)).cwiseAbs().maxCoeff() < 1e-5);
}

TEST_CASE("reference elements: interior nodes, positive weights, exactness")
{
    for (int p = 1; p <= kMaxOrder; ++p) {
        CAPTURE(p);
        const auto ref = build_reference_element(p);
        REQUIRE(ref->size() == n_pol(p));
        CHECK(ref->quadrature_degree >= p);
        CHECK((ref->weights.array() > 0).all());
        CHECK(ref->weights.sum() == doctest::Approx(0.5).epsilon(1e-13));
        for (int i = 0; i < ref->size(); ++i) {
            const double u = ref->nodes(0, i), v = ref->nodes(1, i);
            CHECK(u > 0);
            CHECK(v > 0);
            CHECK(u + v < 1);
        }
        const MatrixXd eye = ref->coefficients * ref->values;
        CHECK((eye - MatrixXd::Identity(ref->size(), ref->size())).cwiseAbs().maxCoeff() < 1e-9);
        // exactness up to the advertised degree
        const int d = ref->quadrature_degree;
        for (int a = 0; a <= d; ++a)
            for (int b = 0; a + b <= d; ++b) {
                double s = 0.0;
                for (int i = 0; i < ref->size(); ++i)
                    s += ref->weights[i] * std::pow(ref->nodes(0, i), a) * std::pow(ref->nodes(1, i), b);
                const double exact = std::tgamma(a + 1) * std::tgamma(b + 1) / std::tgamma(a + b + 3);
                CHECK(s == doctest::Approx(exact).epsilon(1e-11));
            }
    }
    CHECK_THROWS_AS(build_reference_element(0), ContractError);
    CHECK_THROWS_AS(build_reference_element(13), ContractError);
}

TEST_CASE("spectral differentiation is exact for degree-p polynomials")
{
    const auto ref = build_reference_element(5);
    VectorXd f(ref->size()), fu(ref->size()), fv(ref->size());
    for (int i = 0; i < ref->size(); ++i) {
        const double u = ref->nodes(0, i), v = ref->nodes(1, i);
        f[i] = u * u * u * v * v - 2 * u * v + 3 * v;
        fu[i] = 3 * u * u * v * v - 2 * v;
        fv[i] = 2 * u * u * u * v - 2 * u + 3;
    }
    CHECK((ref->diff_u * f - fu).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((ref->diff_v * f - fv).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(ref->interpolate(f, 0.3, 0.6) ==
          doctest::Approx(0.027 * 0.36 - 0.36 + 1.8).epsilon(1e-12));
}

TEST_SUITE_END();
