#include <doctest.h>

#include <random>

#include "oriftl/calibrated.hpp"
#include "support.hpp"

using namespace oriftl;
using test::load_config;

namespace {

Shape sh(int k, Marker m) { return Shape{k, m}; }

cplx value_of(const ParamConfig& cfg, Marker m, const NumericSeed& s) {
    return res_to_complex(cfg.marker_residue(m), s);
}

}  // namespace

TEST_CASE("q-bracket") {
    const cplx q = std::polar(1.3, 0.4);
    CHECK(std::abs(qbracket(q * q * q) - (std::pow(q, 3) + std::pow(q, -3))) < 1e-14);
    CHECK(std::abs(qbracket(1.0) - 2.0) < 1e-15);
}

TEST_CASE("gamma_1 of a shape") {
    const auto cfg = load_config("generic");
    std::mt19937_64 rng(4);
    const auto s = make_seed(cfg, rng);
    const cplx a1 = value_of(cfg, Marker::alpha1, s);
    for (int n = 1; n <= 9; ++n) CHECK(std::abs(gamma_from_shape(sh(n, Marker::alpha1), n, cfg, s) - a1) < 1e-12);
    for (int n = 2; n <= 10; n += 2)
        CHECK(std::abs(gamma_from_shape(sh(0, Marker::theta), n, cfg, s) * std::pow(s.q, n) - s.theta) < 1e-12);
    for (int n = 1; n <= 9; n += 2)
        CHECK(std::abs(gamma_from_shape(sh(0, Marker::theta), n, cfg, s) * std::pow(s.q, n - 1) - s.theta) < 1e-12);
    // bead on box 9: the box holding 1 in T_lambda
    CHECK(std::abs(gamma_from_shape(sh(3, Marker::alpha1), 19, cfg, s) - a1 * std::pow(s.q, -16)) < 1e-12);
}

TEST_CASE("gamma agrees with residues") {
    for (const char* name : {"generic", "ex66", "e7"}) {
        const auto cfg = load_config(name);
        std::mt19937_64 rng(8);
        const auto s = make_seed(cfg, rng);
        for (int n = 1; n <= 7; ++n)
            for (const auto& shp : shapes(n))
                for (const auto& t : enumerate_std(n, shp)) {
                    const auto g = gamma_of(t, cfg, s);
                    const auto r = residue_seq(t, cfg);
                    if (shp.is_theta()) continue;  // theta lives in its own orbit
                    for (int i = 0; i < n; ++i) CHECK(std::abs(g[i] - res_to_complex(r[i], s)) < 1e-9);
                }
    }
}

TEST_CASE("hecke relations") {
    const auto cfg = load_config("generic");
    std::mt19937_64 rng(42);
    SUBCASE("n = 1 has only quadratics") {
        for (const auto& shp : shapes(1)) {
            const auto m = build_calibrated(shp, 1, cfg, make_seed(cfg, rng));
            const auto rep = check_hecke_relations(m, 1e-9);
            CHECK(rep.pass());
            CHECK(rep.residuals.count("braid3") == 1);
            CHECK(rep.residuals.at("braid3") == 0.0);
            CHECK(rep.residuals.count("braid4_left") == 0);
        }
    }
    SUBCASE("n = 3, shape (3,alpha1), many seeds") {
        for (int k = 0; k < 100; ++k) {
            const auto m = build_calibrated(sh(3, Marker::alpha1), 3, cfg, make_seed(cfg, rng));
            CHECK(check_hecke_relations(m, 1e-8).pass());
            CHECK(check_tl_relations(m, 1e-8).pass());
        }
    }
    SUBCASE("every shape up to n = 5") {
        for (int n = 1; n <= 5; ++n)
            for (const auto& shp : shapes(n)) {
                const auto seed = make_seed(cfg, rng);
                const auto m = build_calibrated(shp, n, cfg, seed);
                CHECK(m.dim() == static_cast<int>(count_std(n, shp)));
                auto rep = check_hecke_relations(m, 1e-8);
                rep.merge(check_tl_relations(m, 1e-8));
                CHECK_MESSAGE(rep.pass(), rep.to_json().dump());
                CHECK(jm_spectrum_residual(m, cfg, seed) < 1e-8);
            }
    }
}

TEST_CASE("basis rescaling leaves relations intact") {
    const auto cfg = load_config("generic");
    std::mt19937_64 rng(5);
    auto m = build_calibrated(sh(0, Marker::theta), 3, cfg, make_seed(cfg, rng));
    std::uniform_real_distribution<double> u(0.5, 2.0);
    Eigen::VectorXcd dv(m.dim());
    for (int i = 0; i < m.dim(); ++i) dv[i] = std::polar(u(rng), u(rng));
    const CMat D = dv.asDiagonal();
    const CMat Di = dv.cwiseInverse().asDiagonal();
    for (auto& t : m.T) t = D * t * Di;
    m.T0v = D * m.T0v * Di;
    for (auto& x : m.X) x = D * x * Di;
    CHECK(check_hecke_relations(m, 1e-8).pass());
    CHECK(check_tl_relations(m, 1e-8).pass());
}

TEST_CASE("module structure") {
    const auto cfg = load_config("generic");
    std::mt19937_64 rng(6);
    for (int n = 1; n <= 5; ++n)
        for (const auto& shp : shapes(n)) {
            const auto s = make_seed(cfg, rng);
            const auto m = build_calibrated(shp, n, cfg, s);
            const cplx a1 = value_of(cfg, Marker::alpha1, s), a2 = value_of(cfg, Marker::alpha2, s);
            const CMat e0 = m.e(0);
            const CMat e0v = m.T0v - m.qn * CMat::Identity(m.dim(), m.dim());
            for (int k = 0; k < m.dim(); ++k) {
                const cplx g = m.gamma[k][0];
                const bool z0 = std::abs(g - a1) < 1e-9 || std::abs(g - a2) < 1e-9;
                const bool z0v = std::abs(g - a1) < 1e-9 || std::abs(g - 1.0 / a2) < 1e-9;
                CHECK((e0.col(k).norm() < 1e-9) == z0);
                CHECK((e0v.col(k).norm() < 1e-9) == z0v);
                for (int i = 0; i < n; ++i) CHECK(std::abs(m.X[i](k, k) - m.gamma[k][i]) < 1e-8);
                // gamma_{i+1} = q^2 gamma_i pins T_i to q with no partner
                for (int i = 1; i < n; ++i)
                    if (std::abs(m.gamma[k][i] - m.q * m.q * m.gamma[k][i - 1]) < 1e-12) {
                        CHECK(std::abs(m.T[i](k, k) - m.q) < 1e-9);
                        CHECK(m.T[i].col(k).norm() - std::abs(m.T[i](k, k)) < 1e-9);
                    }
            }
        }
}

TEST_CASE("non-generic seed is reported") {
    const auto cfg = load_config("generic");
    std::mt19937_64 rng(2);
    auto s = make_seed(cfg, rng);
    s.theta = 1.0;  // gamma_1 = 1 kills the T_0 denominator
    CHECK_THROWS_AS(build_calibrated(sh(0, Marker::theta), 1, cfg, s), NonGenericSeed);
}

TEST_CASE("blob quotient") {
    const auto cfg = load_config("generic");
    std::mt19937_64 rng(13);
    SUBCASE("even n, theta shape") {
        for (int n = 2; n <= 6; n += 2) {
            const auto s = make_seed(cfg, rng);
            const auto m = build_calibrated(sh(0, Marker::theta), n, cfg, s);
            const cplx kappa = qbracket(s.theta / s.q) - qbracket(s.q0 * s.qn / s.q);
            CHECK(std::abs(blob_kappa(n, s) - kappa) < 1e-14);
            CHECK_MESSAGE(blob_check(m, s, 1e-8).pass(), blob_check(m, s, 1e-8).to_json().dump());
        }
    }
    SUBCASE("other shapes are annihilated") {
        for (int n = 1; n <= 6; ++n)
            for (const auto& shp : shapes(n)) {
                if (shp.is_theta()) continue;
                const auto s = make_seed(cfg, rng);
                const auto m = build_calibrated(shp, n, cfg, s);
                const auto rep = blob_check(m, s, 1e-8);
                CHECK(rep.residuals.count("blob_I0_annihilates") == 1);
                CHECK_MESSAGE(rep.pass(), rep.to_json().dump());
            }
        const auto m = build_calibrated(sh(1, Marker::alpha1), 1, cfg, make_seed(cfg, rng));
        const auto [i0, i1] = blob_idempotents(m);
        CHECK((i0 - m.e(0)).norm() == 0.0);
        CHECK(i0.norm() < 1e-12);
        CHECK(i1.norm() < 1e-12);
    }
    SUBCASE("odd n, theta shape: observed constant") {
        for (int n = 1; n <= 5; n += 2) {
            const auto s = make_seed(cfg, rng);
            const auto m = build_calibrated(sh(0, Marker::theta), n, cfg, s);
            const cplx a2 = -s.q0 / s.qn;
            CHECK(blob_check(m, qbracket(s.theta) - qbracket(a2), 1e-8).pass());
            CHECK_FALSE(blob_check(m, qbracket(s.theta) - qbracket(s.q0 * s.qn), 1e-8).pass());
        }
    }
}

TEST_CASE("report json") {
    RelationReport r;
    r.residuals["x"] = 1e-3;
    r.absolute["x"] = 2e-3;
    r.tol = 1e-2;
    CHECK(r.pass());
    RelationReport o;
    o.residuals["x"] = 5e-2;
    r.merge(o);
    CHECK_FALSE(r.pass());
    const auto j = r.to_json();
    CHECK(j.contains("pass"));
}
