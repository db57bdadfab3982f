#include <cmath>
#include <random>

#include "doctest.h"
#include "qalg/pdm.hpp"

using namespace qalg;

static GQ q(const char* s) { return GQ::parse(s); }

TEST_CASE("sphere coordinates") {
    auto s = sphere_coords(0, 0, 1);
    CHECK(s[0] == 0.0);
    CHECK(s[1] == 1.0);
    CHECK(s[2] == 0.0);
    CHECK(sphere_coords(40, 0.3, 1)[2] == doctest::Approx(1.0).epsilon(1e-15));
    std::mt19937_64 g(7);
    std::uniform_real_distribution<double> u(-3, 3), uq(0.1, 2);
    for (int k = 0; k < 50; ++k) {
        auto v = sphere_coords(u(g), u(g), uq(g));
        CHECK(std::abs(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] - 1) < 1e-12);
    }
}

TEST_CASE("parameters") {
    PdmParams p = PdmParams::make(GQ(1), q("3/2"), 1);
    CHECK(p.m == 2);
    CHECK(p.a == GQ(-1));
    CHECK(p.mu == GQ(-2));
    CHECK(p.splits() == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(PdmParams::make(GQ(1), q("1/2"), 4).splits() == std::vector<std::pair<int, int>>{{0, 4}, {1, 2}, {2, 0}});
    CHECK_THROWS_AS(PdmParams::make(GQ(0), GQ(1), 1), MathError);
    CHECK_THROWS_AS(PdmParams::make(GQ(1), GQ(0), 1), MathError);
    CHECK_THROWS_AS(PdmParams::make(GQ(1), GQ(1), -1), MathError);
}

TEST_CASE("eigenvalue correspondence") {
    auto e = eigen_correspondence(PdmParams::make(GQ(1), q("3/2"), 1));
    CHECK(e.lambda_S == q("-63/4"));
    CHECK(e.lambda_Q == GQ(15));
    CHECK(e.pass);
    CHECK(eigen_correspondence(PdmParams::make(GQ(1), q("3/2"), 0)).lambda_Q == GQ(8));
    for (const char* k : {"1/2", "3/2", "5/2", "7/3"})
        for (int N = 0; N <= 8; ++N) {
            auto r = eigen_correspondence(PdmParams::make(GQ(1), q(k), N));
            CHECK(r.pass);
            auto s = eigen_correspondence(PdmParams::make(q("5/3"), q(k), N));
            CHECK(s.pass);
            CHECK(s.lambda_Q == q("25/9") * r.lambda_Q);
        }
    // any other mu breaks it
    PdmParams p = PdmParams::make(GQ(1), q("3/2"), 2);
    p.mu = GQ(-2);
    CHECK_FALSE(eigen_correspondence(p).pass);
}

TEST_CASE("parity basis m = 2") {
    ParityBasis b = parity_basis(2, q("1/3"));
    CHECK(b.plus.size() == 2);
    CHECK(b.minus.size() == 1);
    CHECK(b.inner(b.plus[0].poly, b.minus[0].poly) == GQ(0));
    CHECK(b.plus[1].poly == Poly::monomial(1));
    CHECK(b.orthonormal());
}

TEST_CASE("parity basis scans") {
    for (const char* a : {"1/3", "-2/5", "-1", "0", "-7/2"})
        for (int m = 0; m <= 10; ++m) {
            ParityBasis b = parity_basis(m, q(a));
            int k = (m + 1) / 2;
            CHECK(b.plus.size() == static_cast<size_t>(m % 2 == 0 ? m / 2 + 1 : k));
            CHECK(b.minus.size() == static_cast<size_t>(m % 2 == 0 ? m / 2 : k));
            CHECK(b.plus.size() + b.minus.size() == static_cast<size_t>(m + 1));
            CHECK(b.orthonormal());
            CHECK(b.P_involution());
            CHECK(b.P_norm_preserving());
            CHECK(b.P_eigen());
        }
    // a above m also gives positive norms
    CHECK(parity_basis(3, q("9/2")).orthonormal());
}

TEST_CASE("parity basis errors") {
    CHECK_THROWS_AS(parity_basis(4, q("3/2")), MathError);
    CHECK_THROWS_AS(parity_basis(-1, q("1/3")), MathError);
    ParityBasis b = parity_basis(2, q("1/3"));
    CHECK_THROWS_AS(b.apply_P(Poly::monomial(3)), MathError);
}
