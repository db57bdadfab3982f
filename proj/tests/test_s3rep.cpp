#include "doctest.h"
#include "qalg/s3rep.hpp"
#include "random_gen.hpp"

using namespace qalg;

static GQ q(const char* s) { return GQ::parse(s); }

static bool all_pass(const std::vector<CheckResult>& v) {
    for (const auto& c : v)
        if (!c.pass) return false;
    return true;
}

TEST_CASE("kappa examples") {
    CHECK(kappa_general(GQ(2), GQ(-2), GQ(0)) == GQ(0));
    CHECK(kappa_general(GQ(1), GQ(0), GQ(0)) == GQ(0));
    CHECK(kappa_general(GQ(0), GQ(0), GQ(1)) == q("3/16"));
}

TEST_CASE("kappa vanishes on the lowest-weight family") {
    for (int k = 0; k < 20; ++k) {
        S3Params p = S3Params::bounded_below(GQ(testgen::rat()), GQ(testgen::rat()));
        CHECK(kappa_general(p.mu, p.H, p.alpha) == GQ(0));
    }
}

TEST_CASE("rep coefficient examples") {
    S3Params p = S3Params::finite(2, q("1/3"));
    CHECK(rep_coefficients(p, 0).C_up == q("-4/3"));
    for (int n = 0; n < 3; ++n) CHECK(rep_coefficients(p, n).D_diag == GQ(0));
    S3Params b = S3Params::bounded_below(GQ(2), q("1/2"));
    CHECK(rep_coefficients(b, 1).F == q("5/2"));
    CHECK(rep_coefficients(b, 0).F == GQ(0));
}

TEST_CASE("build_rep examples") {
    S3Params p = S3Params::finite(2, q("1/3"));
    TridiagonalRep r = build_rep(p, 3);
    CHECK(r.X(0, 0) == q("-2i"));
    CHECK(r.X(1, 1) == GQ(0));
    CHECK(r.X(2, 2) == q("2i"));
    CHECK(r.L1(0, 0) == q("-3/2"));
    CHECK_THROWS_AS(build_rep(p, 4), MathError);
    CHECK_THROWS_AS(build_rep(S3Params::bounded_below(GQ(2), q("1/2")), 0), MathError);

    TridiagonalRep b = build_rep(S3Params::bounded_below(GQ(2), q("1/2")), 10);
    for (int n = 0; n < 10; ++n) CHECK(b.L2(n, n) == GQ(0));
}

TEST_CASE("finite representations satisfy the structure relations exactly") {
    for (int m = 0; m <= 8; ++m)
        for (const char* a : {"1/3", "-2/5", "5/7"}) {
            S3Params p = S3Params::finite(m, q(a));
            auto res = verify_matrix_structure(build_rep(p, m + 1), p);
            REQUIRE(res.size() == 4);
            for (const auto& c : res) {
                CHECK_MESSAGE(c.pass, c.name << " m=" << m << " a=" << a);
                CHECK(c.residual == 0.0);
            }
        }
}

TEST_CASE("truncated bounded-below representation: interior residuals vanish") {
    S3Params p = S3Params::bounded_below(GQ(2), q("1/2"));
    CHECK(all_pass(verify_matrix_structure(build_rep(p, 10), p)));
    S3Params r = S3Params::bounded_below(q("7/3"), q("-3/5+1/2i"));
    CHECK(all_pass(verify_matrix_structure(build_rep(r, 8), r)));
}

TEST_CASE("perturbed representation names the failing relation") {
    S3Params p = S3Params::finite(3, q("1/3"));
    TridiagonalRep r = build_rep(p, 4);
    r.L1(1, 1) += GQ(1);
    auto res = verify_matrix_structure(r, p);
    bool l2x_failed = false;
    for (const auto& c : res)
        if (c.name == "[L2,X]=-X^2-2L1+H-alpha") l2x_failed = !c.pass && c.residual > 0;
    CHECK(l2x_failed);
    // [L1,X] only sees off-diagonal entries
    CHECK(res[0].pass);
}

TEST_CASE("generic representation with rational root splitting") {
    S3Params p = S3Params::generic(q("1/3"), GQ(-2), GQ(0));
    CHECK(p.kappa != GQ(0));
    TridiagonalRep r = build_rep(p, 9);
    CHECK(all_pass(verify_matrix_structure(r, p)));
    CHECK(all_pass(ladder_check(r, p)));
    for (int n = 0; n < 9; ++n) {
        RepCoeffs c = rep_coefficients(p, n), prev = rep_coefficients(p, n - 1);
        CHECK(prev.C_up * c.C_down == c.F);
    }
    CHECK_THROWS_AS(rep_coefficients(S3Params::generic(GQ(0), GQ(0), q("1/8")), 1), MathError);
}

TEST_CASE("ladder operators") {
    S3Params b = S3Params::bounded_below(GQ(2), q("1/2"));
    TridiagonalRep r = build_rep(b, 8);
    auto res = ladder_check(r, b);
    CHECK(all_pass(res));
    Matrix sh = GQ::rat(1, 2) * (r.X * r.X + (b.alpha - b.H) * Matrix::identity(8));
    Matrix Ad = r.L1 + I_ * r.L2 + sh, A = r.L1 - I_ * r.L2 + sh;
    CHECK((A * Ad - Ad * A)(0, 0) == GQ(10));
    CHECK(GQ(4) * (r.F[1] - r.F[0]) == GQ(10));

    for (int m = 0; m <= 6; ++m) {
        S3Params p = S3Params::finite(m, q("-2/5"));
        CHECK(all_pass(ladder_check(build_rep(p, m + 1), p)));
    }
}

TEST_CASE("classify examples") {
    RepClass f = classify(GQ(-3), q("1/3"));
    CHECK(f.kind == "finite");
    CHECK(f.dim == 4);
    CHECK(f.spectrum == std::vector<GQ>{GQ(-3), GQ(-1), GQ(1), GQ(3)});
    CHECK(f.differential);

    RepClass b = classify(q("3/2"), q("1/2"));
    CHECK(b.kind == "bounded_below");
    CHECK(b.differential);
    CHECK(b.difference);

    RepClass c = classify(q("-1/2"), q("5/4"));
    CHECK(c.differential);
    CHECK_FALSE(c.difference);
    CHECK_FALSE(c.boundary);

    CHECK(classify(q("3/2"), GQ(1)).boundary);
    CHECK(classify(q("-1/2"), GQ(1)).boundary);
    CHECK(classify(q("-1/2"), GQ(3)).kind == "none");
    CHECK_THROWS_AS(classify(q("1+i"), GQ(0)), MathError);
}

TEST_CASE("F_0 = 0 and quartic equals product") {
    for (int k = 0; k < 10; ++k) {
        S3Params p = S3Params::bounded_below(GQ(testgen::rat()), GQ(testgen::rat()));
        CHECK(rep_coefficients(p, 0).F == GQ(0));
        for (long n = 0; n <= 20; ++n)
            CHECK(F_quartic(p.mu, p.H, p.alpha, p.kappa, n) == rep_coefficients(p, n).F);
    }
}

TEST_CASE("two forms of C(n,n) agree") {
    for (int k = 0; k < 10; ++k) {
        GQ mu(testgen::rat()), a(testgen::rat());
        S3Params p = S3Params::bounded_below(mu, a);
        for (long n = 0; n < 6; ++n) {
            GQ x(n);
            CHECK(rep_coefficients(p, n).C_diag ==
                  GQ(2) * x * x + GQ(2) * x * mu - mu * a + a + mu - GQ::rat(1, 2));
        }
    }
}

TEST_CASE("trace identity for finite representations") {
    for (int m = 0; m <= 6; ++m) {
        GQ a(testgen::rat());
        S3Params p = S3Params::finite(m, a);
        GQ chi(0), diag(0);
        for (int n = 0; n <= m; ++n) {
            GQ s = GQ(n) - a + GQ::rat(1, 2);
            chi += a * a - GQ::rat(1, 4) - s * s;
            diag += rep_coefficients(p, n).C_diag;
        }
        CHECK(chi == diag);
    }
}

TEST_CASE("F_{m+1} = 0 exactly when mu = -m") {
    for (int m = 0; m <= 10; ++m)
        for (int mm = 0; mm <= 10; ++mm) {
            S3Params p = S3Params::bounded_below(GQ(-mm), q("1/3"));
            CHECK((rep_coefficients(p, m + 1).F == GQ(0)) == (m == mm));
        }
}
