#include <cmath>

#include "doctest.h"
#include "qalg/s3models.hpp"
#include "random_gen.hpp"

using namespace qalg;

static GQ q(const char* s) { return GQ::parse(s); }

TEST_CASE("differential model examples") {
    DiffModel d = model_differential(S3Params::finite(2, q("1/3")));
    CHECK(d.L1.apply(Poly(1)) == Poly(std::vector<GQ>{q("-3/2"), q("-4/3")}));
    CHECK(verify_model(d).pass);
    CHECK(matrix_on_monomials(d.L1, 3) == build_rep(d.params, 3).L1);
}

TEST_CASE("differential model matches build_rep for m <= 8") {
    for (int m = 0; m <= 8; ++m)
        for (const char* a : {"1/3", "-2/5", "5/7"}) {
            S3Params p = S3Params::finite(m, q(a));
            DiffModel d = model_differential(p);
            TridiagonalRep r = build_rep(p, m + 1);
            CHECK(matrix_on_monomials(d.X, m + 1) == r.X);
            CHECK(matrix_on_monomials(d.L1, m + 1) == r.L1);
            CHECK(matrix_on_monomials(d.L2, m + 1) == r.L2);
        }
}

TEST_CASE("every model passes exact verification on random parameters") {
    for (int k = 0; k < 10; ++k) {
        GQ mu(testgen::rat(20)), a(testgen::rat(20));
        CHECK(verify_model(model_differential(S3Params::bounded_below(mu, a))).pass);
        CHECK(verify_model(model_difference_infinite(mu, a)).pass);
        int m = k % 5;
        GQ af(testgen::rat(20));
        if (((GQ(2) * af - GQ(1)).is_integer())) continue;
        CHECK(verify_model(model_difference_finite(m, af)).pass);
    }
}

TEST_CASE("L1 spectrum") {
    S3Params p = S3Params::finite(2, q("1/3"));
    CHECK(l1_eigenvalue(q("1/3"), 0) == q("1/3") - q("1/2"));
    CHECK(l1_spectrum_check(p, 1).chi == q("-3/2"));
    GQ sum(0);
    for (int n = 0; n <= 2; ++n) {
        EigenCheck e = l1_spectrum_check(p, n);
        CHECK(e.pass);
        CHECK(e.v.degree() == 2);
        sum += e.chi;
    }
    CHECK(sum == q("-13/2"));
    GQ tr(0);
    TridiagonalRep r = build_rep(p, 3);
    for (int n = 0; n < 3; ++n) tr += r.L1(n, n);
    CHECK(sum == tr);
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= m; ++n) CHECK(l1_spectrum_check(S3Params::finite(m, q("2/7")), n).pass);
    // a - m + j = 0 inside the series
    CHECK_THROWS_AS(l1_spectrum_check(S3Params::finite(3, GQ(2)), 0), MathError);
    CHECK_THROWS_AS(l1_spectrum_check(S3Params::bounded_below(q("1/2"), GQ(0)), 0), MathError);
}

TEST_CASE("L1 eigenvalues are distinct for generic a") {
    GQ a = q("2/7");
    for (int n = 0; n < 15; ++n)
        for (int np = 0; np < 15; ++np)
            if (GQ(n + np) != GQ(2) * a - GQ(1)) CHECK((l1_eigenvalue(a, n) == l1_eigenvalue(a, np)) == (n == np));
    // 2a - 1 = n + n' is the degenerate case
    CHECK(l1_eigenvalue(GQ(2), 1) == l1_eigenvalue(GQ(2), 2));
}

TEST_CASE("norms and reproducing kernel") {
    S3Params p = S3Params::finite(2, q("1/3"));
    NormKernel nk = norms_and_kernel(p, 10);
    REQUIRE(nk.kn2.size() == 3);
    CHECK(nk.kn2[1] == q("4/5"));
    CHECK(nk.recursion_ok);
    CHECK(nk.reflection_ok);
    CHECK(nk.kernel(GQ(0)) == Poly(1));

    for (int m = 0; m <= 6; ++m) {
        S3Params f = S3Params::finite(m, q("-3/7"));
        NormKernel k = norms_and_kernel(f, m + 1);
        CHECK(k.recursion_ok);
        CHECK(k.reflection_ok);
        GQ s = q("2/3-1/5i");
        Poly ker = k.kernel(s);
        for (int j = 0; j <= m; ++j) CHECK(k.inner(Poly::monomial(j), ker) == pow(s, j));
        // kernel is the 2F1 series
        GQ t0 = q("3/4");
        CHECK(ker.eval(t0) == hyp_exact({GQ(-m), q("10/7")}, {q("-3/7") - GQ(m)}, t0 * s.conj()));
    }
    NormKernel b = norms_and_kernel(S3Params::bounded_below(q("5/2"), q("1/3")), 12);
    CHECK(b.kn2.size() == 12);
    CHECK(b.recursion_ok);
    CHECK_THROWS_AS(norms_and_kernel(S3Params::bounded_below(q("1/2"), q("-3/2")), 3), MathError);
}

TEST_CASE("norm positivity follows the sign analysis") {
    CHECK(norms_positive(q("3/2"), q("1/2")));
    CHECK(norms_positive(q("5/2"), q("-1/3")));
    CHECK_FALSE(norms_positive(GQ(1), GQ(5)));
    // finite: only n = 1..m matter
    CHECK(norms_positive(GQ(-2), q("5/2")));
    CHECK(norms_positive(GQ(-2), q("1/3")));
    CHECK_FALSE(norms_positive(GQ(-2), q("3/2")));
    // mu = -n0 + t with n0 < a < n0 + 1
    CHECK(norms_positive(q("-1/2"), q("5/4")));
    CHECK(norms_positive(q("-1/2"), q("1/4")));
    CHECK_FALSE(norms_positive(q("-1/2"), q("3/4")));
}

TEST_CASE("weight ODE series") {
    S3Params p = S3Params::bounded_below(GQ(2), q("1/2"));
    auto r2 = weight_series_check(p, WeightBranch::rho2, 30);
    CHECK(r2.exponent == q("5/2"));
    CHECK(r2.residual_zero);
    CHECK(r2.even_in_Q);
    auto r1 = weight_series_check(p, WeightBranch::rho1, 30);
    CHECK(r1.exponent == GQ(0));
    CHECK(r1.residual_zero);
    CHECK(weight_series_check(S3Params::bounded_below(q("2"), q("1/4")), WeightBranch::rho1, 20).exponent ==
          q("1/2"));
    for (int k = 0; k < 10; ++k) {
        S3Params r = S3Params::bounded_below(GQ(testgen::rat()), GQ(testgen::rat()));
        for (auto b : {WeightBranch::rho1, WeightBranch::rho2}) {
            try {
                auto w = weight_series_check(r, b, 15);
                CHECK(w.residual_zero);
                CHECK(w.even_in_Q);
            } catch (const MathError&) {
            }
        }
    }
    CHECK_THROWS_AS(weight_series_check(S3Params::bounded_below(GQ(-3), GQ(0)), WeightBranch::rho2, 10), MathError);
    CHECK_THROWS_AS(weight_series_check(S3Params::bounded_below(GQ(2), GQ(2)), WeightBranch::rho1, 10), MathError);
}

TEST_CASE("Gauss sum identity for the weight integrals") {
    for (auto [mu, a] : {std::pair{"2", "1/4"}, std::pair{"1", "1/2"}, std::pair{"5/3", "-2/7"}}) {
        auto r = gauss_norm_identity(S3Params::bounded_below(q(mu), q(a)));
        CHECK_MESSAGE(r.pass, mu << " " << a << " " << r.rho1.rel_err << " " << r.rho2.rel_err);
        CHECK((r.rho1.ran || r.rho2.ran));
    }
    auto both = gauss_norm_identity(S3Params::bounded_below(GQ(2), q("1/4")));
    CHECK(both.rho1.ran);
    CHECK(both.rho2.ran);
    CHECK(both.rho1.rel_err < 1e-9);
    CHECK(both.rho2.rel_err < 1e-9);
    CHECK_THROWS_AS(gauss_norm_identity(S3Params::bounded_below(GQ(2), GQ(1))), MathError);
    CHECK_THROWS_AS(gauss_norm_identity(S3Params::bounded_below(q("-5/2"), q("1/3"))), MathError);
}

TEST_CASE("dual Hahn model") {
    ShiftModel d = model_difference_finite(2, q("1/3"));
    CHECK(verify_model(d).pass);
    CHECK(dual_hahn_f(2, q("1/3"), 1, GQ(1)) == GQ(0));
    for (int n = 0; n <= 2; ++n) CHECK(d.L1.coeff(0).eval(GQ(n)) == l1_eigenvalue(q("1/3"), n));
    for (int m = 0; m <= 6; ++m) {
        ShiftModel s = model_difference_finite(m, q("-2/5"));
        CHECK(verify_model(s).pass);
        CHECK(grid_consistency(s));
    }
    CHECK_THROWS_AS(model_difference_finite(3, q("3/2")), MathError);
}

TEST_CASE("dual Hahn orthogonality") {
    auto [s01, c01] = dual_hahn_orthogonality(2, q("1/3"), 0, 1);
    CHECK(s01 == GQ(0));
    CHECK(c01 == GQ(0));
    auto [s00, c00] = dual_hahn_orthogonality(2, q("1/3"), 0, 0);
    CHECK(s00 == q("14/5"));
    CHECK(c00 == q("14/5"));
    auto [s11, c11] = dual_hahn_orthogonality(2, q("1/3"), 1, 1);
    CHECK(s11 == q("7/2"));
    CHECK(c11 == q("7/2"));
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= m; ++n)
            for (int np = 0; np <= m; ++np) {
                auto [s, c] = dual_hahn_orthogonality(m, q("-3/8"), n, np);
                CHECK(s == c);
            }
    CHECK_THROWS_AS(dual_hahn_orthogonality(2, q("1/2"), 0, 0), MathError);
}

TEST_CASE("continuous dual Hahn model") {
    ShiftModel c = model_difference_infinite(GQ(2), q("1/2"));
    CHECK(verify_model(c).pass);
    CHECK(c.L1 == ShiftOp::mul(I_, RatFunc(Poly::t() * Poly::t())));
    CHECK(cdh_s(GQ(2), q("1/2"), 0) == Poly(1));
    CHECK(cdh_basis_consistency(c, 6));
    CHECK(cdh_basis_consistency(model_difference_infinite(q("7/3"), q("-2/5+1/3i")), 5));
}

TEST_CASE("continuous dual Hahn orthogonality") {
    auto off = cdh_orthogonality_numeric(1.5, 0.25, 0, 1);
    CHECK(off.pass);
    CHECK(std::abs(off.integral) < 1e-6 * off.scale);
    auto diag = cdh_orthogonality_numeric(1.5, 0.25, 0, 0);
    CHECK(diag.pass);
    CHECK(std::abs(diag.expected - std::tgamma(1.5) * std::tgamma(0.75) * std::tgamma(1.75)) < 1e-12);
    CHECK(diag.min_weight > 0);
    CHECK(diag.tail_bound < 1e-12 * diag.scale);
    for (int n = 0; n <= 3; ++n)
        for (int np = 0; np <= 3; ++np) CHECK(cdh_orthogonality_numeric(2.2, -0.3, n, np).pass);
    CHECK_THROWS_AS(cdh_orthogonality_numeric(0.1, 0.25, 0, 0), MathError);
    CHECK_THROWS_AS(cdh_orthogonality_numeric(2.0, 0.75, 0, 0), MathError);
}

TEST_CASE("basis tabulation") {
    S3Params p = S3Params::finite(2, q("1/3"));
    std::string csv = tabulate_basis("dual_hahn", p, 1, {GQ(0), GQ(1)});
    CHECK(csv.rfind("t,n,re,im\n", 0) == 0);
    CHECK(csv.find("1,1,0,0\n") != std::string::npos);
    CHECK_THROWS_AS(tabulate_basis("nope", p, 1, {GQ(0)}), MathError);
}
