#include <cmath>
#include <random>

#include "doctest.h"
#include "qalg/classical.hpp"
#include "qalg/s3models.hpp"
#include "random_gen.hpp"

using namespace qalg;

static GQ q(const char* s) { return GQ::parse(s); }
static const PhaseExpr c = PhaseExpr::c(), b = PhaseExpr::beta();

static double at(const PhaseExpr& e, double cc, double bb) { return std::abs(e.eval(cc, bb)); }

TEST_CASE("partial derivatives") {
    PhaseExpr d = pderiv(sin(2 * b), PhaseVar::beta);
    for (double x : {-1.3, 0.2, 0.9}) CHECK(std::abs(d.eval(0.4, x) - 2.0 * std::cos(2 * x)) < 1e-14);
    PhaseExpr g = c * c * c + 2 * c + 5;
    PhaseExpr dg = pderiv(sqrt(g), PhaseVar::c);
    for (double x : {0.3, 1.1}) {
        double gv = x * x * x + 2 * x + 5, gp = 3 * x * x + 2;
        CHECK(std::abs(dg.eval(x, 0.0) - gp / (2 * std::sqrt(gv))) < 1e-14);
    }
    CHECK(pderiv(c, PhaseVar::beta).is_const(0));
    CHECK(pderiv(b, PhaseVar::beta).is_const(1));
    CHECK(pderiv(atan(c), PhaseVar::c).eval(2.0, 0.0) == cplx(0.2));
    CHECK(std::abs(pderiv(log(c), PhaseVar::c).eval(4.0, 0.0) - 0.25) < 1e-15);
    CHECK(std::abs(pderiv(exp(c * b), PhaseVar::beta).eval(0.5, 1.0) - 0.5 * std::exp(0.5)) < 1e-14);
    CHECK(std::abs(pderiv(pow(c, 0.5), PhaseVar::c).eval(4.0, 0.0) - 0.25) < 1e-15);
}

TEST_CASE("domain flags") {
    PhaseExpr::Eval ctx;
    sqrt(c).eval(-1.0, 0.0, ctx);
    CHECK_FALSE(ctx.ok);
    PhaseExpr::Eval ctx2;
    (PhaseExpr(1) / c).eval(1e-9, 0.0, ctx2);
    CHECK_FALSE(ctx2.ok);
    PhaseExpr::Eval ctx3;
    (PhaseExpr(1) / c + sqrt(c)).eval(0.5, 0.0, ctx3);
    CHECK(ctx3.ok);
}

TEST_CASE("Poisson bracket") {
    CHECK(poisson_bracket(c, b).is_const(-1));
    CHECK(poisson_bracket(b, c).is_const(1));
    PhaseExpr f = sin(c * b) + c * c;
    PhaseExpr ff = poisson_bracket(f, f);
    for (double x : {-1.0, 0.3, 1.7}) CHECK(at(ff, x, 0.7 * x + 0.1) < 1e-14);
    CHECK(poisson_bracket(c, b + c * c / 3 + sin(c)).eval(0.4, 1.0) == cplx(-1));
}

TEST_CASE("bracket algebra on random expressions") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    auto pick = [&](int k) -> PhaseExpr {
        switch (k % 4) {
            case 0: return sin(2 * b) * c + c * c;
            case 1: return exp(b * c / 3) + sqrt(c * c + 1);
            case 2: return cos(b + c) / (c * c + 2) + b * b;
            default: return atan(c * b) + pow(b, 3) * c;
        }
    };
    for (int k = 0; k < 4; ++k) {
        PhaseExpr f = pick(k), g = pick(k + 1), h = pick(k + 2);
        PhaseExpr anti = poisson_bracket(f, g) + poisson_bracket(g, f);
        PhaseExpr jac = poisson_bracket(f, poisson_bracket(g, h)) + poisson_bracket(g, poisson_bracket(h, f)) +
                        poisson_bracket(h, poisson_bracket(f, g));
        PhaseExpr leib = poisson_bracket(f, g * h) - poisson_bracket(f, g) * h - g * poisson_bracket(f, h);
        for (int p = 0; p < 50; ++p) {
            double x = u(gen), y = u(gen);
            double scale = 1 + at(poisson_bracket(f, poisson_bracket(g, h)), x, y) +
                           at(poisson_bracket(g, poisson_bracket(h, f)), x, y);
            CHECK(at(anti, x, y) <= 1e-10 * (1 + at(poisson_bracket(f, g), x, y)));
            CHECK(at(jac, x, y) <= 1e-10 * scale);
            CHECK(at(leib, x, y) <= 1e-10 * (1 + at(poisson_bracket(f, g * h), x, y)));
        }
    }
}

TEST_CASE("classical model examples") {
    std::map<std::string, GQ> p{{"E", GQ(3)}, {"alpha", q("1/4")}};
    auto m1 = classical_model("S3-I", p);
    CHECK(m1.expr("X").kind() == PhaseExpr::Kind::C);
    auto m2 = classical_model("S3-II", p);
    CHECK(m2.expr("L1").kind() == PhaseExpr::Kind::C);
    auto m3 = classical_model("S3-III", p);
    CHECK(std::abs(m3.expr("X").eval(0.5, 2.0) - cplx(0, -2 * 0.75 * 2.0)) < 1e-14);
    // {X, L1} + 2 L2 is exactly zero for model I
    PhaseExpr r = poisson_bracket(m1.expr("X"), m1.expr("L1")) + 2 * m1.expr("L2");
    for (double x : {-1.9, -0.3, 0.4, 1.2}) CHECK(at(r, x, 0.5 - x) < 1e-14);
    CHECK_THROWS_AS(classical_model("S4", p), MathError);
    CHECK_THROWS_AS(classical_model("S3-I", {{"E", GQ(3)}}), MathError);
}

TEST_CASE("every classical model satisfies its Poisson relations") {
    std::map<std::string, GQ> p{{"E", GQ(3)}, {"alpha", q("1/4")}};
    for (const char* sys : {"S3-I", "S3-II", "S3-III", "S3-I-exp"}) {
        auto rep = verify_poisson_numeric(classical_model(sys, p), 100, 1e-9, 11);
        CHECK_MESSAGE(rep.pass, sys << " " << rep.max_residual << " " << rep.points_used);
        CHECK(rep.points_used == 100);
        CHECK(rep.max_residual_by_relation.size() == 4);
    }
    auto s9 = classical_model("S9", {{"a1", q("3/16")}, {"a2", q("3/16")}, {"a3", q("7/16")}, {"E", GQ(2)}});
    auto rep = verify_poisson_numeric(s9, 100, 1e-9, 11);
    CHECK_MESSAGE(rep.pass, rep.max_residual);
    CHECK(rep.max_residual_by_relation.size() == 3);
    // other parameters, other seeds
    for (auto [E, al] : {std::pair{"-5/3", "3/7"}, std::pair{"7/2", "-1/5"}}) {
        std::map<std::string, GQ> pp{{"E", q(E)}, {"alpha", q(al)}};
        for (const char* sys : {"S3-I", "S3-II", "S3-III"}) {
            auto r = verify_poisson_numeric(classical_model(sys, pp), 100, 1e-9, 5);
            CHECK_MESSAGE(r.pass, sys << " " << E << " " << r.max_residual << " " << r.points_used);
        }
    }
}

TEST_CASE("Poisson check detects a wrong model and reports no admissible points") {
    auto m = classical_model("S3-I", {{"E", GQ(3)}, {"alpha", q("1/4")}});
    m.exprs[2].second = m.exprs[2].second * 1.001;
    // relations rebuilt from the perturbed expressions
    auto bad = canonical_shift(m, PhaseExpr(0));
    auto rep = verify_poisson_numeric(bad, 50, 1e-9, 3);
    CHECK_FALSE(rep.pass);
    CHECK(rep.max_residual > 1e-4);
    ClassicalModel empty = classical_model("S3-I", {{"E", GQ(3)}, {"alpha", q("1/4")}});
    empty.exprs.push_back({"Z", sqrt(-1 - c * c)});
    CHECK_THROWS_AS(verify_poisson_numeric(empty, 10), MathError);
    CHECK_THROWS_AS(verify_poisson_numeric(empty, 0), MathError);
}

TEST_CASE("same seed, same report") {
    auto m = classical_model("S3-II", {{"E", GQ(3)}, {"alpha", q("1/4")}});
    auto a = verify_poisson_numeric(m, 40, 1e-9, 99), b2 = verify_poisson_numeric(m, 40, 1e-9, 99);
    CHECK(a.max_residual == b2.max_residual);
    CHECK(a.attempts == b2.attempts);
}

TEST_CASE("canonical shifts") {
    auto m = classical_model("S3-I", {{"E", GQ(3)}, {"alpha", q("1/4")}});
    auto same = canonical_shift(m, PhaseExpr(0));
    for (size_t k = 0; k < m.exprs.size(); ++k)
        CHECK(std::abs(same.exprs[k].second.eval(0.3, 1.1) - m.exprs[k].second.eval(0.3, 1.1)) == 0);
    PhaseExpr g = c * c / 3 + sin(c);
    auto s = canonical_shift(m, g);
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(-2, 2);
    int checked = 0;
    for (int k = 0; k < 200 && checked < 50; ++k) {
        double x = u(gen), y = u(gen);
        double y2 = y + g.eval(x, 0).real();
        if (!s.admissible(x, y) || !m.admissible(x, y2)) continue;
        ++checked;
        auto r1 = s.residuals_at(x, y), r0 = m.residuals_at(x, y2);
        for (size_t i = 0; i < r1.size(); ++i) CHECK(std::abs(r1[i] - r0[i]) <= 1e-10);
    }
    CHECK(checked == 50);
    CHECK(verify_poisson_numeric(s, 100, 1e-9).pass);
    // the exponential rescaling is the shift by -(i/4) log disc
    GQ E(3), al = q("1/4");
    PhaseExpr disc = pow(c, 4) - 2 * PhaseExpr((E + al).to_complex()) * c * c + PhaseExpr(((E - al) * (E - al)).to_complex());
    auto ex = canonical_shift(m, PhaseExpr(cplx(0, -0.25)) * log(disc));
    CHECK(verify_poisson_numeric(ex, 100, 1e-9).pass);
    auto ref = classical_model("S3-I-exp", {{"E", E}, {"alpha", al}});
    for (double x : {0.2, 0.7, 1.9})
        for (const char* n : {"L1", "L2"})
            CHECK(std::abs(ex.expr(n).eval(x, 0.4) - ref.expr(n).eval(x, 0.4)) < 1e-12 * (1 + at(ref.expr(n), x, 0.4)));
}

TEST_CASE("model III symbols reproduce the classical expressions") {
    GQ E = q("-5/3"), al = q("3/7");
    auto m = classical_model("S3-III", {{"E", E}, {"alpha", al}});
    auto sym = model3_symbols(E, al);
    for (double cc : {0.3, 1.4})
        for (double bb : {-0.7, 1.2})
            for (const char* n : {"X", "K"}) {
                cplx s = 0;
                for (size_t k = 0; k < sym[n].size(); ++k) s += sym[n][k].eval(cplx(cc)) * std::pow(cplx(bb), int(k));
                CHECK(std::abs(s - m.expr(n).eval(cc, bb)) < 1e-12 * (1 + std::abs(s)));
            }
}

TEST_CASE("direct quantization of model III") {
    GQ E = q("-5/3"), al = q("3/7");
    auto m = classical_model("S3-III", {{"E", E}, {"alpha", al}});
    auto qm = quantize(m, "direct");
    CHECK(qm.verify.pass);
    CHECK(qm.gauge_free.empty());
    auto ref = model3q_reference(E, al);
    CHECK(qm.diff.at("X") == ref.at("X"));
    CHECK(qm.diff.at("K") == ref.at("K"));
    CHECK(qm.note.find("leading symbols match") != std::string::npos);
    auto sym = model3_symbols(E, al);
    CHECK(qm.diff.at("X").coeff(1) == sym["X"][1]);
    CHECK(qm.diff.at("K").coeff(4) == sym["K"][4]);
    CHECK_THROWS_AS(quantize(m, "shift"), MathError);
    CHECK_THROWS_AS(quantize(m, "hodograph"), MathError);
}

TEST_CASE("reference fourth-order triple passes on random parameters") {
    for (int k = 0; k < 10; ++k) {
        GQ E(testgen::rat(20)), al(testgen::rat(20));
        auto p = model3q_reference(E, al);
        CHECK(verify_quadratic_algebra(p, model3_spec(E, al)).pass);
    }
}

TEST_CASE("calibration") {
    GQ E = q("2/3"), al = q("-1/5");
    // exact input: zero corrections
    auto ref = model3q_reference(E, al);
    Ansatz<DiffOp> exact;
    exact.set("S", ref.at("S"));
    exact.set("X", ref.at("X"));
    exact.set("K", ref.at("K"));
    RatFunc t(Poly::t());
    exact.add("X", exact.unknown("u"), DiffOp(t));
    exact.add("K", exact.unknown("v"), DiffOp(GQ(1)));
    exact.add("K", exact.unknown("w"), DiffOp(std::vector<RatFunc>{RatFunc(), RatFunc(t)}));
    auto c0 = calibrate_corrections(exact, model3_spec(E, al));
    CHECK(c0.consistent);
    CHECK(c0.values == std::vector<GQ>{GQ(0), GQ(0), GQ(0)});
    CHECK(c0.verify.pass);

    // skeleton from the classical symbols
    auto c1 = calibrate_corrections(model3_ansatz(E, al), model3_spec(E, al));
    CHECK(c1.consistent);
    CHECK(c1.verify.pass);
    CHECK(c1.values[0] == q("2i"));

    // wrong leading symbol
    Ansatz<DiffOp> bad = model3_ansatz(E, al);
    auto sym = model3_symbols(E, al);
    sym["K"][4] = sym["K"][4] * RatFunc(GQ(2));
    bad.set("K", DiffOp(sym["K"]));
    for (int u = 2; u < 11; ++u) {
        int order = u < 10 ? 3 - (u - 2) / 2 : 0;
        std::vector<RatFunc> co(order + 1);
        co[order] = u == 10 ? RatFunc(Poly(1), Poly::linear(al)) : (u % 2 == 0 ? RatFunc(1) : t);
        bad.add("K", u, DiffOp(co));
    }
    auto c2 = calibrate_corrections(bad, model3_spec(E, al));
    CHECK_FALSE(c2.consistent);
    CHECK_FALSE(c2.message.empty());
    CHECK_FALSE(c2.verify.pass);
}

TEST_CASE("staged solver") {
    std::vector<std::string> nm{"x", "y", "z"};
    MPoly x = MPoly::var(0), y = MPoly::var(1), z = MPoly::var(2);
    // x = 2, x y = 6, y z + z = 8
    auto st = solve_staged({x + MPoly(GQ(-2)), x * y + MPoly(GQ(-6)), y * z + z + MPoly(GQ(-8))}, 3, nm);
    CHECK(st.consistent);
    CHECK(st.solved.at(0).constant() == GQ(2));
    CHECK(st.solved.at(1).constant() == GQ(3));
    CHECK(st.solved.at(2).constant() == GQ(2));
    auto bad = solve_staged({x + MPoly(GQ(-2)), x * x + MPoly(GQ(-5))}, 1, nm);
    CHECK_FALSE(bad.consistent);
    auto stuck = solve_staged({x * x + MPoly(GQ(-4))}, 1, nm);
    CHECK_FALSE(stuck.consistent);
    // y free
    auto fam = solve_staged({x + y + MPoly(GQ(-1))}, 2, nm);
    CHECK(fam.consistent);
    CHECK(fam.solved.size() == 1);
}

TEST_CASE("hodograph quantization of model I") {
    for (auto [E, al] : {std::pair{"-5/3", "3/7"}, std::pair{"3", "1/4"}}) {
        auto m = classical_model("S3-I", {{"E", q(E)}, {"alpha", q(al)}});
        auto qm = quantize(m, "hodograph");
        CHECK(qm.verify.pass);
        CHECK(qm.gauge_free.empty());
        CHECK(qm.variable == "tau");
        CHECK(qm.diff.at("L1").order() == 4);
        CHECK(qm.diff.at("L2").order() == 4);
        CHECK(qm.diff.at("X").order() == 1);
    }
    CHECK_THROWS_AS(quantize(classical_model("S3-I", {{"E", GQ(3)}, {"alpha", q("1/4")}}), "direct"), MathError);
}

TEST_CASE("shift quantization of model II") {
    GQ mu = q("3/2"), a = q("1/4");
    auto m = classical_model("S3-II", {{"mu", mu}, {"a", a}});
    auto qm = quantize(m, "shift");
    CHECK(qm.verify.pass);
    ShiftModel ref = model_difference_infinite(mu, a);
    CHECK(qm.difference.at("X") == ref.X);
    CHECK(qm.difference.at("L1") == ref.L1);
    CHECK(qm.difference.at("L2") == ref.L2);
    CHECK(shift_product(m.params.at("E"), m.params.at("alpha")) == shift_product_factored(mu, a));
    for (int k = 0; k < 10; ++k) {
        GQ mu2(testgen::rat(20)), a2(testgen::rat(20));
        auto m2 = classical_model("S3-II", {{"mu", mu2}, {"a", a2}});
        CHECK(shift_product(m2.params.at("E"), m2.params.at("alpha")) == shift_product_factored(mu2, a2));
        CHECK(quantize(m2, "shift").verify.pass);
        // any other gauge split passes too
        RatFunc h(Poly::linear(q("1/3")) * Poly::linear(mu2), Poly::t());
        auto g = quantize(m2, "shift", h);
        CHECK(g.verify.pass);
        CHECK(g.difference.at("X").coeff(1) == h);
    }
    // the alternate split h = iP/(2t), m = -i Pbar/(2t) gives minus the constraint
    const GQ i(0, 1);
    Poly it = i * Poly::t();
    Poly P = (Poly(q("1/2") - a) - it) * (Poly(mu + a - q("1/2")) - it);
    Poly Pb = (Poly(q("1/2") - a) + it) * (Poly(mu + a - q("1/2")) + it);
    RatFunc ph(i * P, Poly(2) * Poly::t()), pm(-i * Pb, Poly(2) * Poly::t());
    CHECK(ph * pm.shift(i) == RatFunc(GQ(-1)) * shift_product(m.params.at("E"), m.params.at("alpha")));
    CHECK(quantize(m, "shift", ph).verify.pass);
    auto noparams = classical_model("S3-II", {{"E", GQ(3)}, {"alpha", q("1/4")}});
    CHECK_THROWS_AS(quantize(noparams, "shift"), MathError);
    CHECK(quantize(noparams, "shift", RatFunc(Poly::t())).verify.pass);
}

TEST_CASE("second-order trig realization reduces to the differential model") {
    for (int m = 0; m <= 4; ++m)
        for (const char* a : {"1/3", "-2/5"}) {
            auto res = trig_realization_check(m, q(a));
            int hits = 0;
            for (const auto& r : res) {
                CHECK(r.algebra);
                hits += r.matches;
            }
            CHECK_MESSAGE(hits >= 1, m << " " << a);
        }
}
