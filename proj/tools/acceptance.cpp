// One pass/fail line per acceptance criterion. Exit 0 only when all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "qalg/classical.hpp"
#include "qalg/pdm.hpp"
#include "qalg/s3models.hpp"
#include "qalg/s3rep.hpp"
#include "qalg/s9.hpp"

using namespace qalg;

namespace {

std::mt19937_64 rng(20240611);

GQ rnd(int bound = 20) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return GQ(r);
}

GQ q(const char* s) { return GQ::parse(s); }

const char* kA[] = {"1/3", "-2/5", "5/7"};

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

bool all_pass(const std::vector<CheckResult>& cs) {
    for (const auto& c : cs)
        if (!c.pass) return false;
    return true;
}

Outcome c1() {
    Outcome o;
    for (int m = 0; m <= 8; ++m)
        for (const char* a : kA) {
            S3Params p = S3Params::finite(m, q(a));
            o.require(all_pass(verify_matrix_structure(build_rep(p, m + 1), p)),
                      "m=" + std::to_string(m) + " a=" + a);
        }
    return o;
}

// draws until the model builds
template <class F>
bool random_tuple(F&& f) {
    for (int tries = 0; tries < 100; ++tries) try {
            return f();
        } catch (const MathError&) {
        }
    return false;
}

Outcome c2() {
    Outcome o;
    for (int k = 0; k < 10; ++k) {
        o.require(random_tuple([] {
                      return verify_model(model_differential(S3Params::bounded_below(rnd(), rnd()))).pass;
                  }),
                  "differential model");
        o.require(random_tuple([k] {
                      GQ a = rnd();
                      if ((GQ(2) * a - GQ(1)).is_integer()) throw MathError("degenerate");
                      return verify_model(model_difference_finite(k % 6, a)).pass;
                  }),
                  "finite difference model");
        o.require(random_tuple([] { return verify_model(model_difference_infinite(rnd(), rnd())).pass; }),
                  "infinite difference model");
    }
    return o;
}

Outcome c3() {
    Outcome o;
    for (int m = 0; m <= 8; ++m)
        for (const char* a : kA) {
            S3Params p = S3Params::finite(m, q(a));
            DiffModel d = model_differential(p);
            TridiagonalRep r = build_rep(p, m + 1);
            o.require(matrix_on_monomials(d.X, m + 1) == r.X && matrix_on_monomials(d.L1, m + 1) == r.L1 &&
                          matrix_on_monomials(d.L2, m + 1) == r.L2,
                      "m=" + std::to_string(m) + " a=" + a);
        }
    return o;
}

Outcome c4() {
    Outcome o;
    for (const char* a : {"2/7", "-2/5"})
        for (int m = 0; m <= 6; ++m) {
            S3Params p = S3Params::finite(m, q(a));
            TridiagonalRep r = build_rep(p, m + 1);
            GQ sum, tr;
            for (int n = 0; n <= m; ++n) {
                EigenCheck e = l1_spectrum_check(p, n);
                o.require(e.pass, "eigenfunction n=" + std::to_string(n) + " m=" + std::to_string(m));
                sum += e.chi;
                tr += r.L1(n, n);
            }
            o.require(sum == tr, "trace m=" + std::to_string(m));
        }
    return o;
}

Outcome c5() {
    Outcome o;
    auto [s00, c00] = dual_hahn_orthogonality(2, q("1/3"), 0, 0);
    auto [s11, c11] = dual_hahn_orthogonality(2, q("1/3"), 1, 1);
    o.require(s00 == q("14/5") && c00 == q("14/5"), "n=n'=0 value");
    o.require(s11 == q("7/2") && c11 == q("7/2"), "n=n'=1 value");
    for (const char* a : kA)
        for (int m = 0; m <= 8; ++m)
            for (int n = 0; n <= m; ++n)
                for (int np = 0; np <= m; ++np) {
                    auto [s, c] = dual_hahn_orthogonality(m, q(a), n, np);
                    o.require(s == c, "m=" + std::to_string(m) + " a=" + a);
                }
    return o;
}

Outcome c6() {
    Outcome o;
    double worst = 0;
    for (int n = 0; n <= 3; ++n)
        for (int np = 0; np <= 3; ++np) {
            CdhReport r = cdh_orthogonality_numeric(1.5, 0.25, n, np, 1e-6);
            worst = std::max(worst, r.rel_err);
            o.require(r.pass, "n=" + std::to_string(n) + " n'=" + std::to_string(np));
        }
    if (o.pass) o.detail = "max rel err " + sci(worst);
    return o;
}

// diagonal of [A, A+] against 2(F_{n+1} - F_n) on rows where the truncation is exact
Outcome c7() {
    Outcome o;
    bool annihilates = true, two = true, four = true;
    auto run = [&](const S3Params& p, int N, int rows) {
        TridiagonalRep rep = build_rep(p, N);
        Matrix shift = GQ::rat(1, 2) * (rep.X * rep.X + (p.alpha - p.H) * Matrix::identity(N));
        Matrix Ad = rep.L1 + I_ * rep.L2 + shift, A = rep.L1 - I_ * rep.L2 + shift;
        Matrix c = A * Ad - Ad * A;
        for (int n = 0; n < rows; ++n) {
            GQ d = rep.F[n + 1] - rep.F[n];
            two = two && c(n, n) == GQ(2) * d;
            four = four && c(n, n) == GQ(4) * d;
        }
        for (int j = 0; j < N; ++j) annihilates = annihilates && A(j, 0).is_zero();
    };
    for (const char* a : kA)
        for (int m = 0; m <= 6; ++m) run(S3Params::finite(m, q(a)), m + 1, m + 1);
    run(S3Params::bounded_below(GQ(2), q("1/2")), 10, 9);
    run(S3Params::bounded_below(q("5/3"), q("-2/7")), 10, 9);
    o.require(annihilates, "A f_0 != 0");
    o.require(two, std::string("diagonal is not 2(F_{n+1}-F_n)") + (four ? "; it equals 4(F_{n+1}-F_n)" : ""));
    return o;
}

Outcome c8() {
    Outcome o;
    std::map<std::string, GQ> s3{{"E", q("-5/3")}, {"alpha", q("3/7")}};
    std::map<std::string, GQ> s9{{"a1", q("3/16")}, {"a2", q("3/16")}, {"a3", q("7/16")}, {"E", GQ(2)}};
    double worst = 0;
    for (const char* sys : {"S3-I", "S3-II", "S3-III", "S9"}) {
        ClassicalModel m = classical_model(sys, std::string(sys) == "S9" ? s9 : s3);
        PoissonReport r = verify_poisson_numeric(m, 100, 1e-9, 1);
        worst = std::max(worst, r.max_residual);
        o.require(r.pass && r.points_used >= 100, sys);
    }
    if (o.pass) o.detail = "max rel residual " + sci(worst);
    return o;
}

Outcome c9() {
    Outcome o;
    GQ mu = q("3/2"), a = q("1/4");
    QuantizedModel s = quantize(classical_model("S3-II", {{"mu", mu}, {"a", a}}), "shift");
    ShiftModel ref = model_difference_infinite(mu, a);
    o.require(s.verify.pass && s.difference.at("X") == ref.X && s.difference.at("L1") == ref.L1 &&
                  s.difference.at("L2") == ref.L2,
              "shift quantization differs from the difference model");
    GQ sft = mu - GQ(1) + a;
    GQ E = GQ::rat(1, 4) - sft * sft, al = GQ::rat(1, 4) - a * a;
    o.require(shift_product(E, al) == shift_product_factored(mu, a), "product constraint");
    GQ E3 = q("-5/3"), a3 = q("3/7");
    QuantizedModel d = quantize(classical_model("S3-III", {{"E", E3}, {"alpha", a3}}), "direct");
    auto sym = model3_symbols(E3, a3);
    const DiffOp &X = d.diff.at("X"), &K = d.diff.at("K");
    o.require(d.verify.pass, "direct quantization fails verification");
    o.require(X.order() == 1 && X.coeff(1) == sym["X"][1] && K.order() == 4 && K.coeff(4) == sym["K"][4],
              "leading symbols");
    return o;
}

Outcome c10() {
    Outcome o;
    int done = 0;
    while (done < 10) {
        S9Params p = S9Params::make(rnd(12), rnd(12), rnd(12), rnd(12));
        o.require(s9_verify(p).pass, "s9_verify");
        try {
            WilsonForm w = wilson_form(p, 4);
            o.require(w.conjugation_ok && w.degree_ok && w.wilson_eigen_ok, "Wilson form");
        } catch (const MathError&) {
            continue;  // degenerate lower parameter
        }
        ++done;
    }
    return o;
}

Outcome c11() {
    Outcome o;
    for (auto [mu, a] : {std::pair{"2", "1/2"}, std::pair{"2", "1/4"}}) {
        S3Params p = S3Params::bounded_below(q(mu), q(a));
        for (auto b : {WeightBranch::rho1, WeightBranch::rho2})
            o.require(weight_series_check(p, b, 30).residual_zero, std::string("series mu=") + mu + " a=" + a);
    }
    GaussReport g = gauss_norm_identity(S3Params::bounded_below(GQ(2), q("1/4")), 1e-9);
    o.require(g.pass && g.rho1.ran && g.rho2.ran, "Gauss sum identity");
    if (o.pass) o.detail = "rel err " + sci(std::max(g.rho1.rel_err, g.rho2.rel_err));
    return o;
}

Outcome c12() {
    Outcome o;
    for (const char* k : {"1/2", "3/2", "5/2", "7/3"}) {
        for (int N = 0; N <= 8; ++N)
            o.require(eigen_correspondence(PdmParams::make(GQ(1), q(k), N)).pass, std::string("k=") + k);
        GQ a = GQ::rat(1, 2) - q(k);
        for (int m = 0; m <= 10; ++m) {
            ParityBasis b = parity_basis(m, a);
            size_t h = static_cast<size_t>(m / 2);
            bool dims = m % 2 == 0 ? b.plus.size() == h + 1 && b.minus.size() == h
                                   : b.plus.size() == h + 1 && b.minus.size() == h + 1;
            o.require(dims && b.orthonormal() && b.P_involution(), "parity m=" + std::to_string(m));
        }
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* what;
        double limit_s;  // 0 means none
        std::function<Outcome()> run;
    };
    std::vector<Criterion> cs{
        {1, "exact matrix structure, m <= 8", 1, c1},
        {2, "exact operator identities on random tuples", 10, c2},
        {3, "monomial matrices equal build_rep", 0, c3},
        {4, "L1 spectrum and trace", 0, c4},
        {5, "dual Hahn orthogonality", 0, c5},
        {6, "continuous dual Hahn orthogonality", 5, c6},
        {7, "ladder structure", 0, c7},
        {8, "classical models", 0, c8},
        {9, "quantization round trips", 0, c9},
        {10, "S9 quantum and Wilson form", 0, c10},
        {11, "weight ODE and Gauss sum", 0, c11},
        {12, "PDM correspondence and parity basis", 0, c12},
    };
    int failed = 0;
    for (auto& c : cs) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && s > c.limit_s) o.require(false, "over the time limit");
        failed += !o.pass;
        std::printf("criterion %2d: %s  %s (%.3f s)%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.what, s,
                    o.detail.empty() ? "" : "  ", o.detail.c_str());
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(cs.size()) - failed, cs.size());
    return failed ? 1 : 0;
}
