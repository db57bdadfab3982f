#include "qalg/s3rep.hpp"

#include <cmath>

namespace qalg {

namespace {

const GQ half = GQ::rat(1, 2);
const GQ quarter = GQ::rat(1, 4);

GQ H_from(const GQ& mu, const GQ& a) {
    GQ s = mu - GQ(1) + a;
    return quarter - s * s;
}

}  // namespace

S3Params S3Params::finite(int m, const GQ& a) {
    if (m < 0) throw MathError("finite representation needs m >= 0");
    S3Params p = bounded_below(GQ(-m), a);
    p.kind = RepKind::finite;
    p.m = m;
    return p;
}

S3Params S3Params::bounded_below(const GQ& mu, const GQ& a) {
    S3Params p;
    p.mu = mu;
    p.a = a;
    p.alpha = quarter - a * a;
    p.H = H_from(mu, a);
    p.kappa = GQ(0);
    p.kind = RepKind::bounded_below;
    if (mu.is_integer() && sgn(mu.re()) <= 0) {
        p.kind = RepKind::finite;
        p.m = static_cast<int>(-mu.to_long());
    }
    return p;
}

S3Params S3Params::generic(const GQ& mu, const GQ& H, const GQ& alpha) {
    S3Params p;
    p.mu = mu;
    p.H = H;
    p.alpha = alpha;
    p.kappa = kappa_general(mu, H, alpha);
    p.kind = RepKind::generic;
    p.has_a = exact_sqrt(quarter - alpha, p.a);
    return p;
}

std::string S3Params::kind_name() const {
    switch (kind) {
        case RepKind::finite: return "finite";
        case RepKind::bounded_below: return "bounded_below";
        default: return "generic";
    }
}

GQ kappa_general(const GQ& mu, const GQ& H, const GQ& alpha) {
    GQ s = H + alpha;
    GQ mu2 = mu * mu;
    return mu2 * mu2 / GQ(16) - mu2 * mu / GQ(4) + (s + GQ::rat(5, 2)) * mu2 / GQ(8) - (half + s) * mu / GQ(4) +
           s / GQ(8) + H * H / GQ(16) - H * alpha / GQ(8) + alpha * alpha / GQ(16);
}

GQ F_quartic(const GQ& mu, const GQ& H, const GQ& alpha, const GQ& kappa, long n) {
    GQ s = H + alpha, x(n);
    GQ mu2 = mu * mu;
    GQ c3 = GQ(2) * mu - GQ(2);
    GQ c2 = GQ::rat(3, 2) * mu2 - GQ(3) * mu + s / GQ(2) + GQ::rat(5, 4);
    GQ c1 = mu2 * mu / GQ(2) - GQ::rat(3, 2) * mu2 + (s / GQ(2) + GQ::rat(5, 4)) * mu - s / GQ(2) - quarter;
    return (((x + c3) * x + c2) * x + c1) * x + kappa;
}

RepCoeffs rep_coefficients(const S3Params& p, long n) {
    RepCoeffs c;
    GQ nn(n);
    GQ nu = GQ(2) * nn + p.mu;
    c.C_diag = (nu * nu + p.H - p.alpha) / GQ(2);
    if (p.kind == RepKind::generic) {
        GQ disc = GQ(1) - GQ(4) * (p.H + p.alpha) + GQ(16) * p.H * p.alpha, r;
        if (!exact_sqrt(disc, r)) throw MathError("root splitting is irrational for these parameters");
        GQ b = GQ(1) - GQ(2) * (p.H + p.alpha);
        GQ rp = (b + r) / GQ(8), rm = (b - r) / GQ(8);
        auto y2 = [&](long k) {
            GQ y = GQ(k) + (p.mu - GQ(1)) / GQ(2);
            return y * y;
        };
        c.C_up = y2(n + 1) - rp;
        c.C_down = y2(n) - rm;
        c.F = F_quartic(p.mu, p.H, p.alpha, p.kappa, n);
    } else {
        c.C_up = (nn + p.mu) * (nn + GQ(1) - p.a);
        c.C_down = nn * (nn + p.mu - GQ(1) + p.a);
        // C(n,n-1) C(n-1,n)
        c.F = (nn - GQ(1) + p.mu) * (nn - p.a) * c.C_down;
    }
    c.D_up = -I_ * c.C_up;
    c.D_diag = GQ(0);
    c.D_down = I_ * c.C_down;
    return c;
}

TridiagonalRep build_rep(const S3Params& p, int N) {
    if (N < 1) throw MathError("representation dimension must be positive");
    if (p.kind == RepKind::finite && N != p.m + 1)
        throw MathError("finite representation has dimension m+1 = " + std::to_string(p.m + 1));
    TridiagonalRep r;
    r.dim = N;
    r.X = r.L1 = r.L2 = Matrix(N);
    for (int n = 0; n < N; ++n) {
        RepCoeffs c = rep_coefficients(p, n);
        r.lambda.push_back(I_ * (GQ(2 * n) + p.mu));
        r.X(n, n) = r.lambda.back();
        r.L1(n, n) = c.C_diag;
        if (n + 1 < N) {
            r.L1(n + 1, n) = c.C_up;
            r.L2(n + 1, n) = c.D_up;
        }
        if (n > 0) {
            r.L1(n - 1, n) = c.C_down;
            r.L2(n - 1, n) = c.D_down;
        }
        r.F.push_back(c.F);
    }
    r.F.push_back(rep_coefficients(p, N).F);
    return r;
}

namespace {

// rows/cols [lo, hi) only
bool zero_between(const Matrix& M, int lo, int hi) {
    for (int i = lo; i < hi; ++i)
        for (int j = lo; j < hi; ++j)
            if (!M(i, j).is_zero()) return false;
    return true;
}

std::pair<int, int> trusted_window(const TridiagonalRep& rep, const S3Params& p) {
    if (p.kind == RepKind::finite) return {0, rep.dim};
    if (p.kind == RepKind::bounded_below) return {0, rep.dim - 2};
    return {2, rep.dim - 2};
}

}  // namespace

std::vector<CheckResult> verify_matrix_structure(const TridiagonalRep& rep, const S3Params& p) {
    auto [lo, hi] = trusted_window(rep, p);
    std::map<std::string, Matrix> ops{{"X", rep.X}, {"L1", rep.L1}, {"L2", rep.L2}};
    AlgebraSpec spec = s3_quantum_spec(p.H, p.alpha);
    auto res = relation_residuals(ops, spec);
    std::vector<CheckResult> out;
    for (size_t k = 0; k < res.size(); ++k) {
        CheckResult c;
        c.name = spec.relations[k].name;
        c.pass = zero_between(res[k], lo, hi);
        if (!c.pass) {
            Matrix w(hi - lo);
            for (int i = lo; i < hi; ++i)
                for (int j = lo; j < hi; ++j) w(i - lo, j - lo) = res[k](i, j);
            c.residual = w.max_abs();
            c.detail = "nonzero residual inside rows/cols " + std::to_string(lo) + ".." + std::to_string(hi - 1);
        } else if (p.kind != RepKind::finite) {
            c.detail = "checked on rows/cols " + std::to_string(lo) + ".." + std::to_string(hi - 1);
        }
        out.push_back(c);
    }
    return out;
}

std::vector<CheckResult> ladder_check(const TridiagonalRep& rep, const S3Params& p) {
    const int N = rep.dim;
    Matrix shift = GQ::rat(1, 2) * (rep.X * rep.X + (p.alpha - p.H) * Matrix::identity(N));
    Matrix Ad = rep.L1 + I_ * rep.L2 + shift;
    Matrix A = rep.L1 - I_ * rep.L2 + shift;
    auto [lo, hi] = trusted_window(rep, p);
    std::vector<CheckResult> out;

    auto run = [&](const std::string& name, auto&& body) {
        CheckResult c;
        c.name = name;
        double worst = 0;
        c.pass = body(worst);
        c.residual = worst;
        out.push_back(c);
    };

    run("raising", [&](double& worst) {
        bool ok = true;
        for (int n = 0; n < N; ++n)
            for (int j = 0; j < N; ++j) {
                GQ want = (j == n + 1) ? GQ(2) * rep_coefficients(p, n).C_up : GQ(0);
                GQ d = Ad(j, n) - want;
                if (!d.is_zero()) ok = false, worst = std::max(worst, d.abs_d());
            }
        return ok;
    });
    run("lowering", [&](double& worst) {
        bool ok = true;
        for (int n = 0; n < N; ++n)
            for (int j = 0; j < N; ++j) {
                GQ want = (j == n - 1) ? GQ(2) * rep_coefficients(p, n).C_down : GQ(0);
                GQ d = A(j, n) - want;
                if (!d.is_zero()) ok = false, worst = std::max(worst, d.abs_d());
            }
        return ok;
    });
    run("[A,A+] cubic in X", [&](double& worst) {
        Matrix c = A * Ad - Ad * A;
        bool ok = true;
        for (int i = lo; i < hi; ++i)
            for (int j = lo; j < hi; ++j) {
                GQ want(0);
                if (i == j) {
                    GQ nu = -I_ * rep.lambda[i];
                    want = GQ(2) * nu * (nu * nu + p.H + p.alpha + half);
                    if (GQ(4) * (rep.F[i + 1] - rep.F[i]) != want) ok = false;
                }
                GQ d = c(i, j) - want;
                if (!d.is_zero()) ok = false, worst = std::max(worst, d.abs_d());
            }
        return ok;
    });
    if (p.kind != RepKind::generic)
        run("A f_0 = 0", [&](double& worst) {
            bool ok = true;
            for (int j = 0; j < N; ++j)
                if (!A(j, 0).is_zero()) ok = false, worst = std::max(worst, A(j, 0).abs_d());
            return ok;
        });
    if (p.kind == RepKind::finite)
        run("A+ f_m = 0", [&](double& worst) {
            // the entry that would leave the space
            GQ c = rep_coefficients(p, p.m).C_up;
            worst = c.abs_d();
            return c.is_zero();
        });
    return out;
}

RepClass classify(const GQ& mu, const GQ& a) {
    if (!mu.is_real() || !a.is_real()) throw MathError("classify needs real parameters");
    RepClass r;
    const Rat& M = mu.re();
    const Rat& A = a.re();
    if (mu.is_integer() && sgn(M) <= 0) {
        int m = static_cast<int>(-mu.to_long());
        r.kind = "finite";
        r.dim = m + 1;
        for (int n = 0; n <= m; ++n) r.spectrum.push_back(GQ(2 * n - m));
        r.differential = true;
        bool lt = A < 1, pos = A + M > 0;
        if (lt || pos) {
            r.difference = true;
        } else if (A == 1 || A + M == 0) {
            r.boundary = true;
            r.note = "a = 1 or a + mu = 0";
        }
        return r;
    }
    r.kind = "bounded_below";
    if (sgn(M) > 0) {
        r.differential = true;
        if (A == 1 || A + M == 0) {
            r.boundary = true;
            r.note = "a = 1 or a + mu = 0";
            return r;
        }
        r.difference = A < 1 && A + M > 0;
        return r;
    }
    // mu = -n0 + t, t in (0,1)
    mpz_class fl;
    Rat neg = -M;
    mpz_fdiv_q(fl.get_mpz_t(), neg.get_num_mpz_t(), neg.get_den_mpz_t());
    Rat n0 = Rat(fl) + 1;
    Rat t = M + n0;
    if (A == n0 || A == n0 + 1 || A == -t || A == 1 - t) {
        r.boundary = true;
        r.note = "a on an endpoint of the allowed intervals";
        return r;
    }
    if ((A > n0 && A < n0 + 1) || (A > -t && A < 1 - t)) {
        r.differential = true;
    } else {
        r.kind = "none";
        r.note = "no unitary bounded-below representation";
    }
    return r;
}

}  // namespace qalg
