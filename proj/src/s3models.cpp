#include "qalg/s3models.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace qalg {

namespace {

const GQ half = GQ::rat(1, 2);
const GQ quarter = GQ::rat(1, 4);
const double kPi = 3.14159265358979323846;

Poly P(std::initializer_list<GQ> c) { return Poly(std::vector<GQ>(c)); }

}  // namespace

VerifyReport verify_model(const DiffModel& m) {
    return verify_quadratic_algebra(m.ops(), s3_quantum_spec(m.params.H, m.params.alpha));
}
VerifyReport verify_model(const ShiftModel& m) {
    return verify_quadratic_algebra(m.ops(), s3_quantum_spec(m.params.H, m.params.alpha));
}

DiffModel model_differential(const S3Params& p) {
    if (p.kind == RepKind::generic) throw MathError("differential model needs a lowest-weight representation");
    const GQ m = -p.mu, a = p.a;
    DiffModel r;
    r.kind = "differential";
    r.params = p;
    r.X = DiffOp(std::vector<RatFunc>{RatFunc(-I_ * m), RatFunc(P({0, GQ(2) * I_}))});
    r.L1 = DiffOp(std::vector<RatFunc>{
        RatFunc(P({a * (m + GQ(1)) - m - half, m * (a - GQ(1))})),
        RatFunc(P({a - m, GQ(2) * (GQ(1) - m), GQ(2) - a - m})),
        RatFunc(P({0, 1, 2, 1})),
    });
    r.L2 = DiffOp(std::vector<RatFunc>{
        RatFunc(P({0, -I_ * m * (a - GQ(1))})),
        RatFunc(P({I_ * (a - m), 0, I_ * (a + m - GQ(2))})),
        RatFunc(P({0, I_, 0, -I_})),
    });
    return r;
}

GQ l1_eigenvalue(const GQ& a, long n) {
    GQ s = GQ(n) - a + half;
    return a * a - quarter - s * s;
}

EigenCheck l1_spectrum_check(const S3Params& p, int n) {
    if (p.kind != RepKind::finite) throw MathError("eigenfunctions are tabulated for finite representations");
    if (n < 0 || n > p.m) throw MathError("n out of range 0..m");
    const GQ a = p.a, m(p.m);
    // (1+t)^n 2F1(n+1-a, n-m; a-m; -t)
    Poly series;
    GQ c(1);
    for (int k = 0; k <= p.m - n; ++k) {
        series += Poly::monomial(k, c);
        if (k == p.m - n) break;
        GQ den = (a - m + GQ(k)) * GQ(k + 1);
        if (den.is_zero()) throw MathError("hypergeometric denominator pole in eigenfunction");
        c *= -(GQ(n + 1) - a + GQ(k)) * (GQ(n) - m + GQ(k)) / den;
    }
    EigenCheck r;
    r.v = pow(Poly::linear(GQ(1)), n) * series;
    r.chi = l1_eigenvalue(a, n);
    r.pass = model_differential(p).L1.apply(r.v) == r.chi * r.v;
    return r;
}

Poly NormKernel::kernel(const GQ& s) const {
    std::vector<GQ> c;
    GQ sb = s.conj(), pw(1);
    for (const auto& k : kn2) {
        c.push_back(k * pw);
        pw *= sb;
    }
    return Poly(c);
}

GQ NormKernel::inner(const Poly& f, const Poly& g) const {
    GQ r(0);
    for (int n = 0; n <= std::max(f.degree(), g.degree()); ++n) {
        GQ fn = f.coeff(n), gn = g.coeff(n);
        if (fn.is_zero() || gn.is_zero()) continue;
        if (n >= static_cast<int>(kn2.size())) throw MathError("inner product outside the tabulated range");
        if (!kn2[n].is_real()) throw MathError("inner product needs real norms");
        r += fn * gn.conj() / kn2[n];
    }
    return r;
}

NormKernel norms_and_kernel(const S3Params& p, int N) {
    if (p.kind == RepKind::generic) throw MathError("norms need a lowest-weight representation");
    if (p.kind == RepKind::finite) N = std::min(N, p.m + 1);
    NormKernel r;
    const GQ mu = p.mu, a = p.a;
    GQ rec(1);
    r.recursion_ok = true;
    for (int n = 0; n < N; ++n) {
        GQ den = pochhammer(GQ(1), n) * pochhammer(a + mu, n);
        if (den.is_zero()) throw MathError("norm denominator vanishes at n = " + std::to_string(n));
        GQ closed = pochhammer(mu, n) * pochhammer(GQ(1) - a, n) / den;
        if (n > 0) rec *= (GQ(n - 1) + mu) * (GQ(n) - a) / (GQ(n) * (GQ(n - 1) + mu + a));
        if (rec != closed) r.recursion_ok = false;
        r.kn2.push_back(closed);
    }
    r.reflection_ok = true;
    if (p.kind == RepKind::finite)
        for (int n = 0; n <= p.m; ++n)
            if (r.kn2[n] != r.kn2[p.m - n]) r.reflection_ok = false;
    return r;
}

bool norms_positive(const GQ& mu, const GQ& a) {
    if (!mu.is_real() || !a.is_real()) return false;
    const Rat M = mu.re(), A = a.re();
    long last;
    if (mu.is_integer() && sgn(M) <= 0) {
        last = -mu.to_long();
    } else {
        Rat worst = std::max({Rat(Rat(1) - M), Rat(A), Rat(Rat(1) - M - A), Rat(1)});
        mpz_class c;
        mpz_cdiv_q(c.get_mpz_t(), worst.get_num_mpz_t(), worst.get_den_mpz_t());
        last = c.get_si() + 1;
    }
    for (long n = 1; n <= last; ++n) {
        Rat r = (Rat(n - 1) + M) * (Rat(n) - A) / (Rat(n) * (Rat(n - 1) + M + A));
        if (sgn(r) <= 0) return false;
        if (sgn(Rat(n - 1) + M + A) == 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------- weight series

namespace {

// p + q Q with Q^2 fixed
struct QE {
    GQ p, q;
};
QE qadd(const QE& x, const QE& y) { return {x.p + y.p, x.q + y.q}; }
QE qmul(const QE& x, const QE& y, const GQ& Q2) { return {x.p * y.p + x.q * y.q * Q2, x.p * y.q + x.q * y.p}; }
QE qscale(const GQ& s, const QE& x) { return {s * x.p, s * x.q}; }
QE qdiv(const QE& x, const GQ& s) { return {x.p / s, x.q / s}; }

}  // namespace

WeightSeriesReport weight_series_check(const S3Params& p, WeightBranch b, int K) {
    const GQ mu = p.mu, a = p.a;
    const GQ gamma = GQ(1) - mu - a, s = a - mu, pp = GQ(2) - mu + GQ(2) * a - a * mu;
    const GQ Q2 = a * a + (GQ(2) * mu - GQ(8)) * a + mu * mu + GQ(4) * mu - GQ(8);
    WeightSeriesReport r;
    r.branch = b;
    r.Q2 = Q2;
    r.order = K;
    // series x^e sum c_j x^j with c_j = (A)_j (B)_j / ((C)_j j!), A,B = A0 +- Q/2
    GQ e, A0, C, g;
    if (b == WeightBranch::rho2) {
        e = mu + a;
        A0 = (GQ(3) * a + mu) / GQ(2);
        C = mu + a + GQ(1);
        g = gamma;
    } else {
        e = GQ(1) - GQ(2) * a;
        A0 = GQ(1) - (mu + GQ(3) * a) / GQ(2);
        C = GQ(2) - GQ(2) * a;
        g = s + GQ(1) - gamma;  // the equation in w = 1 - zeta
    }
    for (int j = 0; j < K; ++j)
        if ((C + GQ(j)).is_zero()) throw MathError("degenerate exponent: C = " + C.str());
    r.exponent = e;
    QE A{A0, half}, B{A0, -half};
    std::vector<QE> c{{GQ(1), GQ(0)}};
    for (int j = 1; j <= K; ++j) {
        QE f = qmul(qadd(A, {GQ(j - 1), 0}), qadd(B, {GQ(j - 1), 0}), Q2);
        c.push_back(qdiv(qmul(c.back(), f, Q2), (C + GQ(j - 1)) * GQ(j)));
    }
    r.residual_zero = true;
    r.even_in_Q = true;
    for (int j = 0; j <= K; ++j) {
        GQ x = GQ(j) + e;
        QE res = qscale(x * (x - GQ(1) + g), c[j]);
        if (j > 0) {
            GQ y = GQ(j - 1) + e;
            res = qadd(res, qscale(-(y * (x - GQ(2)) + (s + GQ(1)) * y + pp), c[j - 1]));
        }
        if (!res.p.is_zero() || !res.q.is_zero()) r.residual_zero = false;
        if (!c[j].q.is_zero()) r.even_in_Q = false;
        r.coeffs.push_back(c[j].p);
    }
    return r;
}

// ---------------------------------------------------------------- Gauss sums

namespace {

cplx f21(cplx A, cplx B, cplx C, double x) { return hyp_numeric({A, B}, {C}, x).value; }

// x^e 2F1(A,B;C;x)
struct Shape {
    cplx e, A, B, C;
    cplx val(double x) const { return std::pow(cplx(x), e) * f21(A, B, C, x); }
    cplx der(double x) const {
        cplx F = f21(A, B, C, x), dF = A * B / C * f21(A + 1.0, B + 1.0, C + 1.0, x);
        return e * std::pow(cplx(x), e - 1.0) * F + std::pow(cplx(x), e) * dF;
    }
};

cplx integrate_half(const Shape& s) {
    boost::math::quadrature::tanh_sinh<double> ts;
    double re = ts.integrate([&](double x) { return s.val(x).real(); }, 0.0, 0.5, 1e-13);
    double im = ts.integrate([&](double x) { return s.val(x).imag(); }, 0.0, 0.5, 1e-13);
    return {re, im};
}

cplx rgamma(cplx z) {
    if (z.imag() == 0 && z.real() <= 0 && z.real() == std::round(z.real())) return 0.0;
    return 1.0 / gamma_numeric(z);
}

bool near_int(double x) { return std::abs(x - std::round(x)) < 1e-12; }

}  // namespace

GaussReport gauss_norm_identity(const S3Params& p, double tol) {
    if (!p.mu.is_real() || !p.a.is_real()) throw MathError("weight integrals need real parameters");
    const double mu = p.mu.re().get_d(), a = p.a.re().get_d();
    if (!(a < 1) || !(a + mu > -1)) throw MathError("outside the convergence region (need a < 1 and a + mu > -1)");
    const double gam = 1 - mu - a;
    const cplx Q = std::sqrt(cplx(a * a + (2 * mu - 8) * a + mu * mu + 4 * mu - 8));
    const cplx al = (a - mu + Q) / 2.0, be = (a - mu - Q) / 2.0;

    GaussReport r;
    r.tol = tol;
    r.closed = gamma_numeric(2 - 2 * a) * gamma_numeric(a + mu + 1) * rgamma(2.0 - al) * rgamma(2.0 - be);

    // local solutions at zeta = 0 and at w = 1 - zeta = 0
    Shape u1{0.0, al, be, gam}, u2{1 - gam, al - gam + 1.0, be - gam + 1.0, 2 - gam};
    Shape v1{0.0, al, be, 2 * a}, v2{1 - 2 * a, al - 2 * a + 1.0, be - 2 * a + 1.0, 2 - 2 * a};

    auto connect = [](const Shape& b1, const Shape& b2, cplx f, cplx df, cplx& c1, cplx& c2) {
        cplx y1 = b1.val(0.5), y2 = b2.val(0.5), d1 = b1.der(0.5), d2 = b2.der(0.5);
        cplx W = y1 * d2 - y2 * d1;
        c1 = (f * d2 - y2 * df) / W;
        c2 = (y1 * df - f * d1) / W;
    };

    auto finish = [&](GaussBranch& g, cplx I) {
        g.ran = true;
        g.integral = I;
        g.rel_err = std::abs(I - r.closed) / std::abs(r.closed);
    };

    // rho1 = v2 in w; on zeta in [0,1/2] rewrite in u1, u2
    if (near_int(gam)) {
        r.rho1.skipped = "mu + a integer: logarithmic case";
    } else {
        cplx c1, c2;
        connect(u1, u2, v2.val(0.5), -v2.der(0.5), c1, c2);
        finish(r.rho1, integrate_half(v2) + c1 * integrate_half(u1) + c2 * integrate_half(u2));
    }
    // rho2 = u2 in zeta; on w in [0,1/2] rewrite in v1, v2
    if (near_int(2 * a)) {
        r.rho2.skipped = "2a integer: logarithmic case";
    } else {
        cplx d1, d2;
        connect(v1, v2, u2.val(0.5), -u2.der(0.5), d1, d2);
        finish(r.rho2, integrate_half(u2) + d1 * integrate_half(v1) + d2 * integrate_half(v2));
    }
    r.pass = (r.rho1.ran || r.rho2.ran) && (!r.rho1.ran || r.rho1.rel_err < tol) &&
             (!r.rho2.ran || r.rho2.rel_err < tol);
    return r;
}

// ---------------------------------------------------------------- dual Hahn

ShiftModel model_difference_finite(int m, const GQ& a) {
    S3Params p = S3Params::finite(m, a);
    for (int t = 0; t <= m; ++t)
        if ((GQ(2 * t) - GQ(2) * a + GQ(1)).is_zero()) throw MathError("pole of the model on the grid");
    const Poly t = Poly::t();
    const GQ one(1), M(m);
    Poly den = GQ(2) * t + Poly(one - GQ(2) * a);
    Poly t2a = t + Poly(one - GQ(2) * a);  // t - 2a + 1
    Poly up = t2a * (t - Poly(M));
    Poly dn = t * (t + Poly(M - GQ(2) * a + one));
    ShiftModel r;
    r.kind = "difference";
    r.params = p;
    r.L1 = ShiftOp::mul(one, RatFunc(Poly(a - half) - t * t2a));
    r.X = ShiftOp::T(one, 1, RatFunc(I_ * up, den)) + ShiftOp::T(one, -1, RatFunc(-I_ * dn, den));
    r.L2 = ShiftOp::T(one, 1, RatFunc(I_ * (t + Poly(one - a)) * up, den)) +
           ShiftOp::T(one, -1, RatFunc(I_ * (t - Poly(a)) * dn, den));
    return r;
}

GQ dual_hahn_f(int m, const GQ& a, int n, const GQ& t) {
    GQ v = hyp_exact({GQ(-n), -t, t - GQ(2) * a + GQ(1)}, {GQ(-m), GQ(1) - a}, GQ(1));
    return n % 2 ? -v : v;
}

namespace {

template <class Eval>
bool basis_action_ok(const S3Params& p, int nmax, Eval&& action) {
    for (int n = 0; n < nmax; ++n) {
        RepCoeffs c = rep_coefficients(p, n);
        if (!action(n, c)) return false;
    }
    return true;
}

}  // namespace

bool grid_consistency(const ShiftModel& model) {
    const int m = model.params.m;
    const GQ a = model.params.a;
    auto f = [&](int n) { return [=](const GQ& t) { return n < 0 || n > m ? GQ(0) : dual_hahn_f(m, a, n, t); }; };
    return basis_action_ok(model.params, m + 1, [&](int n, const RepCoeffs& c) {
        GQ lam = I_ * (GQ(2 * n) + model.params.mu);
        for (int t0 = 0; t0 <= m; ++t0) {
            GQ t(t0);
            GQ fn = f(n)(t), fu = f(n + 1)(t), fd = f(n - 1)(t);
            if (model.X.apply_at(f(n), t) != lam * fn) return false;
            if (model.L1.apply_at(f(n), t) != c.C_up * fu + c.C_diag * fn + c.C_down * fd) return false;
            if (model.L2.apply_at(f(n), t) != c.D_up * fu + c.D_down * fd) return false;
        }
        return true;
    });
}

std::pair<GQ, GQ> dual_hahn_orthogonality(int m, const GQ& a, int n, int np) {
    if (n < 0 || np < 0 || n > m || np > m) throw MathError("degree out of range 0..m");
    const GQ one(1);
    GQ sum(0);
    for (int t = 0; t <= m; ++t) {
        GQ den = pochhammer(half - a, t) * pochhammer(GQ(2 + m) - GQ(2) * a, t) * pochhammer(one, t);
        if (den.is_zero()) throw MathError("weight denominator vanishes");
        GQ w = pochhammer(one - GQ(2) * a, t) * pochhammer(GQ::rat(3, 2) - a, t) * pochhammer(GQ(-m), t) / den;
        if (t % 2) w = -w;
        GQ tt(t);
        sum += w * dual_hahn_f(m, a, n, tt) * dual_hahn_f(m, a, np, tt);
    }
    GQ closed(0);
    if (n == np)
        closed = pochhammer(GQ(2) - GQ(2) * a, m) * pochhammer(a - GQ(m), n) * pochhammer(one, n) /
                 (pochhammer(one - a, m) * pochhammer(one - a, n) * pochhammer(GQ(-m), n));
    return {sum, closed};
}

// ---------------------------------------------------------------- continuous dual Hahn

ShiftModel model_difference_infinite(const GQ& mu, const GQ& a) {
    S3Params p = S3Params::bounded_below(mu, a);
    const Poly t = Poly::t();
    Poly Pp = Poly(std::vector<GQ>{half - a, -I_}) * Poly(std::vector<GQ>{mu + a - half, -I_});
    Poly Pm = Poly(std::vector<GQ>{half - a, I_}) * Poly(std::vector<GQ>{mu + a - half, I_});
    Poly t2 = GQ(2) * t, t4 = GQ(4) * t;
    ShiftModel r;
    r.kind = "difference";
    r.params = p;
    r.L1 = ShiftOp::mul(I_, RatFunc(t * t + Poly(a * a - quarter)));
    r.X = ShiftOp::T(I_, 1, RatFunc(-Pp, t2)) + ShiftOp::T(I_, -1, RatFunc(Pm, t2));
    r.L2 = ShiftOp::T(I_, 1, RatFunc(-(Poly(std::vector<GQ>{1, GQ(-2) * I_}) * Pp), t4)) +
           ShiftOp::T(I_, -1, RatFunc(Poly(std::vector<GQ>{1, GQ(2) * I_}) * Pm, t4));
    return r;
}

Poly cdh_s(const GQ& mu, const GQ& a, int n) {
    const Poly t = Poly::t();
    Poly sum, prod(1);
    GQ c(1);
    for (int k = 0; k <= n; ++k) {
        sum += c * prod;
        GQ den = (mu + GQ(k)) * (GQ(1) - a + GQ(k)) * GQ(k + 1);
        if (den.is_zero()) throw MathError("denominator parameter hits zero");
        c *= (GQ(k - n)) / den;
        GQ s = half - a + GQ(k);
        prod = prod * (t * t + Poly(s * s));
    }
    return sum;
}

bool cdh_basis_consistency(const ShiftModel& model, int N) {
    const GQ mu = model.params.mu, a = model.params.a;
    std::vector<Poly> f;
    for (int n = 0; n <= N; ++n) f.push_back((n % 2 ? GQ(-1) : GQ(1)) * cdh_s(mu, a, n));
    return basis_action_ok(model.params, N, [&](int n, const RepCoeffs& c) {
        GQ lam = I_ * (GQ(2 * n) + mu);
        Poly fd = n > 0 ? f[n - 1] : Poly();
        if (model.X.apply(f[n]) != lam * f[n]) return false;
        if (model.L1.apply(f[n]) != c.C_up * f[n + 1] + c.C_diag * f[n] + c.C_down * fd) return false;
        if (model.L2.apply(f[n]) != c.D_up * f[n + 1] + c.D_down * fd) return false;
        return true;
    });
}

double cdh_weight(double mu, double a, double t) {
    if (t == 0) return 0;
    cplx it(0, t);
    cplx g = gamma_numeric(0.5 - a + it) * gamma_numeric(mu + a - 0.5 + it) * gamma_numeric(0.5 + it) /
             gamma_numeric(2.0 * it);
    return std::norm(g) / (2 * kPi);
}

CdhReport cdh_orthogonality_numeric(double mu, double a, int n, int np, double tol) {
    if (!(mu > 0.5 - a && 0.5 - a > 0)) throw MathError("need mu > 1/2 - a > 0");
    GQ qmu{Rat(mu)}, qa{Rat(a)};
    Poly sn = cdh_s(qmu, qa, n), snp = cdh_s(qmu, qa, np);
    auto g = [&](double t) { return cdh_weight(mu, a, t) * (sn.eval(cplx(t)) * snp.eval(cplx(t))).real(); };

    auto h = [&](int k) {
        double lg = std::lgamma(k + mu) + std::lgamma(k + 1 - a) + std::lgamma(k + mu + a) + std::lgamma(k + 1.0);
        double den = std::pow(pochhammer(cplx(mu), k).real(), 2) * std::norm(pochhammer(cplx(1 - a), k));
        return std::exp(lg) / den;
    };
    CdhReport r;
    r.expected = n == np ? h(n) : 0.0;
    r.scale = std::sqrt(h(n) * h(np));

    double T = 10;
    for (;; T += 5) {
        double g0 = std::abs(g(T)), g1 = std::abs(g(T + 1));
        double rate = std::log(g0 / g1);
        if (g0 == 0) {
            r.tail_bound = 0;
            break;
        }
        if (rate > 0.5) {
            r.tail_bound = 2 * g0 / rate;
            if (r.tail_bound < 1e-12 * r.scale) break;
        }
        if (T > 400) throw MathError("no tail bound found");
    }
    r.T = T;
    double err = 0;
    r.integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, 0.0, T, 20, 1e-13, &err);
    r.min_weight = INFINITY;
    for (double t = 0.05; t < T; t += 0.25) r.min_weight = std::min(r.min_weight, cdh_weight(mu, a, t));
    r.rel_err = std::abs(r.integral - r.expected) / r.scale;
    r.pass = r.rel_err < tol && r.min_weight > 0;
    return r;
}

std::string tabulate_basis(const std::string& model, const S3Params& p, int nmax, const std::vector<GQ>& ts) {
    std::ostringstream os;
    os << "t,n,re,im\n";
    char buf[64];
    for (const GQ& t : ts)
        for (int n = 0; n <= nmax; ++n) {
            GQ v;
            if (model == "dual_hahn")
                v = dual_hahn_f(p.m, p.a, n, t);
            else if (model == "cdh")
                v = (n % 2 ? GQ(-1) : GQ(1)) * cdh_s(p.mu, p.a, n).eval(t);
            else if (model == "differential")
                v = pow(t, n);
            else
                throw MathError("unknown basis " + model);
            os << t.str() << ',' << n << ',';
            std::snprintf(buf, sizeof buf, "%.17g,%.17g", v.re().get_d(), v.im().get_d());
            os << buf << '\n';
        }
    return os.str();
}

}  // namespace qalg
