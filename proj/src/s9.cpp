#include "qalg/s9.hpp"

#include "qalg/hyper.hpp"

namespace qalg {

namespace {

const GQ i_(0, 1);

Poly P(std::initializer_list<GQ> c) { return Poly(std::vector<GQ>(c)); }

// f(t) -> f(i tau)
RatFunc at_i_tau(const RatFunc& f) { return f.scale_arg(i_); }

}  // namespace

S9Params S9Params::make(const GQ& alpha, const GQ& beta, const GQ& gamma, const GQ& E) {
    S9Params p;
    p.alpha = alpha;
    p.beta = beta;
    p.gamma = gamma;
    p.E = E;
    const GQ q = GQ::rat(1, 4), h = GQ::rat(1, 2);
    p.a1 = q - alpha * alpha;
    p.a2 = q - beta * beta;
    p.a3 = q - gamma * gamma;
    p.H = q - E * E;
    p.A = (E + alpha + GQ(1)) * h;
    p.B = (E - alpha + GQ(1)) * h;
    p.C = (beta + gamma + GQ(1)) * h;
    p.D = (beta - gamma + GQ(1)) * h;
    return p;
}

S9Model s9_model(const S9Params& p) {
    const GQ &al = p.alpha, &be = p.beta, &ga = p.gamma, &E = p.E;
    const GQ one(1), four(4), sixteen(16);
    GQ base = four * E * E - four * al * al - four;
    Poly F1 = P({base - GQ(8) * al, sixteen * i_ * (al + one), sixteen});
    Poly F4 = P({base + GQ(8) * al, sixteen * i_ * (one - al), sixteen});
    Poly F2 = P({be + one + ga, GQ(-2) * i_});
    Poly F3 = P({be - one - ga, GQ(2) * i_});
    Poly F5 = P({be + one - ga, GQ(-2) * i_});
    Poly F6 = P({be - one + ga, GQ(2) * i_});
    S9Model m;
    m.p = p;
    m.h_numerator = F1 * F2 * F3 * F4 * F5 * F6;
    Poly t = Poly::t();
    Poly den = Poly(1024) * t * Poly::linear(i_) * pow(P({i_, GQ(2)}), 2);
    m.h = RatFunc(m.h_numerator, den);
    m.m = RatFunc(1);
    GQ c0 = (al * al + ga * ga - E * E - be * be) / GQ(2);
    m.ell = RatFunc(P({c0, GQ(0), GQ(-2)})) +
            RatFunc(Poly((ga * ga - be * be) * (four * E * E - four * al * al)), P({GQ(8), GQ(0), GQ(32)}));
    m.L1 = ShiftOp::mul(i_, RatFunc(P({be * be + ga * ga - GQ::rat(1, 2), GQ(0), four})));
    m.L2 = ShiftOp::T(i_, 1, m.h) + ShiftOp::T(i_, -1, m.m) + ShiftOp::mul(i_, m.ell);
    m.L3 = ShiftOp::mul(i_, RatFunc(p.H - p.a1 - p.a2 - p.a3)) - m.L1 - m.L2;
    return m;
}

S9Report s9_verify(const S9Model& model) {
    S9Report r;
    const S9Params& p = model.p;
    r.verify = verify_quadratic_algebra(model.ops(), s9_quantum_spec(p.a1, p.a2, p.a3, p.H));
    ShiftOp R = commutator(model.L1, model.L2);
    r.r_shift_range = R.min_shift() >= -2 && R.max_shift() <= 2;
    r.pass = r.verify.pass && r.r_shift_range;
    return r;
}

S9Report s9_verify(const S9Params& p) { return s9_verify(s9_model(p)); }

bool s9_classical_product_check(const S9Params& p) {
    S9Model m = s9_model(p);
    // numerator of h(t) m(t+i) = h(t) as a polynomial in tt = t + i/2
    Poly num = m.h_numerator.shift(-i_ / GQ(2));
    GQ a1 = -p.alpha * p.alpha, a2 = -p.beta * p.beta, a3 = -p.gamma * p.gamma;
    GQ s = a1 + a2 + a3;
    GQ Hs = -p.E * p.E - s;  // H + s with H = -E^2 - 2s
    Poly tt = Poly::t();
    Poly c = Poly(4) * tt * tt + Poly(p.beta * p.beta + p.gamma * p.gamma);
    Poly D1 = Poly(GQ(4) * a1 * a2 + GQ(4) * a1 * a3 - Hs * Hs) + Poly(GQ(2) * Hs + GQ(4) * a1) * c - c * c;
    Poly rhs = Poly(16) * D1 * (Poly(GQ(4) * a2 * a3) - c * c);
    return num == rhs;
}

Poly wilson_poly(const S9Params& p, int n) {
    GQ S = p.A + p.B + p.C + p.D;
    Poly sum, term(1);
    GQ c(1);
    Poly ap = Poly::linear(p.A), am = P({p.A, GQ(-1)});
    for (const GQ& b : {p.A + p.B, p.A + p.C, p.A + p.D})
        if (b.is_integer() && b.to_long() <= 0 && b.to_long() > -n)
            throw MathError("Wilson lower parameter is a non-positive integer");
    for (int k = 0; k <= n; ++k) {
        sum += c * term;
        // next term
        GQ kk(k);
        c = c * (GQ(-n) + kk) * (GQ(n) + S - GQ(1) + kk) /
            ((p.A + p.B + kk) * (p.A + p.C + kk) * (p.A + p.D + kk) * (kk + GQ(1)));
        term = term * (ap + Poly(kk)) * (am + Poly(kk));
    }
    return sum;
}

WilsonForm wilson_form(const S9Params& p, int max_degree) {
    WilsonForm w;
    Poly tau = Poly::t();
    const GQ half = GQ::rat(1, 2);
    Poly hn = Poly::linear(p.A) * Poly::linear(p.B) * Poly::linear(p.C) * Poly::linear(p.D);
    Poly mn = P({p.A, GQ(-1)}) * P({p.B, GQ(-1)}) * P({p.C, GQ(-1)}) * P({p.D, GQ(-1)});
    w.ht = RatFunc(hn, Poly(4) * tau * Poly::linear(half));
    w.mt = RatFunc(mn, Poly(4) * tau * Poly::linear(-half));
    S9Model m = s9_model(p);
    RatFunc Q = at_i_tau(m.h) * at_i_tau(m.m).shift(GQ(1));
    if (Q != RatFunc(GQ(16)) * w.ht * w.mt.shift(GQ(1)))
        throw MathError("h(t)m(t+i) does not split into the Wilson factors");
    // rho L rho^{-1}: E^{+1} coefficient / r(tau+1), E^{-1} coefficient * r(tau)
    w.gauge = RatFunc(GQ(-4)) * w.mt / at_i_tau(m.m);
    const GQ one(1);
    w.L2_tau = ShiftOp::T(one, 1, at_i_tau(m.h) / w.gauge.shift(one)) +
               ShiftOp::T(one, -1, at_i_tau(m.m) * w.gauge) + ShiftOp::mul(one, at_i_tau(m.ell));
    w.W = ShiftOp::T(one, 1, w.ht) + ShiftOp::T(one, -1, w.mt) - ShiftOp::mul(one, w.ht + w.mt);
    ShiftOp rest = w.L2_tau + GQ(4) * w.W;
    w.conjugation_ok = rest.max_shift() == 0 && rest.min_shift() == 0 && rest.coeff(0).is_const();
    if (w.conjugation_ok) w.ell_const = rest.coeff(0).num().coeff(0);
    w.degree_ok = true;
    for (int k = 0; k <= max_degree; ++k) {
        RatFunc img = w.W.apply(RatFunc(Poly::monomial(2 * k)));
        bool ok = img.is_poly() && img.num().degree() <= 2 * k;
        for (int j = 1; ok && j <= img.num().degree(); j += 2) ok = img.num().coeff(j).is_zero();
        w.degree_ok = w.degree_ok && ok;
    }
    w.wilson_eigen_ok = true;
    for (int n = 0; n <= max_degree; ++n) {
        Poly pn = wilson_poly(p, n);
        RatFunc img = w.W.apply(RatFunc(pn));
        GQ lambda = img.is_zero() ? GQ(0) : img.num().lead() / (img.den().lead() * pn.lead());
        w.eigenvalues.push_back(lambda);
        w.wilson_eigen_ok = w.wilson_eigen_ok && img == RatFunc(lambda * pn);
    }
    return w;
}

}  // namespace qalg
