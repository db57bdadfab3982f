#include "qalg/pdm.hpp"

#include <cmath>

#include "qalg/s3models.hpp"

namespace qalg {

std::array<double, 3> sphere_coords(double x, double y, double q) {
    const double ch = std::cosh(q * x);
    return {std::sin(q * y) / ch, std::cos(q * y) / ch, std::tanh(q * x)};
}

PdmParams PdmParams::make(const GQ& q, const GQ& k, int N) {
    if (!q.is_real() || sgn(q.re()) <= 0) throw MathError("q must be a positive rational");
    if (!k.is_real() || sgn(k.re()) <= 0) throw MathError("k must be a positive rational");
    if (N < 0) throw MathError("N must be nonnegative");
    PdmParams p;
    p.q = q;
    p.k = k;
    p.N = N;
    p.m = N + 1;
    p.a = GQ::rat(1, 2) - k;
    p.mu = GQ(-p.m);
    return p;
}

std::vector<std::pair<int, int>> PdmParams::splits() const {
    std::vector<std::pair<int, int>> r;
    for (int n = 0; 2 * n + 1 <= m; ++n) r.push_back({n, m - 1 - 2 * n});
    return r;
}

EigenCorrespondence eigen_correspondence(const PdmParams& p) {
    EigenCorrespondence e;
    const GQ quarter = GQ::rat(1, 4), q2 = p.q * p.q;
    GQ s = p.mu - GQ(1) + p.a;
    e.lambda_S = quarter - s * s;
    e.lambda_Q = -q2 * e.lambda_S - q2 * p.k * (p.k - GQ(1));
    e.closed = q2 * GQ(p.N + 2) * (GQ(p.N + 1) + GQ(2) * p.k);
    e.pass = e.lambda_Q == e.closed;
    return e;
}

GQ ParityBasis::inner(const Poly& f, const Poly& g) const {
    GQ r;
    for (int n = 0; n <= std::max(f.degree(), g.degree()); ++n) {
        GQ c = f.coeff(n) * g.coeff(n).conj();
        if (c.is_zero()) continue;
        if (n > m) throw MathError("vector outside the model space");
        r += c / kn2[n];
    }
    return r;
}

bool ParityBasis::orthonormal() const {
    std::vector<const ParityVector*> all;
    for (auto& v : plus) all.push_back(&v);
    for (auto& v : minus) all.push_back(&v);
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = 0; j < all.size(); ++j) {
            GQ g = inner(all[i]->poly, all[j]->poly);
            // |sqrt(s_i s_j) g| = delta_ij, s_i > 0
            if (i != j && !g.is_zero()) return false;
            if (i == j && all[i]->scale2 * g != GQ(1)) return false;
        }
    return true;
}

Poly ParityBasis::apply_P(const Poly& f) const {
    if (f.degree() > m) throw MathError("vector outside the model space");
    std::vector<GQ> c(m + 1);
    for (int n = 0; n <= m; ++n) c[m - n] = f.coeff(n);
    return Poly(c);
}

bool ParityBasis::P_involution() const {
    for (int n = 0; n <= m; ++n)
        if (apply_P(apply_P(Poly::monomial(n))) != Poly::monomial(n)) return false;
    return true;
}

bool ParityBasis::P_norm_preserving() const {
    for (int n = 0; n <= m; ++n) {
        Poly f = Poly::monomial(n), g = apply_P(f);
        if (inner(f, f) != inner(g, g)) return false;
    }
    return true;
}

bool ParityBasis::P_eigen() const {
    const GQ s = m % 2 == 0 ? GQ(1) : GQ(-1);
    for (auto& v : plus)
        if (apply_P(v.poly) != s * v.poly) return false;
    for (auto& v : minus)
        if (apply_P(v.poly) != -s * v.poly) return false;
    return true;
}

ParityBasis parity_basis(int m, const GQ& a) {
    if (m < 0) throw MathError("m must be nonnegative");
    ParityBasis b;
    b.m = m;
    b.a = a;
    b.kn2 = norms_and_kernel(S3Params::finite(m, a), m + 1).kn2;
    for (int n = 0; n <= m; ++n)
        if (!b.kn2[n].is_real() || sgn(b.kn2[n].re()) <= 0)
            throw MathError("non-positive norm at n = " + std::to_string(n));
    // phi_n = sqrt(kn2[n]) t^n, kn2[n] = kn2[m-n]
    const GQ sign = m % 2 == 0 ? GQ(1) : GQ(-1);
    for (int l = 0; 2 * l <= m; ++l) {
        Poly tl = Poly::monomial(l), tr = Poly::monomial(m - l);
        if (2 * l == m) {
            b.plus.push_back({l, b.kn2[l], tl});
            continue;
        }
        b.plus.push_back({l, b.kn2[l] / GQ(2), tl + sign * tr});
        b.minus.push_back({l, b.kn2[l] / GQ(2), tl - sign * tr});
    }
    return b;
}

}  // namespace qalg
