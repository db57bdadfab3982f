#include "qalg/hyper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qalg {

GQ pochhammer(const GQ& x, unsigned n) {
    GQ r(1);
    for (unsigned k = 0; k < n; ++k) {
        r *= x + GQ(static_cast<long>(k));
        if (r.is_zero()) break;
    }
    return r;
}

cplx pochhammer(cplx x, unsigned n) {
    cplx r(1);
    for (unsigned k = 0; k < n; ++k) r *= x + static_cast<double>(k);
    return r;
}

int hyp_termination(const std::vector<GQ>& num) {
    int best = -1;
    for (const auto& a : num)
        if (a.is_integer() && sgn(a.re()) <= 0) {
            int n = static_cast<int>(-a.to_long());
            if (best < 0 || n < best) best = n;
        }
    return best;
}

GQ hyp_exact(const std::vector<GQ>& num, const std::vector<GQ>& den, const GQ& z) {
    int N = hyp_termination(num);
    if (N < 0) throw MathError("non-terminating series in exact mode");
    for (const auto& b : den)
        for (int j = 0; j < N; ++j)
            if ((b + GQ(j)).is_zero())
                throw MathError("denominator parameter " + b.str() + " hits zero before termination");
    GQ sum(1), term(1);
    for (int k = 0; k < N; ++k) {
        GQ f(1);
        for (const auto& a : num) f *= a + GQ(k);
        for (const auto& b : den) f /= b + GQ(k);
        term *= f * z / GQ(k + 1);
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

HypNumeric hyp_numeric(const std::vector<cplx>& num, const std::vector<cplx>& den, cplx z, double tol,
                       int max_terms) {
    const size_t p = num.size(), q = den.size();
    if (p > q + 1) throw MathError("pFq with p > q+1 diverges");
    if (p == q + 1 && std::abs(z) >= 1) throw MathError("|z| >= 1 outside the disc of convergence");
    for (const auto& b : den)
        if (std::abs(b.imag()) == 0 && b.real() <= 0 && b.real() == std::floor(b.real()))
            throw MathError("denominator parameter at a pole");

    double bmax = 0;
    for (const auto& b : den) bmax = std::max(bmax, std::abs(b));

    // For j >= K every term ratio is at most R(K).
    auto ratio_bound = [&](double K) {
        if (K <= bmax) return std::numeric_limits<double>::infinity();
        double r = std::abs(z);
        size_t paired = std::min(p, q);
        for (size_t i = 0; i < paired; ++i) r *= (K + std::abs(num[i])) / (K - std::abs(den[i]));
        for (size_t i = paired; i < q; ++i) r /= (K - std::abs(den[i]));
        if (p == q + 1)
            r *= std::max(1.0, (K + std::abs(num[p - 1])) / (K + 1));
        else
            r /= (K + 1);
        return r;
    };

    cplx sum(1), term(1);
    for (int k = 0; k < max_terms; ++k) {
        cplx f(1);
        for (const auto& a : num) f *= a + static_cast<double>(k);
        for (const auto& b : den) f /= b + static_cast<double>(k);
        term *= f * z / static_cast<double>(k + 1);
        sum += term;
        if (term == cplx(0)) return {sum, 0.0, k + 1};
        double R = ratio_bound(k + 1.0);
        if (R < 1) {
            double bound = std::abs(term) * R / (1 - R);
            if (bound <= tol * std::max(1.0, std::abs(sum))) return {sum, bound, k + 1};
        }
    }
    double R = ratio_bound(static_cast<double>(max_terms));
    double bound = R < 1 ? std::abs(term) * R / (1 - R) : std::numeric_limits<double>::infinity();
    return {sum, bound, max_terms};
}

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                               771.32342877765313,   -176.61502916214059,   12.507343278686905,
                               -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

cplx gamma_numeric(cplx z) {
    if (z.imag() == 0 && z.real() <= 0 && z.real() == std::round(z.real()))
        throw MathError("Gamma pole at a nonpositive integer");
    if (z.real() < 0.5) {
        const double pi = std::acos(-1.0);
        return pi / (std::sin(pi * z) * gamma_numeric(1.0 - z));
    }
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int k = 1; k < 9; ++k) x += kLanczos[k] / (z + static_cast<double>(k));
    cplx t = z + kLanczosG + 0.5;
    return std::sqrt(2 * std::acos(-1.0)) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace qalg
