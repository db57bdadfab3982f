#pragma once
// S9: difference model with step i, exact verification, Wilson form in tau = -i t.

#include <string>
#include <vector>

#include "qalg/algebra.hpp"
#include "qalg/ops.hpp"

namespace qalg {

struct S9Params {
    GQ alpha, beta, gamma, E;
    GQ a1, a2, a3, H;  // 1/4 - (alpha, beta, gamma, E)^2
    GQ A, B, C, D;     // Wilson parameters
    static S9Params make(const GQ& alpha, const GQ& beta, const GQ& gamma, const GQ& E);
};

struct S9Model {
    S9Params p;
    RatFunc h, m, ell;  // L2 = h T^i + m T^{-i} + ell
    Poly h_numerator;   // unreduced degree-8 product over 1024 t (t+i) (2t+i)^2
    ShiftOp L1, L2, L3;
    std::map<std::string, ShiftOp> ops() const { return {{"L1", L1}, {"L2", L2}}; }
};

S9Model s9_model(const S9Params& p);

struct S9Report {
    VerifyReport verify;
    bool r_shift_range = false;  // R only has T^k, |k| <= 2
    bool pass = false;
};
S9Report s9_verify(const S9Model& model);
S9Report s9_verify(const S9Params& p);

// h(t) m(t+i) against the classical discriminant: with tt = t + i/2,
// c = 4 tt^2 + beta^2 + gamma^2, classical a = (-alpha^2, -beta^2, -gamma^2) and
// H = -E^2 - 2(a1 + a2 + a3), the numerator is 16 D1(c) (4 a2 a3 - c^2).
bool s9_classical_product_check(const S9Params& p);

struct WilsonForm {
    RatFunc ht, mt;     // functions of tau
    RatFunc gauge;      // r(tau) = rho(tau) / rho(tau - 1)
    GQ ell_const;       // L2 = -4 W + ell_const after t = i tau and the gauge
    ShiftOp W;          // ht (E - 1) + mt (E^{-1} - 1), step 1 in tau
    ShiftOp L2_tau;     // conjugated L2
    bool conjugation_ok = false;
    bool degree_ok = false;           // W maps tau^{2k} to even polynomials of degree <= 2k
    std::vector<GQ> eigenvalues;      // W p_n = lambda_n p_n by application
    bool wilson_eigen_ok = false;
};
// throws if the product h(i tau) m(i tau + i) does not split as 16 ht(tau) mt(tau+1)
WilsonForm wilson_form(const S9Params& p, int max_degree = 4);
// 4F3(-n, n+A+B+C+D-1, A+tau, A-tau; A+B, A+C, A+D; 1) as a polynomial in tau
Poly wilson_poly(const S9Params& p, int n);

}  // namespace qalg
