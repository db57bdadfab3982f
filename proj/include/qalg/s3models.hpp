#pragma once
// One-variable models of S3: differential, finite difference (dual Hahn),
// infinite difference (continuous dual Hahn), plus norms and weights.

#include <map>
#include <string>
#include <vector>

#include "qalg/hyper.hpp"
#include "qalg/ops.hpp"
#include "qalg/s3rep.hpp"

namespace qalg {

template <class Op>
struct Model {
    std::string kind;  // differential | difference
    S3Params params;
    Op X, L1, L2;
    std::map<std::string, Op> ops() const { return {{"X", X}, {"L1", L1}, {"L2", L2}}; }
};
using DiffModel = Model<DiffOp>;
using ShiftModel = Model<ShiftOp>;

VerifyReport verify_model(const DiffModel& m);
VerifyReport verify_model(const ShiftModel& m);

// --- differential model, mu = -m ---
DiffModel model_differential(const S3Params& p);

struct EigenCheck {
    GQ chi;
    Poly v;
    bool pass = false;
};
EigenCheck l1_spectrum_check(const S3Params& p, int n);
GQ l1_eigenvalue(const GQ& a, long n);

struct NormKernel {
    std::vector<GQ> kn2;
    bool recursion_ok = false;
    bool reflection_ok = false;  // finite kind only; true otherwise
    // sum_n kn2[n] conj(s)^n t^n
    Poly kernel(const GQ& s) const;
    // <t^j, t^k> = delta_jk / kn2[k]; needs real kn2
    GQ inner(const Poly& f, const Poly& g) const;
};
NormKernel norms_and_kernel(const S3Params& p, int N);
// kn2 ratio factors (n-1+mu)(n-a)/(n(n-1+mu+a)) positive for every admissible n, decided exactly
bool norms_positive(const GQ& mu, const GQ& a);

// --- weight function ODE ---
enum class WeightBranch { rho1, rho2 };
struct WeightSeriesReport {
    WeightBranch branch;
    GQ exponent;
    GQ Q2;
    int order = 0;
    bool residual_zero = false;
    bool even_in_Q = false;
    std::vector<GQ> coeffs;
};
WeightSeriesReport weight_series_check(const S3Params& p, WeightBranch b, int K);

struct GaussBranch {
    bool ran = false;
    std::string skipped;
    cplx integral;
    double rel_err = 0;
};
struct GaussReport {
    cplx closed;
    GaussBranch rho1, rho2;
    double tol = 1e-9;
    bool pass = false;
};
GaussReport gauss_norm_identity(const S3Params& p, double tol = 1e-9);

// --- finite difference model, step 1 ---
ShiftModel model_difference_finite(int m, const GQ& a);
// f_n(t) = (-1)^n p_n(lambda(t))
GQ dual_hahn_f(int m, const GQ& a, int n, const GQ& t);
// action of the triple on the basis over t = 0..m against build_rep
bool grid_consistency(const ShiftModel& model);
std::pair<GQ, GQ> dual_hahn_orthogonality(int m, const GQ& a, int n, int np);

// --- infinite difference model, step i ---
ShiftModel model_difference_infinite(const GQ& mu, const GQ& a);
// s_n(t^2) as a polynomial in t
Poly cdh_s(const GQ& mu, const GQ& a, int n);
// X, L1, L2 on f_n = (-1)^n s_n reproduce build_rep, n < N
bool cdh_basis_consistency(const ShiftModel& model, int N);

struct CdhReport {
    double integral = 0, expected = 0, scale = 0;
    double T = 0, tail_bound = 0, min_weight = 0;
    double rel_err = 0;
    bool pass = false;
};
CdhReport cdh_orthogonality_numeric(double mu, double a, int n, int np, double tol = 1e-6);
double cdh_weight(double mu, double a, double t);

// CSV rows "t,n,re,im"
std::string tabulate_basis(const std::string& model, const S3Params& p, int nmax, const std::vector<GQ>& ts);

}  // namespace qalg
