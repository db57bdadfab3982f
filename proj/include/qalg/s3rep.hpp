#pragma once
// Tridiagonal representations of the S3 quadratic algebra.

#include <string>
#include <vector>

#include "qalg/algebra.hpp"
#include "qalg/ops.hpp"

namespace qalg {

enum class RepKind { finite, bounded_below, generic };

struct S3Params {
    GQ mu, a, alpha, H, kappa;
    RepKind kind = RepKind::generic;
    int m = -1;  // finite kind only
    bool has_a = true;

    static S3Params finite(int m, const GQ& a);
    static S3Params bounded_below(const GQ& mu, const GQ& a);
    static S3Params generic(const GQ& mu, const GQ& H, const GQ& alpha);
    std::string kind_name() const;
};

GQ kappa_general(const GQ& mu, const GQ& H, const GQ& alpha);
// n^4 + (2mu-2)n^3 + ... + kappa
GQ F_quartic(const GQ& mu, const GQ& H, const GQ& alpha, const GQ& kappa, long n);

struct RepCoeffs {
    GQ C_up, C_diag, C_down;  // C(n+1,n), C(n,n), C(n-1,n)
    GQ D_up, D_diag, D_down;
    GQ F;  // F_n = C(n,n-1) C(n-1,n)
};

RepCoeffs rep_coefficients(const S3Params& p, long n);

struct TridiagonalRep {
    int dim = 0;
    std::vector<GQ> lambda;
    Matrix X, L1, L2;
    std::vector<GQ> F;  // F_0 .. F_dim
};

TridiagonalRep build_rep(const S3Params& p, int N);

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0;
    std::string detail;
};

std::vector<CheckResult> verify_matrix_structure(const TridiagonalRep& rep, const S3Params& p);
std::vector<CheckResult> ladder_check(const TridiagonalRep& rep, const S3Params& p);

struct RepClass {
    std::string kind;  // finite | bounded_below | none
    bool boundary = false;
    int dim = -1;
    std::vector<GQ> spectrum;  // of -iX, finite kind
    bool differential = false;
    bool difference = false;
    std::string note;
};

RepClass classify(const GQ& mu, const GQ& a);

}  // namespace qalg
