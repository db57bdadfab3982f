#pragma once
// Position dependent mass system in a semi-infinite layer: coordinates on the
// sphere, eigenvalue bookkeeping against S3, parity split of the monomial model.

#include <array>
#include <utility>
#include <vector>

#include "qalg/ops.hpp"

namespace qalg {

std::array<double, 3> sphere_coords(double x, double y, double q);

struct PdmParams {
    GQ q, k;
    int N = 0;
    int m = 1;  // N + 1
    GQ a, mu;   // a = 1/2 - k, mu = -m
    // throws unless q > 0, k > 0, N >= 0
    static PdmParams make(const GQ& q, const GQ& k, int N);
    // (n, l) with m = 2n + l + 1
    std::vector<std::pair<int, int>> splits() const;
};

struct EigenCorrespondence {
    GQ lambda_S, lambda_Q, closed;  // closed = q^2 (N+2)(N+2k+1)
    bool pass = false;
};
EigenCorrespondence eigen_correspondence(const PdmParams& p);

// Vector sqrt(scale2) * poly in the monomial model of dimension m+1.
struct ParityVector {
    int l = 0;
    GQ scale2;
    Poly poly;
};

struct ParityBasis {
    int m = 0;
    GQ a;
    std::vector<GQ> kn2;
    std::vector<ParityVector> plus, minus;
    // <f, g> with <t^j, t^k> = delta_jk / kn2[k]
    GQ inner(const Poly& f, const Poly& g) const;
    // exact Gram check over plus ++ minus; off-diagonal zero, diagonal one
    bool orthonormal() const;
    // P f = t^m f(1/t)
    Poly apply_P(const Poly& f) const;
    bool P_involution() const;     // P^2 = I on t^0..t^m
    bool P_norm_preserving() const;
    bool P_eigen() const;           // P Phi+- = +-(-1)^m Phi+-
};
// throws MathError if some kn2[n], n <= m, is not positive
ParityBasis parity_basis(int m, const GQ& a);

}  // namespace qalg
