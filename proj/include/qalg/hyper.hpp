#pragma once
// Pochhammer symbols, hypergeometric series, complex Gamma.

#include <complex>
#include <vector>

#include "qalg/field.hpp"

namespace qalg {

using cplx = std::complex<double>;

GQ pochhammer(const GQ& x, unsigned n);
cplx pochhammer(cplx x, unsigned n);

// Exact pFq for a terminating series. Throws when no numerator parameter is a
// nonpositive integer, or when a denominator parameter hits zero first.
GQ hyp_exact(const std::vector<GQ>& num, const std::vector<GQ>& den, const GQ& z);

// Length of the terminating series (index of the last term), or -1.
int hyp_termination(const std::vector<GQ>& num);

struct HypNumeric {
    cplx value;
    double truncation_bound;  // rigorous bound on the neglected tail
    int terms;
};

// Partial sum of pFq in double precision. Requires p <= q+1 and |z| < 1 when p = q+1.
HypNumeric hyp_numeric(const std::vector<cplx>& num, const std::vector<cplx>& den, cplx z, double tol = 1e-17,
                       int max_terms = 100000);

// Lanczos approximation, reflection for Re z < 1/2.
cplx gamma_numeric(cplx z);

}  // namespace qalg
