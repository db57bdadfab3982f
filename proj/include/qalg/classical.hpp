#pragma once
// Classical models on the (c, beta) plane, numeric Poisson checks, canonical
// shifts, and quantization to exact operator triples.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qalg/algebra.hpp"
#include "qalg/calibrate.hpp"
#include "qalg/ops.hpp"
#include "qalg/phase.hpp"

namespace qalg {

struct ClassicalRelation {
    std::string name;
    std::vector<PhaseExpr> terms;  // sum vanishes
};

struct ClassicalModel {
    std::string system;  // S3-I | S3-II | S3-III | S3-I-exp | S9
    std::map<std::string, GQ> params;
    std::vector<std::pair<std::string, PhaseExpr>> exprs;
    std::vector<ClassicalRelation> relations;
    double margin = 1e-6;

    const PhaseExpr& expr(const std::string& name) const;
    bool admissible(double c, double beta) const;
    // |sum| / max |term| per relation
    std::vector<double> residuals_at(double c, double beta) const;
};

// S3 systems take {E, alpha} or {mu, a}; S9 takes {a1, a2, a3, E}.
ClassicalModel classical_model(const std::string& system, const std::map<std::string, GQ>& params);
// beta -> beta + g(c); relations rebuilt from the substituted expressions
ClassicalModel canonical_shift(const ClassicalModel& m, const PhaseExpr& g);

struct PoissonReport {
    std::string system;
    std::uint64_t seed = 0;
    int samples = 0, points_used = 0, attempts = 0;
    double tol = 0, max_residual = 0;
    std::vector<std::pair<std::string, double>> max_residual_by_relation;
    bool pass = false;
};
// Uniform points in [-2, 2]^2 restricted to the admissible domain.
PoissonReport verify_poisson_numeric(const ClassicalModel& m, int n_samples, double tol = 1e-9,
                                     std::uint64_t seed = 1);

// --- quantization ---

struct QuantizedModel {
    std::string system, prescription, variable;
    bool shift = false;
    std::map<std::string, DiffOp> diff;
    std::map<std::string, ShiftOp> difference;
    VerifyReport verify;
    // calibration output, when a calibration ran
    std::vector<std::pair<std::string, GQ>> corrections;
    std::vector<std::string> gauge_free;
    std::string note;
};

// direct (S3-III), hodograph (S3-I, S3-I-exp), shift (S3-II).
// For shift, gauge_h is h(t); default is the split fixed by mu, a.
QuantizedModel quantize(const ClassicalModel& m, const std::string& prescription,
                        const std::optional<RatFunc>& gauge_h = std::nullopt);

// Direct quantization ansatz for S3-III: classical symbols with beta -> d/dt
// plus degree <= 1 corrections in every lower coefficient and r/(t+alpha).
Ansatz<DiffOp> model3_ansatz(const GQ& E, const GQ& alpha);
AlgebraSpec model3_spec(const GQ& E, const GQ& alpha);
// The reference fourth-order triple: S, X, K = L1 + i L2.
std::map<std::string, DiffOp> model3q_reference(const GQ& E, const GQ& alpha);
// Classical symbol of X and K: coefficient of beta^k as a function of c.
std::map<std::string, std::vector<RatFunc>> model3_symbols(const GQ& E, const GQ& alpha);

// h(t) m(t+i) from the structure equations, and its factored form in mu, a.
RatFunc shift_product(const GQ& E, const GQ& alpha);
RatFunc shift_product_factored(const GQ& mu, const GQ& a);
RatFunc shift_standard_gauge(const GQ& mu, const GQ& a);

// Second-order trig realization of model I in tau = e^{2it}, conjugated by tau^{mu/2}.
std::map<std::string, DiffOp> trig_realization(const GQ& mu, const GQ& a, const GQ& eta);
struct TrigMatch {
    GQ eta;
    bool algebra = false;  // exact S3 relations
    bool matches = false;  // equals build_rep up to a diagonal gauge
    std::vector<GQ> gauge;
};
// Tries every admissible eta for the finite representation of dimension m+1.
std::vector<TrigMatch> trig_realization_check(int m, const GQ& a);

}  // namespace qalg
