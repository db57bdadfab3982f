#pragma once
// Unknown scalar coefficients in an operator ansatz, fixed by requiring the
// relations of an AlgebraSpec to hold exactly.

#include <map>
#include <string>
#include <vector>

#include "qalg/algebra.hpp"
#include "qalg/ops.hpp"

namespace qalg {

// Monomial in the unknowns: sorted indices with repetition, {0,0,3} = u0^2 u3.
using Mono = std::vector<int>;

Mono mono_mul(const Mono& a, const Mono& b);

// Scalar polynomial in the unknowns.
class MPoly {
public:
    MPoly() = default;
    MPoly(const GQ& c) { if (!c.is_zero()) t[{}] = c; }
    static MPoly var(int i) { MPoly r; r.t[{i}] = GQ(1); return r; }

    std::map<Mono, GQ> t;

    bool is_zero() const { return t.empty(); }
    int degree() const;
    GQ constant() const;
    MPoly& operator+=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const GQ& s, const MPoly& a);
    MPoly subst(int var, const MPoly& by) const;
    GQ eval(const std::vector<GQ>& u) const;
    std::string str(const std::vector<std::string>& names) const;
};

// sum over monomials u^m Op_m
template <class Op>
class OpFamily {
public:
    OpFamily() = default;
    explicit OpFamily(const Op& base) { t[{}] = base; clean(); proto_ = base; has_proto_ = true; }

    std::map<Mono, Op> t;

    void add(const Mono& m, const Op& o) {
        if (!has_proto_) { proto_ = o; has_proto_ = true; }
        auto it = t.find(m);
        if (it == t.end()) t.emplace(m, o);
        else it->second += o;
        clean();
    }
    OpFamily identity_like() const { return OpFamily(proto_.identity_like()); }
    bool is_zero() const { return t.empty(); }

    OpFamily& operator+=(const OpFamily& o) {
        for (const auto& [m, op] : o.t) add(m, op);
        if (!has_proto_ && o.has_proto_) { proto_ = o.proto_; has_proto_ = true; }
        return *this;
    }
    friend OpFamily operator*(const GQ& s, const OpFamily& a) {
        OpFamily r;
        r.proto_ = a.proto_;
        r.has_proto_ = a.has_proto_;
        if (s.is_zero()) return r;
        for (const auto& [m, op] : a.t) r.t.emplace(m, s * op);
        return r;
    }
    friend OpFamily operator*(const OpFamily& a, const OpFamily& b) {
        OpFamily r;
        r.proto_ = a.has_proto_ ? a.proto_ : b.proto_;
        r.has_proto_ = a.has_proto_ || b.has_proto_;
        for (const auto& [ma, oa] : a.t)
            for (const auto& [mb, ob] : b.t) r.add(mono_mul(ma, mb), oa * ob);
        return r;
    }
    friend OpFamily operator+(OpFamily a, const OpFamily& b) { return a += b; }
    friend OpFamily operator-(OpFamily a, const OpFamily& b) { return a += GQ(-1) * b; }

    Op at(const std::vector<GQ>& u) const {
        Op r = GQ(0) * proto_;
        for (const auto& [m, op] : t) {
            GQ c(1);
            for (int i : m) c *= u.at(i);
            r += c * op;
        }
        return r;
    }

private:
    void clean() {
        for (auto it = t.begin(); it != t.end();)
            it = it->second.is_zero() ? t.erase(it) : std::next(it);
    }
    Op proto_;
    bool has_proto_ = false;
};

// Operators affine in named unknowns.
template <class Op>
struct Ansatz {
    std::vector<std::string> unknowns;
    std::map<std::string, OpFamily<Op>> ops;

    int unknown(const std::string& name) {
        unknowns.push_back(name);
        return static_cast<int>(unknowns.size()) - 1;
    }
    void set(const std::string& g, const Op& base) { ops[g] = OpFamily<Op>(base); }
    void add(const std::string& g, int u, const Op& o) { ops.at(g).add({u}, o); }
};

template <class Op>
struct Calibration {
    bool consistent = false;
    std::string message;
    std::vector<std::string> unknowns;
    std::vector<GQ> values;          // free unknowns set to 0
    std::vector<std::string> free;   // gauge family directions
    std::map<std::string, Op> ops;
    VerifyReport verify;
};

// (slot, coefficient) pairs: derivative order for DiffOp, shift for ShiftOp
std::vector<std::pair<int, RatFunc>> coefficient_slots(const DiffOp& a);
std::vector<std::pair<int, RatFunc>> coefficient_slots(const ShiftOp& a);

struct LinearStage {
    bool consistent = true;
    std::string message;
    std::map<int, MPoly> solved;  // unknown -> expression in the free ones
};
// Staged exact elimination: solve the affine equations, substitute, repeat.
LinearStage solve_staged(std::vector<MPoly> eqs, int n_unknowns, const std::vector<std::string>& names);

// Equations "coefficient vanishes at enough points" for a family of residual operators.
template <class Op>
std::vector<MPoly> family_equations(const OpFamily<Op>& res);

template <class Op>
Calibration<Op> calibrate_corrections(const Ansatz<Op>& ansatz, const AlgebraSpec& spec) {
    Calibration<Op> out;
    out.unknowns = ansatz.unknowns;
    const int n = static_cast<int>(ansatz.unknowns.size());
    auto res = relation_residuals(ansatz.ops, spec);
    std::vector<MPoly> eqs;
    for (const auto& r : res) {
        auto e = family_equations(r);
        eqs.insert(eqs.end(), e.begin(), e.end());
    }
    LinearStage st = solve_staged(std::move(eqs), n, ansatz.unknowns);
    out.consistent = st.consistent;
    out.message = st.message;
    out.values.assign(n, GQ(0));
    for (int i = 0; i < n; ++i)
        if (!st.solved.count(i)) out.free.push_back(ansatz.unknowns[i]);
    for (const auto& [i, e] : st.solved) out.values[i] = e.eval(out.values);
    for (const auto& [g, fam] : ansatz.ops) out.ops.emplace(g, fam.at(out.values));
    out.verify = verify_quadratic_algebra(out.ops, spec);
    if (out.consistent && !out.verify.pass) {
        out.consistent = false;
        out.message = "solution fails exact verification";
    }
    return out;
}

}  // namespace qalg
