#pragma once
// Formal words in named generators and exact verification of algebra relations
// on any operator type with +, -, scalar *, composition and identity_like().

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qalg/field.hpp"

namespace qalg {

class DiffOp;
class ShiftOp;
class Matrix;

using Word = std::vector<int>;

// Formal linear combination of words; the empty word is the identity.
class Combo {
public:
    Combo() = default;
    Combo(const GQ& c) { if (!c.is_zero()) terms[{}] = c; }
    Combo(long c) : Combo(GQ(c)) {}
    static Combo gen(int idx) { Combo r; r.terms[{idx}] = GQ(1); return r; }

    std::map<Word, GQ> terms;

    Combo& operator+=(const Combo& o);
    Combo& operator-=(const Combo& o) { return *this += GQ(-1) * o; }
    friend Combo operator+(Combo a, const Combo& b) { return a += b; }
    friend Combo operator-(Combo a, const Combo& b) { return a -= b; }
    friend Combo operator*(const GQ& s, const Combo& a);
    friend Combo operator*(const Combo& a, const Combo& b);
    Combo operator-() const { return GQ(-1) * *this; }
};

Combo comm(const Combo& a, const Combo& b);
Combo anti(const Combo& a, const Combo& b);
// sum over the 6 orderings
Combo sym3(const Combo& a, const Combo& b, const Combo& c);

struct Relation {
    std::string name;
    Combo lhs, rhs;
};

struct AlgebraSpec {
    std::string name;
    std::vector<std::string> generators;                  // supplied operators
    std::vector<std::pair<std::string, Combo>> derived;  // defined from earlier ones
    std::vector<Relation> relations;
    std::map<std::string, GQ> params;

    int index(const std::string& g) const;
    Combo g(const std::string& name) const { return Combo::gen(index(name)); }
    int add_derived(const std::string& name, const Combo& c);
    // throws if a relation references an unknown index
    void validate() const;
};

// Relations of `target` expressed over the generators of `base`, whose
// generators and derived entries must define every generator of `target` by name.
AlgebraSpec rebase(const AlgebraSpec& target, AlgebraSpec base);

// S3: X, L1, L2 with parameters H, alpha.
AlgebraSpec s3_quantum_spec(const GQ& H, const GQ& alpha);
// S9 symmetric form: L1, L2 supplied; L3 and R derived.
AlgebraSpec s9_quantum_spec(const GQ& a1, const GQ& a2, const GQ& a3, const GQ& H);

struct RelationResult {
    std::string name;
    bool pass = false;
    double residual_norm = 0;
    std::string residual;  // normal form of lhs - rhs, empty when zero
};

struct VerifyReport {
    std::string spec;
    bool pass = true;
    std::vector<RelationResult> relations;
};

template <class Op>
class WordEvaluator {
public:
    WordEvaluator(const AlgebraSpec& spec, const std::map<std::string, Op>& ops) : spec_(spec) {
        spec.validate();
        for (const auto& g : spec.generators) {
            auto it = ops.find(g);
            if (it == ops.end()) throw MathError("missing operator " + g);
            gens_.push_back(it->second);
        }
        identity_ = gens_.at(0).identity_like();
        for (const auto& [n, c] : spec.derived) gens_.push_back(eval(c));
    }

    const Op& word(const Word& w) {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        Op v = w.empty() ? identity_
               : w.size() == 1
                   ? gens_.at(w[0])
                   : word(Word(w.begin(), w.end() - 1)) * gens_.at(w.back());
        return memo_.emplace(w, std::move(v)).first->second;
    }

    Op eval(const Combo& c) {
        Op r = GQ(0) * identity_;
        for (const auto& [w, s] : c.terms) r += s * word(w);
        return r;
    }

    const Op& generator(const std::string& n) { return gens_.at(spec_.index(n)); }

private:
    const AlgebraSpec& spec_;
    std::vector<Op> gens_;
    Op identity_;
    std::map<Word, Op> memo_;
};

template <class Op>
std::vector<Op> relation_residuals(const std::map<std::string, Op>& ops, const AlgebraSpec& spec) {
    WordEvaluator<Op> ev(spec, ops);
    std::vector<Op> out;
    for (const auto& r : spec.relations) out.push_back(ev.eval(r.lhs - r.rhs));
    return out;
}

double residual_norm_of(const DiffOp& a);
double residual_norm_of(const ShiftOp& a);
double residual_norm_of(const Matrix& a);
std::string residual_str(const DiffOp& a);
std::string residual_str(const ShiftOp& a);
std::string residual_str(const Matrix& a);

template <class Op>
VerifyReport verify_quadratic_algebra(const std::map<std::string, Op>& ops, const AlgebraSpec& spec,
                                      std::function<bool(const Op&)> is_zero = nullptr) {
    if (!is_zero) is_zero = [](const Op& o) { return o.is_zero(); };
    VerifyReport rep;
    rep.spec = spec.name;
    auto res = relation_residuals(ops, spec);
    for (size_t k = 0; k < res.size(); ++k) {
        RelationResult rr;
        rr.name = spec.relations[k].name;
        rr.pass = is_zero(res[k]);
        if (!rr.pass) {
            rr.residual_norm = residual_norm_of(res[k]);
            rr.residual = residual_str(res[k]);
            if (rr.residual.size() > 2000) rr.residual = rr.residual.substr(0, 2000) + " ...";
        }
        rep.pass = rep.pass && rr.pass;
        rep.relations.push_back(std::move(rr));
    }
    return rep;
}

}  // namespace qalg
