#pragma once
// Expression trees on the (c, beta) phase plane, evaluated in complex doubles.

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace qalg {

using cplx = std::complex<double>;

enum class PhaseVar { c, beta };

class PhaseExpr {
public:
    enum class Kind { Const, C, Beta, Add, Mul, Div, Pow, Sin, Cos, Sqrt, Exp, Log, Atan };

    PhaseExpr() : PhaseExpr(cplx(0)) {}
    PhaseExpr(cplx v);
    PhaseExpr(double v) : PhaseExpr(cplx(v)) {}
    PhaseExpr(int v) : PhaseExpr(cplx(v)) {}
    static PhaseExpr c();
    static PhaseExpr beta();

    Kind kind() const;
    bool is_const() const { return kind() == Kind::Const; }
    bool is_const(cplx v) const { return is_const() && value() == v; }
    cplx value() const;

    // Domain checks: sqrt radicands real and > margin, |denominators| > margin.
    struct Eval {
        double margin = 1e-6;
        bool ok = true;
    };
    cplx eval(double c, double beta, Eval& ctx) const;
    cplx eval(double c, double beta) const;
    // beta -> beta + g
    PhaseExpr subst_beta(const PhaseExpr& g) const;
    std::string str() const;

    friend PhaseExpr operator+(const PhaseExpr& a, const PhaseExpr& b);
    friend PhaseExpr operator-(const PhaseExpr& a, const PhaseExpr& b);
    friend PhaseExpr operator*(const PhaseExpr& a, const PhaseExpr& b);
    friend PhaseExpr operator/(const PhaseExpr& a, const PhaseExpr& b);
    PhaseExpr operator-() const;
    friend PhaseExpr pow(const PhaseExpr& a, cplx k);
    friend PhaseExpr sin(const PhaseExpr& a);
    friend PhaseExpr cos(const PhaseExpr& a);
    friend PhaseExpr sqrt(const PhaseExpr& a);
    friend PhaseExpr exp(const PhaseExpr& a);
    friend PhaseExpr log(const PhaseExpr& a);
    friend PhaseExpr atan(const PhaseExpr& a);
    friend PhaseExpr pderiv(const PhaseExpr& f, PhaseVar v);

    struct Node;

private:
    explicit PhaseExpr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    static PhaseExpr make(Kind k, std::vector<PhaseExpr> args, cplx v = 0);
    std::shared_ptr<const Node> n_;
};

struct PhaseExpr::Node {
    Kind kind;
    cplx value;  // Const value, Pow exponent
    std::vector<PhaseExpr> args;
};

inline PhaseExpr::Kind PhaseExpr::kind() const { return n_->kind; }
inline cplx PhaseExpr::value() const { return n_->value; }

PhaseExpr poisson_bracket(const PhaseExpr& f, const PhaseExpr& g);

}  // namespace qalg
