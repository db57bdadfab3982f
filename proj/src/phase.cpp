#include "qalg/phase.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <unordered_map>

#include "qalg/field.hpp"

namespace qalg {

using K = PhaseExpr::Kind;

PhaseExpr::PhaseExpr(cplx v) : n_(std::make_shared<const Node>(Node{K::Const, v, {}})) {}
PhaseExpr PhaseExpr::c() { return make(K::C, {}); }
PhaseExpr PhaseExpr::beta() { return make(K::Beta, {}); }

PhaseExpr PhaseExpr::make(Kind k, std::vector<PhaseExpr> args, cplx v) {
    return PhaseExpr(std::make_shared<const Node>(Node{k, v, std::move(args)}));
}

PhaseExpr operator+(const PhaseExpr& a, const PhaseExpr& b) {
    if (a.is_const() && b.is_const()) return a.value() + b.value();
    if (a.is_const(0)) return b;
    if (b.is_const(0)) return a;
    return PhaseExpr::make(K::Add, {a, b});
}
PhaseExpr operator-(const PhaseExpr& a, const PhaseExpr& b) { return a + (-b); }
PhaseExpr PhaseExpr::operator-() const { return PhaseExpr(cplx(-1)) * *this; }

PhaseExpr operator*(const PhaseExpr& a, const PhaseExpr& b) {
    if (a.is_const() && b.is_const()) return a.value() * b.value();
    if (a.is_const(0) || b.is_const(0)) return 0;
    if (a.is_const(1)) return b;
    if (b.is_const(1)) return a;
    return PhaseExpr::make(K::Mul, {a, b});
}

PhaseExpr operator/(const PhaseExpr& a, const PhaseExpr& b) {
    if (b.is_const(0)) throw MathError("division by the zero expression");
    if (a.is_const(0)) return 0;
    if (b.is_const()) return a * PhaseExpr(1.0 / b.value());
    return PhaseExpr::make(K::Div, {a, b});
}

PhaseExpr pow(const PhaseExpr& a, cplx k) {
    if (k == cplx(0)) return 1;
    if (k == cplx(1)) return a;
    if (a.is_const()) return std::pow(a.value(), k);
    return PhaseExpr::make(K::Pow, {a}, k);
}

#define QALG_UNARY(name, kind, fn)                               \
    PhaseExpr name(const PhaseExpr& a) {                          \
        if (a.is_const()) return std::fn(a.value());              \
        return PhaseExpr::make(K::kind, {a});                     \
    }
QALG_UNARY(sin, Sin, sin)
QALG_UNARY(cos, Cos, cos)
QALG_UNARY(sqrt, Sqrt, sqrt)
QALG_UNARY(exp, Exp, exp)
QALG_UNARY(log, Log, log)
QALG_UNARY(atan, Atan, atan)
#undef QALG_UNARY

PhaseExpr pderiv(const PhaseExpr& f, PhaseVar v) {
    const auto& a = f.n_->args;
    switch (f.kind()) {
        case K::Const: return 0;
        case K::C: return v == PhaseVar::c ? 1 : 0;
        case K::Beta: return v == PhaseVar::beta ? 1 : 0;
        case K::Add: return pderiv(a[0], v) + pderiv(a[1], v);
        case K::Mul: return pderiv(a[0], v) * a[1] + a[0] * pderiv(a[1], v);
        case K::Div: return (pderiv(a[0], v) * a[1] - a[0] * pderiv(a[1], v)) / pow(a[1], 2);
        case K::Pow: return PhaseExpr(f.value()) * pow(a[0], f.value() - 1.0) * pderiv(a[0], v);
        case K::Sin: return cos(a[0]) * pderiv(a[0], v);
        case K::Cos: return -sin(a[0]) * pderiv(a[0], v);
        case K::Sqrt: return pderiv(a[0], v) / (PhaseExpr(2) * f);
        case K::Exp: return f * pderiv(a[0], v);
        case K::Log: return pderiv(a[0], v) / a[0];
        case K::Atan: return pderiv(a[0], v) / (PhaseExpr(1) + pow(a[0], 2));
    }
    return 0;
}

cplx PhaseExpr::eval(double c, double beta, Eval& ctx) const {
    std::unordered_map<const Node*, cplx> memo;
    std::function<cplx(const PhaseExpr&)> go = [&](const PhaseExpr& e) -> cplx {
        auto it = memo.find(e.n_.get());
        if (it != memo.end()) return it->second;
        const auto& a = e.n_->args;
        cplx r;
        switch (e.kind()) {
            case K::Const: r = e.value(); break;
            case K::C: r = c; break;
            case K::Beta: r = beta; break;
            case K::Add: r = go(a[0]) + go(a[1]); break;
            case K::Mul: r = go(a[0]) * go(a[1]); break;
            case K::Div: {
                cplx d = go(a[1]);
                if (std::abs(d) <= ctx.margin) ctx.ok = false;
                r = go(a[0]) / d;
                break;
            }
            case K::Pow: {
                cplx b = go(a[0]);
                double k = e.value().real();
                bool integral = e.value().imag() == 0 && k == std::round(k);
                if (!integral && (std::abs(b.imag()) > 1e-12 * std::max(1.0, std::abs(b)) || b.real() <= ctx.margin))
                    ctx.ok = false;
                if (integral && k < 0 && std::abs(b) <= ctx.margin) ctx.ok = false;
                r = integral ? std::pow(b, static_cast<int>(k)) : std::pow(b, e.value());
                break;
            }
            case K::Sin: r = std::sin(go(a[0])); break;
            case K::Cos: r = std::cos(go(a[0])); break;
            case K::Sqrt: {
                cplx b = go(a[0]);
                if (std::abs(b.imag()) > 1e-12 * std::max(1.0, std::abs(b)) || b.real() <= ctx.margin) ctx.ok = false;
                r = std::sqrt(b);
                break;
            }
            case K::Exp: r = std::exp(go(a[0])); break;
            case K::Log: {
                cplx b = go(a[0]);
                if (std::abs(b) <= ctx.margin) ctx.ok = false;
                r = std::log(b);
                break;
            }
            case K::Atan: r = std::atan(go(a[0])); break;
        }
        memo.emplace(e.n_.get(), r);
        return r;
    };
    return go(*this);
}

cplx PhaseExpr::eval(double c, double beta) const {
    Eval ctx;
    return eval(c, beta, ctx);
}

PhaseExpr PhaseExpr::subst_beta(const PhaseExpr& g) const {
    std::unordered_map<const Node*, PhaseExpr> memo;
    PhaseExpr shifted = beta() + g;
    std::function<PhaseExpr(const PhaseExpr&)> go = [&](const PhaseExpr& e) -> PhaseExpr {
        auto it = memo.find(e.n_.get());
        if (it != memo.end()) return it->second;
        const auto& a = e.n_->args;
        PhaseExpr r;
        switch (e.kind()) {
            case K::Const:
            case K::C: r = e; break;
            case K::Beta: r = shifted; break;
            case K::Add: r = go(a[0]) + go(a[1]); break;
            case K::Mul: r = go(a[0]) * go(a[1]); break;
            case K::Div: r = go(a[0]) / go(a[1]); break;
            case K::Pow: r = pow(go(a[0]), e.value()); break;
            case K::Sin: r = sin(go(a[0])); break;
            case K::Cos: r = cos(go(a[0])); break;
            case K::Sqrt: r = sqrt(go(a[0])); break;
            case K::Exp: r = exp(go(a[0])); break;
            case K::Log: r = log(go(a[0])); break;
            case K::Atan: r = atan(go(a[0])); break;
        }
        memo.emplace(e.n_.get(), r);
        return r;
    };
    return go(*this);
}

namespace {

std::string num(cplx v) {
    char buf[80];
    if (v.imag() == 0)
        std::snprintf(buf, sizeof buf, "%.12g", v.real());
    else if (v.real() == 0)
        std::snprintf(buf, sizeof buf, "%.12gi", v.imag());
    else
        std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)", v.real(), v.imag());
    return buf;
}

}  // namespace

std::string PhaseExpr::str() const {
    const auto& a = n_->args;
    switch (kind()) {
        case K::Const: return num(value());
        case K::C: return "c";
        case K::Beta: return "beta";
        case K::Add: return "(" + a[0].str() + " + " + a[1].str() + ")";
        case K::Mul: return a[0].str() + "*" + a[1].str();
        case K::Div: return a[0].str() + "/(" + a[1].str() + ")";
        case K::Pow: return "(" + a[0].str() + ")^" + num(value());
        case K::Sin: return "sin(" + a[0].str() + ")";
        case K::Cos: return "cos(" + a[0].str() + ")";
        case K::Sqrt: return "sqrt(" + a[0].str() + ")";
        case K::Exp: return "exp(" + a[0].str() + ")";
        case K::Log: return "log(" + a[0].str() + ")";
        case K::Atan: return "atan(" + a[0].str() + ")";
    }
    return "?";
}

PhaseExpr poisson_bracket(const PhaseExpr& f, const PhaseExpr& g) {
    return pderiv(f, PhaseVar::beta) * pderiv(g, PhaseVar::c) - pderiv(f, PhaseVar::c) * pderiv(g, PhaseVar::beta);
}

}  // namespace qalg
