#include "qalg/poly.hpp"

#include <sstream>

namespace qalg {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(int n, const GQ& c) {
    std::vector<GQ> v(n + 1, GQ(0));
    v[n] = c;
    return Poly(std::move(v));
}

Poly Poly::from_roots(const std::vector<GQ>& roots) {
    Poly p(1);
    for (const auto& r : roots) p = p * linear(-r);
    return p;
}

GQ Poly::eval(const GQ& x) const {
    GQ r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r *= x;
        r += *it;
    }
    return r;
}

std::complex<double> Poly::eval(std::complex<double> x) const {
    std::complex<double> r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->to_complex();
    return r;
}

Poly Poly::deriv() const {
    if (c_.size() <= 1) return Poly();
    std::vector<GQ> v(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * GQ(static_cast<long>(k));
    return Poly(std::move(v));
}

Poly Poly::shift(const GQ& s) const {
    if (s.is_zero() || c_.size() <= 1) return *this;
    // Horner in (t + s)
    std::vector<GQ> r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        // r <- r*(t+s) + c
        std::vector<GQ> n(r.size() + 1, GQ(0));
        for (size_t k = 0; k < r.size(); ++k) {
            n[k + 1] += r[k];
            n[k] += r[k] * s;
        }
        n[0] += *it;
        r = std::move(n);
    }
    return Poly(std::move(r));
}

Poly Poly::scale_arg(const GQ& c) const {
    std::vector<GQ> v = c_;
    GQ f(1);
    for (auto& x : v) {
        x *= f;
        f *= c;
    }
    return Poly(std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inv();
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), GQ(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), GQ(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const GQ& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<GQ> v(a.c_.size() + b.c_.size() - 1, GQ(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

std::string Poly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = c_[k].str();
        bool compound = !c_[k].is_real() && sgn(c_[k].re()) != 0;
        if (k == 0)
            os << (compound ? "(" + cs + ")" : cs);
        else {
            if (!c_[k].is_one()) os << (compound ? "(" + cs + ")" : cs) << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Poly pow(const Poly& p, unsigned n) {
    Poly r(1), x = p;
    while (n) {
        if (n & 1u) r = r * x;
        n >>= 1u;
        if (n) x = x * x;
    }
    return r;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw MathError("polynomial division by zero");
    std::vector<GQ> rem = a.coeffs();
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) {
        q = Poly();
        r = a;
        return;
    }
    GQ lb_inv = b.lead().inv();
    std::vector<GQ> qv(dq + 1, GQ(0));
    for (int k = dq; k >= 0; --k) {
        GQ f = rem[k + db] * lb_inv;
        qv[k] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[k + j] -= f * b.coeff(j);
    }
    rem.resize(db);
    q = Poly(std::move(qv));
    r = Poly(std::move(rem));
}

Poly exact_div(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw MathError("inexact polynomial division");
    return q;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

RatFunc::RatFunc(const Poly& n, const Poly& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw MathError("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den_.degree() > 0) {
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    GQ l = den_.lead();
    if (!l.is_one()) {
        GQ li = l.inv();
        num_ *= li;
        den_ *= li;
    }
}

RatFunc ratfunc_normalize(const Poly& num, const Poly& den) { return RatFunc(num, den); }

GQ RatFunc::eval(const GQ& x) const {
    GQ d = den_.eval(x);
    if (d.is_zero()) throw MathError("pole at " + x.str());
    return num_.eval(x) / d;
}

std::complex<double> RatFunc::eval(std::complex<double> x) const { return num_.eval(x) / den_.eval(x); }

RatFunc RatFunc::deriv() const {
    if (is_poly()) return RatFunc(num_.deriv() * den_.lead().inv());
    return RatFunc(num_.deriv() * den_ - num_ * den_.deriv(), den_ * den_);
}

RatFunc RatFunc::shift(const GQ& s) const {
    RatFunc r;
    r.num_ = num_.shift(s);
    r.den_ = den_.shift(s);  // shifting preserves coprimality and monicity
    return r;
}

RatFunc RatFunc::scale_arg(const GQ& c) const { return RatFunc(num_.scale_arg(c), den_.scale_arg(c)); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    if (o.is_poly()) {
        num_ += o.num_ * den_;
        return *this;  // still coprime
    }
    if (is_poly()) {
        num_ = num_ * o.den_ + o.num_;
        den_ = o.den_;
        return *this;
    }
    Poly g = gcd(den_, o.den_);
    Poly a = exact_div(den_, g), b = exact_div(o.den_, g);
    num_ = num_ * b + o.num_ * a;
    den_ = a * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) return *this = RatFunc();
    if (is_poly() && o.is_poly()) {
        num_ = num_ * o.num_;
        return *this;
    }
    // cross-cancel
    Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    Poly n1 = exact_div(num_, g1), d2 = exact_div(o.den_, g1);
    Poly n2 = exact_div(o.num_, g2), d1 = exact_div(den_, g2);
    num_ = n1 * n2;
    den_ = d1 * d2;
    GQ l = den_.lead();
    if (!l.is_one()) {
        GQ li = l.inv();
        num_ *= li;
        den_ *= li;
    }
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw MathError("rational function division by zero");
    RatFunc inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    GQ l = inv.den_.lead();
    inv.num_ *= l.inv();
    inv.den_ *= l.inv();
    return *this *= inv;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string RatFunc::str(const char* var) const {
    if (is_poly()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace qalg
