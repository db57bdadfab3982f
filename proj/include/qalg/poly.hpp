#pragma once
// Univariate polynomials and rational functions over Q(i).

#include <utility>
#include <vector>

#include "qalg/field.hpp"

namespace qalg {

class Poly {
public:
    Poly() = default;
    Poly(const GQ& c) { if (!c.is_zero()) c_.push_back(c); }
    Poly(long c) : Poly(GQ(c)) {}
    explicit Poly(std::vector<GQ> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly t() { return Poly(std::vector<GQ>{GQ(0), GQ(1)}); }
    // t + s
    static Poly linear(const GQ& s) { return Poly(std::vector<GQ>{s, GQ(1)}); }
    static Poly monomial(int n, const GQ& c = GQ(1));
    // Product of (t - r) over roots.
    static Poly from_roots(const std::vector<GQ>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_const() const { return c_.size() <= 1; }
    const std::vector<GQ>& coeffs() const { return c_; }
    GQ coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : GQ(0); }
    const GQ& lead() const { return c_.back(); }

    GQ eval(const GQ& x) const;
    std::complex<double> eval(std::complex<double> x) const;
    Poly deriv() const;
    // p(t + s)
    Poly shift(const GQ& s) const;
    // p(c t)
    Poly scale_arg(const GQ& c) const;
    Poly monic() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const GQ& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const GQ& s) { return a *= s; }
    friend Poly operator*(const GQ& s, Poly a) { return a *= s; }
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const char* var = "t") const;

private:
    void trim();
    std::vector<GQ> c_;
};

Poly pow(const Poly& p, unsigned n);
// a = q*b + r
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly exact_div(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);  // monic, gcd(0,0) = 0

class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const GQ& c) : num_(c), den_(1) {}
    RatFunc(long c) : RatFunc(GQ(c)) {}
    RatFunc(const Poly& p) : num_(p), den_(1) {}
    RatFunc(const Poly& n, const Poly& d);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }
    bool is_const() const { return is_poly() && num_.is_const(); }

    GQ eval(const GQ& x) const;  // throws at poles
    std::complex<double> eval(std::complex<double> x) const;
    RatFunc deriv() const;
    RatFunc shift(const GQ& s) const;
    RatFunc scale_arg(const GQ& c) const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str(const char* var = "t") const;

private:
    void normalize();
    Poly num_, den_;
};

RatFunc ratfunc_normalize(const Poly& num, const Poly& den);

}  // namespace qalg
