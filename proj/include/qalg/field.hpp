#pragma once
// Exact Gaussian rationals over GMP.

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace qalg {

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Rat = mpq_class;

class GQ {
public:
    GQ() = default;
    GQ(long v) : re_(v) {}
    GQ(const Rat& re, const Rat& im = 0) : re_(re), im_(im) {
        re_.canonicalize();
        im_.canonicalize();
    }
    static GQ rat(long p, long q) { return GQ(Rat(p, q)); }
    static GQ i() { return GQ(0, 1); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GQ conj() const { return GQ(re_, -im_); }
    Rat norm() const { return re_ * re_ + im_ * im_; }

    GQ& operator+=(const GQ& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GQ& operator-=(const GQ& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GQ& operator*=(const GQ& o) {
        Rat r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = r;
        return *this;
    }
    GQ& operator/=(const GQ& o) { return *this *= o.inv(); }

    GQ inv() const {
        if (is_zero()) throw MathError("division by zero");
        Rat n = norm();
        return GQ(re_ / n, -im_ / n);
    }

    friend GQ operator+(GQ a, const GQ& b) { return a += b; }
    friend GQ operator-(GQ a, const GQ& b) { return a -= b; }
    friend GQ operator*(GQ a, const GQ& b) { return a *= b; }
    friend GQ operator/(GQ a, const GQ& b) { return a /= b; }
    GQ operator-() const { return GQ(-re_, -im_); }

    friend bool operator==(const GQ& a, const GQ& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
    double abs_d() const { return std::abs(to_complex()); }

    // "p/q", "p/q+r/si", "-i"; parts are omitted when zero.
    std::string str() const;
    static GQ parse(const std::string& s);

    // Exact integer test: value is a (real) integer.
    bool is_integer() const { return is_real() && re_.get_den() == 1; }
    long to_long() const;

private:
    Rat re_{0};
    Rat im_{0};
};

GQ pow(GQ x, unsigned n);

// Exact square root in Q(i) if it exists.
bool exact_sqrt(const GQ& x, GQ& out);

inline const GQ I_ = GQ(0, 1);

}  // namespace qalg
