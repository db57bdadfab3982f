#pragma once
// Differential and shift operators with rational-function coefficients, in normal form.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qalg/poly.hpp"

namespace qalg {

// sum_k c_k(t) D^k
class DiffOp {
public:
    DiffOp() = default;
    DiffOp(const RatFunc& c) { if (!c.is_zero()) c_.push_back(c); }
    DiffOp(const GQ& c) : DiffOp(RatFunc(c)) {}
    explicit DiffOp(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }

    static DiffOp D() { return DiffOp(std::vector<RatFunc>{RatFunc(), RatFunc(1)}); }
    static DiffOp mul(const RatFunc& f) { return DiffOp(f); }
    DiffOp identity_like() const { return DiffOp(GQ(1)); }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<RatFunc>& coeffs() const { return c_; }
    RatFunc coeff(int k) const { return (k >= 0 && k <= order()) ? c_[k] : RatFunc(); }
    void set_coeff(int k, const RatFunc& f);

    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    friend DiffOp operator*(const GQ& s, const DiffOp& a);
    friend DiffOp operator*(const RatFunc& f, const DiffOp& a);  // left multiplication
    DiffOp operator-() const { return GQ(-1) * *this; }
    // composition
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.c_ == b.c_; }

    Poly apply(const Poly& f) const;  // throws if the image is not polynomial
    RatFunc apply(const RatFunc& f) const;
    std::string str() const;

private:
    void trim();
    std::vector<RatFunc> c_;
};

// sum_k c_k(t) T^{k s}
class ShiftOp {
public:
    explicit ShiftOp(const GQ& step = GQ(1));
    ShiftOp(const GQ& step, std::map<int, RatFunc> terms);

    static ShiftOp T(const GQ& step, int k, const RatFunc& c = RatFunc(1));
    static ShiftOp mul(const GQ& step, const RatFunc& f) { return T(step, 0, f); }
    ShiftOp identity_like() const { return T(step_, 0); }

    const GQ& step() const { return step_; }
    const std::map<int, RatFunc>& terms() const { return t_; }
    RatFunc coeff(int k) const;
    bool is_zero() const { return t_.empty(); }
    int min_shift() const { return t_.empty() ? 0 : t_.begin()->first; }
    int max_shift() const { return t_.empty() ? 0 : t_.rbegin()->first; }

    ShiftOp& operator+=(const ShiftOp& o);
    ShiftOp& operator-=(const ShiftOp& o);
    friend ShiftOp operator+(ShiftOp a, const ShiftOp& b) { return a += b; }
    friend ShiftOp operator-(ShiftOp a, const ShiftOp& b) { return a -= b; }
    friend ShiftOp operator*(const GQ& s, const ShiftOp& a);
    friend ShiftOp operator*(const RatFunc& f, const ShiftOp& a);
    ShiftOp operator-() const { return GQ(-1) * *this; }
    friend ShiftOp operator*(const ShiftOp& a, const ShiftOp& b);
    friend bool operator==(const ShiftOp& a, const ShiftOp& b) { return a.step_ == b.step_ && a.t_ == b.t_; }

    Poly apply(const Poly& f) const;
    RatFunc apply(const RatFunc& f) const;
    // (A f)(t0) for f known on the lattice t0 + k*step
    GQ apply_at(const std::function<GQ(const GQ&)>& f, const GQ& t0) const;
    std::string str() const;

private:
    void check_step(const ShiftOp& o) const;
    void clean();
    GQ step_;
    std::map<int, RatFunc> t_;
};

template <class Op>
Op commutator(const Op& a, const Op& b) { return a * b - b * a; }
template <class Op>
Op anticommutator(const Op& a, const Op& b) { return a * b + b * a; }

// Dense square matrix over Q(i).
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, GQ(0)) {}
    static Matrix identity(int n);
    Matrix identity_like() const { return identity(n_); }

    int dim() const { return n_; }
    GQ& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const GQ& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    bool is_zero() const;
    // zero on rows/cols [0, w)
    bool is_zero_window(int w) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const GQ& s, Matrix a);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix operator-() const { return GQ(-1) * *this; }
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

    double max_abs() const;
    std::string str() const;

private:
    int n_ = 0;
    std::vector<GQ> a_;
};

// Column n holds the coefficients of A t^n; throws if A leaks out of degree < dim.
template <class Op>
Matrix matrix_on_monomials(const Op& A, int dim);

// Operator coefficients that are Laurent polynomials in e^{2it}: coeffs[k][j] multiplies e^{2ijt} d^k/dt^k.
struct TrigDiffOp {
    std::vector<std::map<int, GQ>> coeffs;
    void add(int deriv, int freq, const GQ& c);
};

// d/dt -> 2i tau d/dtau, e^{2it} -> tau, then tau^{-g} (.) tau^{g}.
DiffOp conjugate_and_substitute(const TrigDiffOp& A, const GQ& g);

// Conjugate a DiffOp by tau^g: tau^{-g} A tau^{g}.
DiffOp conjugate_power(const DiffOp& A, const GQ& g);

// Largest absolute numerator coefficient over all coefficient functions.
double residual_norm(const DiffOp& a);
double residual_norm(const ShiftOp& a);
double residual_norm(const Matrix& a);

}  // namespace qalg
