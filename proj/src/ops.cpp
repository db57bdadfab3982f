#include "qalg/ops.hpp"

#include <algorithm>
#include <sstream>

namespace qalg {

// ---- DiffOp

void DiffOp::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void DiffOp::set_coeff(int k, const RatFunc& f) {
    if (k >= static_cast<int>(c_.size())) c_.resize(k + 1);
    c_[k] = f;
    trim();
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

DiffOp operator*(const GQ& s, const DiffOp& a) {
    if (s.is_zero()) return DiffOp();
    DiffOp r = a;
    for (auto& c : r.c_) c *= RatFunc(s);
    return r;
}

DiffOp operator*(const RatFunc& f, const DiffOp& a) {
    if (f.is_zero()) return DiffOp();
    DiffOp r = a;
    for (auto& c : r.c_) c *= f;
    r.trim();
    return r;
}

namespace {

long binom(int n, int k) {
    long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

}  // namespace

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    if (a.is_zero() || b.is_zero()) return DiffOp();
    int oa = a.order(), ob = b.order();
    std::vector<RatFunc> out(oa + ob + 1);
    // a_i D^i b_j D^j = sum_l C(i,l) a_i b_j^{(l)} D^{i-l+j}
    for (int j = 0; j <= ob; ++j) {
        if (b.c_[j].is_zero()) continue;
        std::vector<RatFunc> dj{b.c_[j]};
        for (int l = 1; l <= oa; ++l) dj.push_back(dj.back().deriv());
        for (int i = 0; i <= oa; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int l = 0; l <= i; ++l) {
                if (dj[l].is_zero()) continue;
                out[i - l + j] += RatFunc(GQ(binom(i, l))) * a.c_[i] * dj[l];
            }
        }
    }
    return DiffOp(std::move(out));
}

RatFunc DiffOp::apply(const RatFunc& f) const {
    RatFunc r, d = f;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (k) d = d.deriv();
        if (!c_[k].is_zero()) r += c_[k] * d;
    }
    return r;
}

Poly DiffOp::apply(const Poly& f) const {
    RatFunc r = apply(RatFunc(f));
    if (!r.is_poly()) throw MathError("image is not a polynomial");
    return r.num();
}

std::string DiffOp::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = order(); k >= 0; --k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "[" << c_[k].str() << "]";
        if (k == 1) os << "*D";
        if (k > 1) os << "*D^" << k;
    }
    return os.str();
}

// ---- ShiftOp

ShiftOp::ShiftOp(const GQ& step) : step_(step) {
    if (step_.is_zero()) throw MathError("shift step must be nonzero");
}

ShiftOp::ShiftOp(const GQ& step, std::map<int, RatFunc> terms) : ShiftOp(step) {
    t_ = std::move(terms);
    clean();
}

ShiftOp ShiftOp::T(const GQ& step, int k, const RatFunc& c) {
    ShiftOp r(step);
    if (!c.is_zero()) r.t_[k] = c;
    return r;
}

RatFunc ShiftOp::coeff(int k) const {
    auto it = t_.find(k);
    return it == t_.end() ? RatFunc() : it->second;
}

void ShiftOp::clean() {
    for (auto it = t_.begin(); it != t_.end();)
        it = it->second.is_zero() ? t_.erase(it) : std::next(it);
}

void ShiftOp::check_step(const ShiftOp& o) const {
    if (step_ != o.step_) throw MathError("mismatched shift steps " + step_.str() + " and " + o.step_.str());
}

ShiftOp& ShiftOp::operator+=(const ShiftOp& o) {
    check_step(o);
    for (const auto& [k, c] : o.t_) t_[k] += c;
    clean();
    return *this;
}

ShiftOp& ShiftOp::operator-=(const ShiftOp& o) {
    check_step(o);
    for (const auto& [k, c] : o.t_) t_[k] -= c;
    clean();
    return *this;
}

ShiftOp operator*(const GQ& s, const ShiftOp& a) {
    ShiftOp r(a.step_);
    if (s.is_zero()) return r;
    r.t_ = a.t_;
    for (auto& [k, c] : r.t_) c *= RatFunc(s);
    return r;
}

ShiftOp operator*(const RatFunc& f, const ShiftOp& a) {
    ShiftOp r(a.step_);
    r.t_ = a.t_;
    for (auto& [k, c] : r.t_) c *= f;
    r.clean();
    return r;
}

ShiftOp operator*(const ShiftOp& a, const ShiftOp& b) {
    a.check_step(b);
    ShiftOp r(a.step_);
    for (const auto& [ka, ca] : a.t_) {
        GQ s = a.step_ * GQ(static_cast<long>(ka));
        for (const auto& [kb, cb] : b.t_) r.t_[ka + kb] += ca * cb.shift(s);
    }
    r.clean();
    return r;
}

RatFunc ShiftOp::apply(const RatFunc& f) const {
    RatFunc r;
    for (const auto& [k, c] : t_) r += c * f.shift(step_ * GQ(static_cast<long>(k)));
    return r;
}

GQ ShiftOp::apply_at(const std::function<GQ(const GQ&)>& f, const GQ& t0) const {
    GQ r(0);
    for (const auto& [k, c] : t_) r += c.eval(t0) * f(t0 + step_ * GQ(static_cast<long>(k)));
    return r;
}

Poly ShiftOp::apply(const Poly& f) const {
    RatFunc r = apply(RatFunc(f));
    if (!r.is_poly()) throw MathError("image is not a polynomial");
    return r.num();
}

std::string ShiftOp::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str() << "]";
        if (k != 0) os << "*T^(" << (step_ * GQ(static_cast<long>(k))).str() << ")";
    }
    return os.str();
}

// ---- Matrix

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = GQ(1);
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const GQ& x) { return x.is_zero(); });
}

bool Matrix::is_zero_window(int w) const {
    for (int i = 0; i < std::min(w, n_); ++i)
        for (int j = 0; j < std::min(w, n_); ++j)
            if (!(*this)(i, j).is_zero()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (n_ != o.n_) throw MathError("matrix dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (n_ != o.n_) throw MathError("matrix dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Matrix operator*(const GQ& s, Matrix a) {
    for (auto& x : a.a_) x *= s;
    return a;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw MathError("matrix dimension mismatch");
    int n = a.n_;
    Matrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const GQ& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < n; ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    }
    os << "]";
    return os.str();
}

double Matrix::max_abs() const {
    double m = 0;
    for (const auto& x : a_) m = std::max(m, x.abs_d());
    return m;
}

template <class Op>
Matrix matrix_on_monomials(const Op& A, int dim) {
    if (dim < 1) throw MathError("dimension must be positive");
    Matrix m(dim);
    for (int n = 0; n < dim; ++n) {
        Poly img;
        try {
            img = A.apply(Poly::monomial(n));
        } catch (const MathError&) {
            throw MathError("t^" + std::to_string(n) + " has a non-polynomial image");
        }
        if (img.degree() >= dim)
            throw MathError("t^" + std::to_string(n) + " leaks to degree " + std::to_string(img.degree()));
        for (int k = 0; k <= img.degree(); ++k) m(k, n) = img.coeff(k);
    }
    return m;
}

template Matrix matrix_on_monomials<DiffOp>(const DiffOp&, int);
template Matrix matrix_on_monomials<ShiftOp>(const ShiftOp&, int);

// ---- trig / Laurent substitution

void TrigDiffOp::add(int deriv, int freq, const GQ& c) {
    if (deriv >= static_cast<int>(coeffs.size())) coeffs.resize(deriv + 1);
    coeffs[deriv][freq] += c;
}

namespace {

RatFunc laurent(const std::map<int, GQ>& terms) {
    int lo = 0;
    for (const auto& [j, c] : terms) lo = std::min(lo, j);
    std::vector<GQ> num;
    for (const auto& [j, c] : terms) {
        size_t idx = static_cast<size_t>(j - lo);
        if (num.size() <= idx) num.resize(idx + 1, GQ(0));
        num[idx] += c;
    }
    return RatFunc(Poly(std::move(num)), Poly::monomial(-lo));
}

}  // namespace

DiffOp conjugate_and_substitute(const TrigDiffOp& A, const GQ& g) {
    // tau^{-g} d/dt tau^{g} = 2i (tau D + g)
    DiffOp dt = GQ(0, 2) * (DiffOp(std::vector<RatFunc>{RatFunc(), RatFunc(Poly::t())}) + DiffOp(g));
    DiffOp out, power = DiffOp(GQ(1));
    for (size_t k = 0; k < A.coeffs.size(); ++k) {
        if (k) power = power * dt;
        if (A.coeffs[k].empty()) continue;
        out += laurent(A.coeffs[k]) * power;
    }
    return out;
}

DiffOp conjugate_power(const DiffOp& A, const GQ& g) {
    // tau^{-g} D tau^{g} = D + g/tau
    DiffOp d = DiffOp::D() + DiffOp(RatFunc(Poly(g), Poly::t()));
    DiffOp out, power = DiffOp(GQ(1));
    for (int k = 0; k <= A.order(); ++k) {
        if (k) power = power * d;
        if (!A.coeff(k).is_zero()) out += A.coeff(k) * power;
    }
    return out;
}

namespace {

double rat_norm(const RatFunc& f) {
    double m = 0;
    for (const auto& c : f.num().coeffs()) m = std::max(m, c.abs_d());
    return m;
}

}  // namespace

double residual_norm(const DiffOp& a) {
    double m = 0;
    for (const auto& c : a.coeffs()) m = std::max(m, rat_norm(c));
    return m;
}

double residual_norm(const ShiftOp& a) {
    double m = 0;
    for (const auto& [k, c] : a.terms()) m = std::max(m, rat_norm(c));
    return m;
}

double residual_norm(const Matrix& a) { return a.max_abs(); }

}  // namespace qalg
