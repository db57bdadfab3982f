#include "qalg/field.hpp"

#include <cctype>

namespace qalg {

std::string GQ::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(re_) != 0) out = re_.get_str();
    if (sgn(im_) != 0) {
        Rat a = abs(im_);
        std::string mag = (a == 1) ? "" : a.get_str();
        if (sgn(im_) < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        out += mag + "i";
    }
    return out;
}

long GQ::to_long() const {
    if (!is_integer()) throw MathError("not an integer: " + str());
    if (!re_.get_num().fits_slong_p()) throw MathError("integer out of range");
    return re_.get_num().get_si();
}

namespace {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw MathError("empty rational literal");
    for (char ch : s)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
            throw MathError("bad rational literal '" + s + "'");
    auto slash = s.find('/');
    if (slash != std::string::npos && s.find('/', slash + 1) != std::string::npos)
        throw MathError("bad rational literal '" + s + "'");
    std::string body = s;
    if (!body.empty() && body[0] == '+') body = body.substr(1);
    Rat r;
    try {
        r = Rat(body, 10);
    } catch (const std::invalid_argument&) {
        throw MathError("bad rational literal '" + s + "'");
    }
    if (r.get_den() == 0) throw MathError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace

GQ GQ::parse(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw MathError("empty literal");

    // Split at a sign that is not the leading one.
    size_t split = std::string::npos;
    for (size_t k = 1; k < s.size(); ++k)
        if (s[k] == '+' || s[k] == '-') split = k;

    auto imag_part = [](std::string p) {
        p.pop_back();  // trailing i
        if (p.empty() || p == "+") return Rat(1);
        if (p == "-") return Rat(-1);
        return parse_rat(p);
    };

    if (split == std::string::npos) {
        if (s.back() == 'i') return GQ(0, imag_part(s));
        return GQ(parse_rat(s));
    }
    std::string a = s.substr(0, split), b = s.substr(split);
    if (b.back() != 'i' || a.back() == 'i') throw MathError("bad Gaussian literal '" + raw + "'");
    return GQ(parse_rat(a), imag_part(b));
}

GQ pow(GQ x, unsigned n) {
    GQ r(1);
    while (n) {
        if (n & 1u) r *= x;
        x *= x;
        n >>= 1u;
    }
    return r;
}

namespace {

bool rat_sqrt(const Rat& x, Rat& out) {
    if (sgn(x) < 0) return false;
    mpz_class n = x.get_num(), d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    out = Rat(sqrt(n), sqrt(d));
    out.canonicalize();
    return true;
}

}  // namespace

bool exact_sqrt(const GQ& x, GQ& out) {
    if (x.is_real() && sgn(x.re()) >= 0) {
        Rat r;
        if (!rat_sqrt(x.re(), r)) return false;
        out = GQ(r);
        return true;
    }
    if (x.is_real()) {
        Rat r;
        if (!rat_sqrt(-x.re(), r)) return false;
        out = GQ(0, r);
        return true;
    }
    // (u+iv)^2 = a+ib  =>  u^2 = (a+|x|)/2
    Rat m;
    if (!rat_sqrt(x.norm(), m)) return false;
    Rat u;
    if (!rat_sqrt((x.re() + m) / 2, u)) return false;
    Rat v = x.im() / (2 * u);
    out = GQ(u, v);
    return true;
}

}  // namespace qalg
