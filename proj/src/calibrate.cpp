#include "qalg/calibrate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qalg {

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    r.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

int MPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : t) d = std::max(d, static_cast<int>(m.size()));
    return d;
}

GQ MPoly::constant() const {
    auto it = t.find({});
    return it == t.end() ? GQ(0) : it->second;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.t) {
        auto it = t.find(m);
        if (it == t.end()) {
            t.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.t)
        for (const auto& [mb, cb] : b.t) {
            MPoly x;
            x.t[mono_mul(ma, mb)] = ca * cb;
            r += x;
        }
    return r;
}

MPoly operator*(const GQ& s, const MPoly& a) {
    MPoly r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.t) r.t.emplace(m, s * c);
    return r;
}

MPoly MPoly::subst(int var, const MPoly& by) const {
    bool present = false;
    for (const auto& [m, c] : t)
        if (std::binary_search(m.begin(), m.end(), var)) { present = true; break; }
    if (!present) return *this;
    std::vector<MPoly> powers{MPoly(GQ(1))};
    MPoly r;
    for (const auto& [m, c] : t) {
        Mono rest;
        size_t k = 0;
        for (int i : m) (i == var ? ++k : (rest.push_back(i), k));
        while (powers.size() <= k) powers.push_back(powers.back() * by);
        MPoly x;
        x.t[rest] = c;
        r += x * powers[k];
    }
    return r;
}

GQ MPoly::eval(const std::vector<GQ>& u) const {
    GQ s(0);
    for (const auto& [m, c] : t) {
        GQ v = c;
        for (int i : m) v *= u.at(i);
        s += v;
    }
    return s;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i : m) os << "*" << names.at(i);
    }
    return os.str();
}

std::vector<std::pair<int, RatFunc>> coefficient_slots(const DiffOp& a) {
    std::vector<std::pair<int, RatFunc>> r;
    for (int k = 0; k <= a.order(); ++k)
        if (!a.coeff(k).is_zero()) r.emplace_back(k, a.coeff(k));
    return r;
}

std::vector<std::pair<int, RatFunc>> coefficient_slots(const ShiftOp& a) {
    return {a.terms().begin(), a.terms().end()};
}

namespace {

GQ sample_point(int j) { return GQ(Rat(5 * j + 2, 13), Rat(1, j + 5)); }

MPoly normalized(const MPoly& e) {
    if (e.is_zero()) return e;
    return e.t.begin()->second.inv() * e;
}

std::string key(const MPoly& e) {
    std::ostringstream os;
    for (const auto& [m, c] : e.t) {
        for (int i : m) os << i << ",";
        os << ":" << c.str() << ";";
    }
    return os.str();
}

}  // namespace

template <class Op>
std::vector<MPoly> family_equations(const OpFamily<Op>& res) {
    std::map<int, std::vector<std::pair<Mono, RatFunc>>> slots;
    for (const auto& [m, op] : res.t)
        for (auto& [k, f] : coefficient_slots(op)) slots[k].emplace_back(m, f);
    std::vector<MPoly> out;
    std::set<std::string> seen;
    for (const auto& [k, terms] : slots) {
        // sum_m u^m f_m(t) = 0 identically iff it vanishes at deg(numerator over the lcm) + 1 points
        Poly l(1);
        for (const auto& [m, f] : terms) l = exact_div(l * f.den(), gcd(l, f.den()));
        int bound = 0;
        for (const auto& [m, f] : terms)
            bound = std::max(bound, f.num().degree() + l.degree() - f.den().degree());
        int used = 0;
        for (int j = 0; used <= bound; ++j) {
            GQ p = sample_point(j);
            if (l.eval(p).is_zero()) continue;
            ++used;
            MPoly e;
            for (const auto& [m, f] : terms) {
                MPoly x;
                x.t[m] = f.eval(p);
                e += x;
            }
            e = normalized(e);
            if (!e.is_zero() && seen.insert(key(e)).second) out.push_back(std::move(e));
        }
    }
    return out;
}

template std::vector<MPoly> family_equations(const OpFamily<DiffOp>&);
template std::vector<MPoly> family_equations(const OpFamily<ShiftOp>&);

LinearStage solve_staged(std::vector<MPoly> eqs, int n_unknowns, const std::vector<std::string>& names) {
    LinearStage st;
    std::map<int, MPoly>& piv = st.solved;
    auto reduce = [&](MPoly e) {
        for (const auto& [v, x] : piv) e = e.subst(v, x);
        return e;
    };
    for (;;) {
        std::vector<MPoly> rest;
        bool progress = false;
        for (auto& e0 : eqs) {
            MPoly e = reduce(e0);
            if (e.is_zero()) continue;
            if (e.degree() == 0) {
                st.consistent = false;
                st.message = "inconsistent: " + e.constant().str() + " = 0";
                return st;
            }
            if (e.degree() > 1) {
                rest.push_back(std::move(e));
                continue;
            }
            // affine: pick the lowest-index unknown as pivot
            int v = -1;
            GQ cv;
            for (const auto& [m, c] : e.t)
                if (m.size() == 1) { v = m[0]; cv = c; break; }
            MPoly x = e;
            x.t.erase({v});
            x = (-cv.inv()) * x;
            for (auto& [w, y] : piv) y = y.subst(v, x);
            piv.emplace(v, x);
            progress = true;
        }
        eqs = std::move(rest);
        if (!progress) break;
    }
    if (!eqs.empty()) {
        st.consistent = false;
        st.message = std::to_string(eqs.size()) + " nonlinear equations remain, e.g. " + eqs.front().str(names);
    }
    (void)n_unknowns;
    return st;
}

}  // namespace qalg
