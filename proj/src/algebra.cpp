#include "qalg/algebra.hpp"

#include "qalg/ops.hpp"

namespace qalg {

Combo& Combo::operator+=(const Combo& o) {
    for (const auto& [w, c] : o.terms) {
        GQ& v = terms[w];
        v += c;
        if (v.is_zero()) terms.erase(w);
    }
    return *this;
}

Combo operator*(const GQ& s, const Combo& a) {
    Combo r;
    if (s.is_zero()) return r;
    for (const auto& [w, c] : a.terms) r.terms[w] = s * c;
    return r;
}

Combo operator*(const Combo& a, const Combo& b) {
    Combo r;
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            Combo t;
            t.terms[w] = ca * cb;
            r += t;
        }
    return r;
}

Combo comm(const Combo& a, const Combo& b) { return a * b - b * a; }
Combo anti(const Combo& a, const Combo& b) { return a * b + b * a; }
Combo sym3(const Combo& a, const Combo& b, const Combo& c) {
    return a * b * c + a * c * b + b * a * c + b * c * a + c * a * b + c * b * a;
}

int AlgebraSpec::index(const std::string& g) const {
    for (size_t k = 0; k < generators.size(); ++k)
        if (generators[k] == g) return static_cast<int>(k);
    for (size_t k = 0; k < derived.size(); ++k)
        if (derived[k].first == g) return static_cast<int>(generators.size() + k);
    throw MathError("unknown generator " + g);
}

int AlgebraSpec::add_derived(const std::string& n, const Combo& c) {
    derived.emplace_back(n, c);
    return static_cast<int>(generators.size() + derived.size() - 1);
}

void AlgebraSpec::validate() const {
    if (generators.empty()) throw MathError("algebra spec without generators");
    int total = static_cast<int>(generators.size() + derived.size());
    auto check = [&](const Combo& c, int limit, const std::string& where) {
        for (const auto& [w, s] : c.terms)
            for (int g : w)
                if (g < 0 || g >= limit) throw MathError(where + " references an undeclared generator");
    };
    for (size_t k = 0; k < derived.size(); ++k)
        check(derived[k].second, static_cast<int>(generators.size() + k), "derived " + derived[k].first);
    for (const auto& r : relations) {
        check(r.lhs, total, "relation " + r.name);
        check(r.rhs, total, "relation " + r.name);
    }
}

AlgebraSpec rebase(const AlgebraSpec& target, AlgebraSpec base) {
    std::vector<int> map;
    for (const auto& g : target.generators) map.push_back(base.index(g));
    auto remap = [&](const Combo& c) {
        Combo r;
        for (const auto& [w, s] : c.terms) {
            Word v;
            for (int g : w) v.push_back(map.at(g));
            r.terms[v] += s;
        }
        return r;
    };
    for (const auto& [n, c] : target.derived) map.push_back(base.add_derived(n, remap(c)));
    for (const auto& r : target.relations) base.relations.push_back({r.name, remap(r.lhs), remap(r.rhs)});
    for (const auto& [k, v] : target.params) base.params.emplace(k, v);
    if (base.name.empty()) base.name = target.name;
    base.validate();
    return base;
}

AlgebraSpec s3_quantum_spec(const GQ& H, const GQ& alpha) {
    AlgebraSpec s;
    s.name = "S3";
    s.generators = {"X", "L1", "L2"};
    s.params = {{"H", H}, {"alpha", alpha}};
    Combo X = s.g("X"), L1 = s.g("L1"), L2 = s.g("L2");
    const GQ half = GQ::rat(1, 2);
    s.relations.push_back({"[L1,X]=2L2", comm(L1, X), GQ(2) * L2});
    s.relations.push_back({"[L2,X]=-X^2-2L1+H-alpha", comm(L2, X), -(X * X) - GQ(2) * L1 + Combo(H - alpha)});
    s.relations.push_back(
        {"[L1,L2]=-(L1X+XL1)-(1/2+2alpha)X", comm(L1, L2), -anti(L1, X) - (half + GQ(2) * alpha) * X});
    Combo cas = GQ::rat(1, 3) * (X * X * L1 + X * L1 * X + L1 * X * X) + L1 * L1 + L2 * L2 - H * L1 +
                (alpha + GQ::rat(11, 12)) * (X * X) - Combo(H / GQ(6)) + (alpha - GQ::rat(2, 3)) * L1 -
                Combo(GQ(5) * alpha / GQ(6));
    s.relations.push_back({"Casimir", cas, Combo()});
    return s;
}

AlgebraSpec s9_quantum_spec(const GQ& a1, const GQ& a2, const GQ& a3, const GQ& H) {
    AlgebraSpec s;
    s.name = "S9";
    s.generators = {"L1", "L2"};
    s.params = {{"a1", a1}, {"a2", a2}, {"a3", a3}, {"H", H}};
    Combo L1 = s.g("L1"), L2 = s.g("L2");
    Combo L3 = Combo(H - a1 - a2 - a3) - L1 - L2;
    s.add_derived("L3", L3);
    s.add_derived("R", comm(L1, L2));
    Combo R = s.g("R");
    Combo L[3] = {L1, L2, s.g("L3")};
    GQ a[3] = {a1, a2, a3};
    const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    for (const auto& c : cyc) {
        int i = c[0], j = c[1], k = c[2];
        Combo rhs = GQ(4) * anti(L[i], L[k]) - GQ(4) * anti(L[i], L[j]) - (GQ(8) + GQ(16) * a[j]) * L[j] +
                    (GQ(8) + GQ(16) * a[k]) * L[k] + Combo(GQ(8) * (a[j] - a[k]));
        std::string nm = "[L" + std::to_string(i + 1) + ",R]";
        s.relations.push_back({nm, comm(L[i], R), rhs});
    }
    Combo rhs = GQ::rat(8, 3) * sym3(L[0], L[1], L[2]);
    for (int i = 0; i < 3; ++i) rhs -= (GQ(16) * a[i] + GQ(12)) * (L[i] * L[i]);
    rhs += GQ::rat(52, 3) * (anti(L[0], L[1]) + anti(L[1], L[2]) + anti(L[2], L[0]));
    for (int i = 0; i < 3; ++i) rhs += GQ::rat(1, 3) * (GQ(16) + GQ(176) * a[i]) * L[i];
    rhs += Combo(GQ::rat(32, 3) * (a1 + a2 + a3) + GQ(48) * (a1 * a2 + a2 * a3 + a3 * a1) + GQ(64) * a1 * a2 * a3);
    s.relations.push_back({"R^2", R * R, rhs});
    return s;
}

double residual_norm_of(const DiffOp& a) { return residual_norm(a); }
double residual_norm_of(const ShiftOp& a) { return residual_norm(a); }
double residual_norm_of(const Matrix& a) { return residual_norm(a); }
std::string residual_str(const DiffOp& a) { return a.str(); }
std::string residual_str(const ShiftOp& a) { return a.str(); }
std::string residual_str(const Matrix& a) { return a.str(); }

}  // namespace qalg
