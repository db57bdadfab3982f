#pragma once
#include <random>

#include "qalg/ops.hpp"

namespace testgen {

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240611);
    return g;
}

inline qalg::Rat rat(int bound = 50) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    qalg::Rat r(num(rng()), den(rng()));
    r.canonicalize();
    return r;
}

inline qalg::GQ gq(int bound = 50) { return qalg::GQ(rat(bound), rat(bound)); }

inline qalg::Poly poly(int deg, int bound = 9) {
    std::vector<qalg::GQ> c;
    for (int k = 0; k <= deg; ++k) c.push_back(gq(bound));
    return qalg::Poly(c);
}

inline qalg::RatFunc ratfunc(int dn, int dd) {
    qalg::Poly d = poly(dd);
    while (d.is_zero()) d = poly(dd);
    return qalg::RatFunc(poly(dn), d);
}

inline qalg::DiffOp diffop(int order) {
    std::vector<qalg::RatFunc> c;
    for (int k = 0; k <= order; ++k) c.push_back(k == 0 ? qalg::RatFunc(poly(2)) : qalg::RatFunc(poly(1)));
    return qalg::DiffOp(c);
}

inline qalg::ShiftOp shiftop(const qalg::GQ& step) {
    std::map<int, qalg::RatFunc> t;
    for (int k = -1; k <= 1; ++k) t[k] = ratfunc(2, 1);
    return qalg::ShiftOp(step, t);
}

}  // namespace testgen
