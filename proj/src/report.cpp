#include "qalg/report.hpp"

#include <cstdio>
#include <sstream>

namespace qalg {

json to_json(const Poly& p) {
    json a = json::array();
    for (int k = 0; k <= p.degree(); ++k) a.push_back(p.coeff(k).str());
    return a;
}

namespace {

json term(const char* key, int k, const RatFunc& c) {
    return {{key, k}, {"num", to_json(c.num())}, {"den", to_json(c.den())}};
}

RatFunc term_coeff(const json& t) { return RatFunc(poly_from_json(t.at("num")), poly_from_json(t.at("den"))); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
    return r + "\"";
}

}  // namespace

json to_json(const DiffOp& op, const std::string& variable) {
    json terms = json::array();
    for (int k = 0; k <= op.order(); ++k)
        if (!op.coeff(k).is_zero()) terms.push_back(term("deriv", k, op.coeff(k)));
    return {{"kind", "differential"}, {"variable", variable}, {"terms", terms}};
}

json to_json(const ShiftOp& op, const std::string& variable) {
    json terms = json::array();
    for (const auto& [k, c] : op.terms()) terms.push_back(term("shift", k, c));
    return {{"kind", "shift"}, {"variable", variable}, {"step", op.step().str()}, {"terms", terms}};
}

Poly poly_from_json(const json& j) {
    std::vector<GQ> c;
    for (const auto& s : j) c.push_back(GQ::parse(s.get<std::string>()));
    return Poly(c);
}

DiffOp diffop_from_json(const json& j) {
    if (j.at("kind") != "differential") throw MathError("not a differential operator");
    DiffOp r;
    for (const auto& t : j.at("terms")) r.set_coeff(t.at("deriv").get<int>(), term_coeff(t));
    return r;
}

ShiftOp shiftop_from_json(const json& j) {
    if (j.at("kind") != "shift") throw MathError("not a shift operator");
    std::map<int, RatFunc> m;
    for (const auto& t : j.at("terms")) m[t.at("shift").get<int>()] = term_coeff(t);
    return ShiftOp(GQ::parse(j.at("step").get<std::string>()), m);
}

std::string residual_string(double r, bool exact_zero) {
    if (exact_zero) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", r);
    return buf;
}

Check& Report::check(const std::string& name, bool pass, const std::string& residual, const std::string& detail) {
    checks.push_back({name, pass ? "pass" : "fail", residual, detail});
    return checks.back();
}

Check& Report::skip(const std::string& name, const std::string& detail) {
    checks.push_back({name, "skipped", "0", detail});
    return checks.back();
}

bool Report::failed() const {
    for (const auto& c : checks)
        if (c.status == "fail") return true;
    return false;
}

json Report::to_json(bool with_timing) const {
    json j;
    j["schema_version"] = schema_version;
    j["system"] = system;
    j["command"] = command;
    json p = json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    json cs = json::array();
    for (const auto& c : checks)
        cs.push_back({{"name", c.name}, {"status", c.status}, {"residual_norm", c.residual_norm}, {"detail", c.detail}});
    j["checks"] = cs;
    if (seed) j["seed"] = *seed;
    for (const auto& [k, v] : extra.items()) j[k] = v;
    if (with_timing) j["timing"] = {{"elapsed_ms", elapsed_ms}};
    return j;
}

std::string Report::to_csv() const {
    std::ostringstream o;
    o << "name,status,residual_norm,detail\n";
    for (const auto& c : checks)
        o << csv_field(c.name) << ',' << c.status << ',' << c.residual_norm << ',' << csv_field(c.detail) << '\n';
    return o.str();
}

}  // namespace qalg
