#pragma once
// Report JSON shared by the command-line tool and the Python module, and the
// JSON form of operators.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qalg/ops.hpp"

namespace qalg {

using json = nlohmann::ordered_json;

json to_json(const Poly& p);  // coefficient strings in degree order
json to_json(const DiffOp& op, const std::string& variable = "t");
json to_json(const ShiftOp& op, const std::string& variable = "t");
Poly poly_from_json(const json& j);
DiffOp diffop_from_json(const json& j);
ShiftOp shiftop_from_json(const json& j);

// "0" for an exact zero, otherwise a short decimal
std::string residual_string(double r, bool exact_zero);

struct Check {
    std::string name;
    std::string status;  // pass | fail | skipped
    std::string residual_norm = "0";
    std::string detail;
};

struct Report {
    static constexpr int schema_version = 1;
    std::string system, command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Check> checks;
    std::optional<std::uint64_t> seed;
    json extra = json::object();  // command specific fields, appended after checks
    double elapsed_ms = 0;

    void param(const std::string& k, const std::string& v) { params.emplace_back(k, v); }
    void param(const std::string& k, const GQ& v) { params.emplace_back(k, v.str()); }
    void param(const std::string& k, long v) { params.emplace_back(k, std::to_string(v)); }
    Check& check(const std::string& name, bool pass, const std::string& residual = "0", const std::string& detail = "");
    Check& skip(const std::string& name, const std::string& detail);
    bool failed() const;
    json to_json(bool with_timing = true) const;
    // name,status,residual_norm,detail
    std::string to_csv() const;
};

}  // namespace qalg
