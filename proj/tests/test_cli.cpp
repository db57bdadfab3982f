#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "qalg/report.hpp"

using qalg::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream o, e;
    int c = qalg::cli::run(args, o, e);
    return {c, o.str(), e.str()};
}

json report(const std::vector<std::string>& args, int want = 0) {
    Run r = run(args);
    REQUIRE_MESSAGE(r.code == want, r.err);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("verify s3-diff passes") {
    json j = report({"verify", "s3-diff", "--m", "4", "--a", "2/7"});
    CHECK(j["schema_version"] == 1);
    CHECK(j["system"] == "S3");
    CHECK(j["command"] == "verify");
    CHECK(j["params"]["a"] == "2/7");
    for (const auto& c : j["checks"]) {
        CHECK(c["status"] == "pass");
        CHECK(c["residual_norm"] == "0");
    }
    CHECK(j["operators"]["L1"]["kind"] == "differential");
    CHECK(j.contains("timing"));
    CHECK_FALSE(j.contains("seed"));
}

TEST_CASE("dual Hahn orthogonality residual") {
    json j = report({"orthogonality", "dual-hahn", "--m", "2", "--a", "1/3", "--n", "0", "--np", "1"});
    REQUIRE(j["checks"].size() == 1);
    CHECK(j["checks"][0]["residual_norm"] == "0");
    json d = report({"orthogonality", "dual-hahn", "--m", "2", "--a", "1/3", "--n", "1", "--np", "1"});
    CHECK(d["values"][0]["sum"] == d["values"][0]["closed_form"]);
    json c = report({"orthogonality", "continuous-dual-hahn", "--mu", "3/2", "--a", "1/4", "--n", "1", "--np", "1"});
    CHECK(c["checks"][0]["status"] == "pass");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"verify", "s3-diff", "--m", "4", "--a", "bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "nope", "--m", "1", "--a", "1/3"}).code == 2);
    CHECK(run({"verify", "s3-diff", "--a", "1/3"}).code == 2);
    CHECK(run({"verify", "s3-diff", "--m", "x", "--a", "1/3"}).code == 2);
    CHECK(run({"spectrum", "--m", "2", "--a", "1/3", "--format", "xml"}).code == 2);
    CHECK(run({"orthogonality", "racah", "--m", "2", "--a", "1/3"}).code == 2);
    CHECK(run({"orthogonality", "dual-hahn", "--m", "2", "--a", "1/3", "--n", "3", "--np", "0"}).code == 2);
    CHECK(run({"classical", "--system", "S3-I"}).code == 2);
    CHECK(run({"classical", "--system", "S7", "--E", "1", "--alpha", "1"}).code == 2);
    CHECK(run({"quantize", "--model", "S3-II", "--prescription", "direct", "--mu", "1", "--a", "1/4"}).code == 2);
    CHECK(run({"quantize", "--model", "S3-II", "--E", "1", "--alpha", "1/3"}).code == 2);
    CHECK(run({"pdm", "--k", "-1", "--N", "1"}).code == 2);
    CHECK(run({"pdm", "--k", "3/2"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("every subcommand exits 0 on passing input") {
    report({"verify", "s3-rep", "--m", "3", "--a", "-2/5"});
    report({"verify", "s3-rep", "--mu", "2", "--a", "1/2", "--n", "6"});
    report({"verify", "s3-finite", "--m", "3", "--a", "1/3"});
    report({"verify", "s3-infinite", "--mu", "3/2", "--a", "1/4"});
    report({"verify", "s3-weight", "--mu", "3/2", "--a", "1/4"});
    report({"verify", "s3-trig", "--m", "2", "--a", "1/3"});
    report({"verify", "s9", "--alpha", "1/2", "--beta", "1/3", "--gamma", "1/5", "--E", "7/4"});
    json s = report({"spectrum", "--m", "3", "--a", "2/7"});
    CHECK(s["eigenvalues"].size() == 4);
    json c = report({"classical", "--system", "S3-II", "--E", "-5/3", "--alpha", "3/7", "--samples", "120"});
    CHECK(c["seed"] == 1);
    CHECK(c["points_used"] == 120);
    CHECK(c["max_residual_by_relation"].size() == 4);
    report({"classical", "--model", "S9", "--alpha", "3/16", "--beta", "3/16", "--gamma", "7/16", "--E", "2"});
    json q = report({"quantize", "--model", "S3-III", "--E", "-5/3", "--alpha", "3/7"});
    CHECK(q["operators"]["K"]["terms"].back()["deriv"] == 4);
    report({"quantize", "--model", "S3-I-exp", "--mu", "3/2", "--a", "1/4"});
    json sh = report({"quantize", "--model", "S3-II", "--mu", "3/2", "--a", "1/4"});
    CHECK(sh["operators"]["X"]["step"] == "i");
    json p = report({"pdm", "--q", "1", "--k", "3/2", "--N", "1"});
    CHECK(p["lambda_S"] == "-63/4");
    CHECK(p["lambda_Q"] == "15");
    CHECK(p["system"] == "PDM");
    report({"all"});
}

TEST_CASE("failed checks exit 1") {
    // the alternate lowering coefficient has the wrong sign
    json j = report({"quantize", "--model", "S3-II", "--mu", "3/2", "--a", "1/4", "--gauge", "alternate"}, 1);
    CHECK(j["checks"].back()["status"] == "fail");
    // relations are scale dependent, a tiny tolerance fails
    report({"classical", "--system", "S3-I", "--E", "-5/3", "--alpha", "3/7", "--tol", "1e-30"}, 1);
}

TEST_CASE("reports are reproducible apart from timing") {
    for (std::vector<std::string> args :
         {std::vector<std::string>{"classical", "--system", "S3-III", "--E", "-5/3", "--alpha", "3/7", "--seed", "9"},
          std::vector<std::string>{"verify", "s3-infinite", "--mu", "3/2", "--a", "1/4"}}) {
        json a = report(args), b = report(args);
        a.erase("timing");
        b.erase("timing");
        CHECK(a.dump() == b.dump());
    }
    json x = report({"classical", "--system", "S3-III", "--E", "-5/3", "--alpha", "3/7", "--seed", "9"});
    json y = report({"classical", "--system", "S3-III", "--E", "-5/3", "--alpha", "3/7", "--seed", "10"});
    CHECK(x["seed"] == 9);
    CHECK(x["max_residual_by_relation"] != y["max_residual_by_relation"]);
}

TEST_CASE("csv and file output") {
    Run s = run({"spectrum", "--m", "2", "--a", "1/3", "--format", "csv"});
    CHECK(s.code == 0);
    CHECK(s.out.rfind("n,chi\n0,", 0) == 0);
    Run t = run({"orthogonality", "dual-hahn", "--m", "2", "--a", "1/3", "--format", "csv"});
    CHECK(t.out.rfind("t,n,re,im\n", 0) == 0);
    Run v = run({"pdm", "--k", "1/2", "--N", "2", "--format", "csv"});
    CHECK(v.out.rfind("name,status,residual_norm,detail\n", 0) == 0);
    const std::string path = "cli_test_out.json";
    Run f = run({"pdm", "--k", "1/2", "--N", "2", "--out", path});
    CHECK(f.code == 0);
    CHECK(f.out.empty());
    std::ifstream in(path);
    json j = json::parse(in);
    CHECK(j["params"]["N"] == "2");
    std::remove(path.c_str());
}
