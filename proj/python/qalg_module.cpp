#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "commands.hpp"
#include "qalg/pdm.hpp"
#include "qalg/s3models.hpp"
#include "qalg/s3rep.hpp"
#include "qalg/s9.hpp"

namespace py = pybind11;
using namespace qalg;

namespace {

GQ lit(const std::string& s) { return GQ::parse(s); }

py::tuple run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
        py::gil_scoped_release nogil;
        code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_qalg, m) {
    m.doc() = "Exact verification of quadratic algebra models";
    py::register_exception<MathError>(m, "MathError", PyExc_ValueError);

    m.def("run", &run, py::arg("args"), "Run a command-line subcommand; returns (exit_code, stdout, stderr).");

    m.def("normalize", [](const std::string& s) { return lit(s).str(); }, py::arg("literal"),
          "Canonical form of a Gaussian rational literal.");

    m.def("l1_eigenvalue", [](const std::string& a, long n) { return l1_eigenvalue(lit(a), n).str(); },
          py::arg("a"), py::arg("n"));

    m.def(
        "rep_structure_ok",
        [](int m, const std::string& a) {
            S3Params p = S3Params::finite(m, lit(a));
            for (const auto& c : verify_matrix_structure(build_rep(p, m + 1), p))
                if (!c.pass) return false;
            return true;
        },
        py::arg("m"), py::arg("a"), "Exact S3 relations on the finite representation of dimension m+1.");

    m.def(
        "dual_hahn_orthogonality",
        [](int m, const std::string& a, int n, int np) {
            auto [s, c] = dual_hahn_orthogonality(m, lit(a), n, np);
            return py::make_tuple(s.str(), c.str());
        },
        py::arg("m"), py::arg("a"), py::arg("n"), py::arg("np"), "(weighted sum, closed form) as exact strings.");

    m.def(
        "s9_verify",
        [](const std::string& al, const std::string& be, const std::string& ga, const std::string& E) {
            return s9_verify(S9Params::make(lit(al), lit(be), lit(ga), lit(E))).pass;
        },
        py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("E"));

    m.def(
        "eigen_correspondence",
        [](const std::string& q, const std::string& k, int N) {
            EigenCorrespondence e = eigen_correspondence(PdmParams::make(lit(q), lit(k), N));
            py::dict d;
            d["lambda_S"] = e.lambda_S.str();
            d["lambda_Q"] = e.lambda_Q.str();
            d["pass"] = e.pass;
            return d;
        },
        py::arg("q"), py::arg("k"), py::arg("N"));

    m.def(
        "sphere_coords",
        [](double x, double y, double q) {
            auto s = sphere_coords(x, y, q);
            return py::make_tuple(s[0], s[1], s[2]);
        },
        py::arg("x"), py::arg("y"), py::arg("q"));
}
