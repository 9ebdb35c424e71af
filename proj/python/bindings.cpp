#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <sstream>

#include "oriftl/calibrated.hpp"
#include "oriftl/cli.hpp"
#include "oriftl/llt.hpp"
#include "oriftl/paths.hpp"

namespace py = pybind11;
using namespace oriftl;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }
nlohmann::json from_py(const py::object& o) {
    return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

GradedMatrix maybe_block(const GradedMatrix& m, const GradedMatrix& delta, const std::optional<std::string>& b) {
    if (!b) return m;
    return m.restrict_to(block_of(delta, parse_shape(*b)));
}

std::vector<std::string> names(const std::vector<Shape>& ss) {
    std::vector<std::string> out;
    for (const auto& s : ss) out.push_back(shape_str(s));
    return out;
}

}  // namespace

PYBIND11_MODULE(_oriftl, m) {
    m.doc() = "orientifold Temperley-Lieb combinatorics";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<ParamConfig>(m, "Config")
        .def_static("from_file", &ParamConfig::from_file, py::arg("path"))
        .def_static("from_dict", [](const py::object& o) { return ParamConfig::from_json(from_py(o)); })
        .def("to_dict", [](const ParamConfig& c) { return to_py(c.to_json()); })
        .def("validate", [](const ParamConfig& c, bool allow) { return validate_config(c, allow); },
             py::arg("allow_self_inverse") = false)
        .def_property_readonly("e", [](const ParamConfig& c) -> py::object {
            if (!c.finite()) return py::none();
            return py::int_(c.e());
        });

    m.def("shapes", [](int n) { return names(shapes(n)); }, py::arg("n"));
    m.def("count_std", [](int n, const std::string& s) { return count_std(n, parse_shape(s)); }, py::arg("n"),
          py::arg("shape"));
    m.def(
        "tableaux",
        [](int n, const std::string& s) {
            std::vector<std::string> out;
            for (const auto& t : enumerate_std(n, parse_shape(s))) out.push_back(tableau_str(t));
            return out;
        },
        py::arg("n"), py::arg("shape"));
    m.def(
        "residues",
        [](const std::string& t, const ParamConfig& c) {
            std::vector<std::string> out;
            for (const auto& r : residue_seq(parse_tableau(t), c)) out.push_back(c.residue_str(r));
            return out;
        },
        py::arg("tableau"), py::arg("config"));
    m.def(
        "degree",
        [](const std::string& t, const ParamConfig& c) {
            const auto tab = parse_tableau(t);
            return std::make_pair(degree_tiles(tab, c), degree_klr(tab, c));
        },
        py::arg("tableau"), py::arg("config"), "(degree from tiles, degree from the generator word)");
    m.def("reduced_word", [](const std::string& t, const ParamConfig& c) { return reduced_word(parse_tableau(t), c); },
          py::arg("tableau"), py::arg("config"));
    m.def("is_ladder", [](const std::string& t, const ParamConfig& c) { return is_ladder(parse_tableau(t), c); },
          py::arg("tableau"), py::arg("config"));

    m.def(
        "delta_matrix",
        [](int n, const ParamConfig& c, std::optional<std::string> block_of, int jobs) {
            GradedMatrix d;
            {
                py::gil_scoped_release release;
                d = delta_matrix(n, c, std::nullopt, jobs);
            }
            return to_py(maybe_block(d, d, block_of).to_json());
        },
        py::arg("n"), py::arg("config"), py::arg("block_of") = py::none(), py::arg("jobs") = 0);
    m.def(
        "decomposition_matrix",
        [](int n, const ParamConfig& c, std::optional<std::string> block_of, int jobs) {
            GradedMatrix d, N;
            {
                py::gil_scoped_release release;
                d = delta_matrix(n, c, std::nullopt, jobs);
                N = na_factorize_blocks(d, jobs).first;
            }
            N.conjectural = true;
            return to_py(maybe_block(N, d, block_of).to_json());
        },
        py::arg("n"), py::arg("config"), py::arg("block_of") = py::none(), py::arg("jobs") = 0,
        "conjectural graded decomposition matrix");
    m.def(
        "blocks",
        [](int n, const ParamConfig& c) {
            std::vector<std::vector<std::string>> out;
            for (const auto& b : blocks(n, c)) out.push_back(names(b));
            return out;
        },
        py::arg("n"), py::arg("config"));
    m.def(
        "factorize",
        [](const py::object& delta) {
            const auto [N, A] = na_factorize(GradedMatrix::from_json(from_py(delta)));
            return std::make_pair(to_py(N.to_json()), to_py(A.to_json()));
        },
        py::arg("delta"), "split a lower unitriangular matrix as N A");
    m.def(
        "calibrated_check",
        [](int n, const std::string& shape, const ParamConfig& c, unsigned long seed, double tol, bool blob) {
            std::mt19937_64 rng(seed);
            const auto s = make_seed(c, rng);
            const auto mod = build_calibrated(parse_shape(shape), n, c, s);
            auto rep = check_hecke_relations(mod, tol);
            rep.merge(check_tl_relations(mod, tol));
            if (blob) rep.merge(blob_check(mod, s, tol));
            auto j = rep.to_json();
            j["jm_spectrum"] = jm_spectrum_residual(mod, c, s);
            j["dim"] = mod.dim();
            return to_py(j);
        },
        py::arg("n"), py::arg("shape"), py::arg("config"), py::arg("seed") = 0, py::arg("tol") = 1e-8,
        py::arg("blob") = false);
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "run the command line tool in process; returns (exit code, stdout, stderr)");
}
