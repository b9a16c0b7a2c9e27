#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swkb/oracle.hpp"
#include "swkb/report.hpp"
#include "swkb/shape_invariance.hpp"
#include "swkb/spectrum.hpp"
#include "swkb/superpotential.hpp"
#include "swkb/swkb_engine.hpp"

#include <nlohmann/json.hpp>

namespace py = pybind11;
using namespace swkb;

namespace {

Sign sign_from(const std::string& s) {
    if (s == "minus") return Sign::minus;
    if (s == "plus") return Sign::plus;
    throw UnknownParameter("sign must be 'minus' or 'plus'");
}

QuadratureConfig quad_config(const std::string& method, int base_nodes, int max_refinements,
                             double rel_tol, double root_tol) {
    QuadratureConfig c;
    if (method == "tanh_sinh")
        c.method = QuadMethod::tanh_sinh;
    else if (method == "sine_substitution_gauss" || method == "gauss")
        c.method = QuadMethod::sine_substitution_gauss;
    else
        throw UnknownParameter("method must be 'sine_substitution_gauss' or 'tanh_sinh'");
    c.base_nodes = base_nodes;
    c.max_refinements = max_refinements;
    c.rel_tol = rel_tol;
    c.root_tol = root_tol;
    return c;
}

py::dict swkb_result_dict(const SwkbResult& r) {
    py::dict d;
    d["n"] = r.n;
    d["E_n"] = r.energy;
    d["x1"] = r.turning.x1;
    d["x2"] = r.turning.x2;
    d["integral"] = r.integral;
    d["residual"] = r.residual;
    d["converged"] = r.converged;
    d["refinements_used"] = r.refinements_used;
    d["est_error"] = r.est_error;
    return d;
}

py::dict residual_dict(const ResidualReport& r) {
    py::dict d;
    d["max_abs_residual"] = r.max_abs_residual;
    d["rms_residual"] = r.rms_residual;
    d["sample_count"] = r.sample_count;
    d["worst_point"] = py::make_tuple(r.worst_x, r.worst_a);
    return d;
}

py::dict oracle_dict(const OracleReport& r) {
    py::dict d;
    d["eigenvalues"] = r.eigenvalues;
    d["algebraic"] = r.algebraic;
    d["max_rel_deviation"] = r.max_rel_deviation;
    d["grid_points_used"] = r.grid_points_used;
    d["box"] = py::make_tuple(r.box_lo, r.box_hi);
    d["edge_amplitude"] = r.edge_amplitude;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "SWKB quantization laboratory: superpotential catalog, shape-invariance checks, "
              "algebraic spectra, singular-endpoint SWKB quadrature and a Schrodinger oracle";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UnknownParameter>(m, "UnknownParameter", PyExc_KeyError);
    py::register_exception<ValidityError>(m, "ValidityError", PyExc_ValueError);
    py::register_exception<NoZeroCrossing>(m, "NoZeroCrossing", PyExc_ArithmeticError);
    py::register_exception<BracketError>(m, "BracketError", PyExc_ArithmeticError);
    py::register_exception<NotConverged>(m, "NotConverged", PyExc_ArithmeticError);
    py::register_exception<BoxTooSmall>(m, "BoxTooSmall", PyExc_ArithmeticError);

    py::class_<SuperpotentialSpec>(m, "Superpotential")
        .def_readonly("name", &SuperpotentialSpec::name)
        .def_property_readonly("si_class",
                               [](const SuperpotentialSpec& s) { return to_string(s.si_class); })
        .def_readonly("a", &SuperpotentialSpec::a)
        .def_readonly("hbar", &SuperpotentialSpec::hbar)
        .def_readonly("constants", &SuperpotentialSpec::constants)
        .def_readonly("perturbation_amplitude", &SuperpotentialSpec::perturbation_amplitude)
        .def_property_readonly("domain",
                               [](const SuperpotentialSpec& s) {
                                   return py::make_tuple(s.domain.left, s.domain.right);
                               })
        .def("W",
             [](const SuperpotentialSpec& s, double x, std::optional<double> a) {
                 return a ? eval_W(s, x, *a) : eval_W(s, x);
             },
             py::arg("x"), py::arg("a") = py::none())
        .def("W_prime",
             [](const SuperpotentialSpec& s, double x, std::optional<double> a) {
                 return a ? eval_W_prime(s, x, *a) : eval_W_prime(s, x);
             },
             py::arg("x"), py::arg("a") = py::none())
        .def("V",
             [](const SuperpotentialSpec& s, double x, const std::string& sign,
                std::optional<double> a) {
                 return a ? eval_V(s, x, sign_from(sign), *a) : eval_V(s, x, sign_from(sign));
             },
             py::arg("x"), py::arg("sign") = "minus", py::arg("a") = py::none())
        .def("ground_state_log_density",
             [](const SuperpotentialSpec& s, double x) { return ground_state_log_density(s, x); },
             py::arg("x"))
        .def("zero", [](const SuperpotentialSpec& s) { return superpotential_zero(s); })
        .def("with_hbar", &SuperpotentialSpec::with_hbar, py::arg("hbar"))
        .def("mirrored", [](const SuperpotentialSpec& s) { return mirrored(s); })
        .def("__repr__", [](const SuperpotentialSpec& s) {
            return "<Superpotential " + s.name + " [" + to_string(s.si_class) + "]>";
        });

    m.def("catalog_names", &catalog_names);
    m.def("catalog_entry", &catalog_entry, py::arg("name"), py::arg("overrides") = ConstantMap{});
    m.def("catalog_document", [] {
        const auto doc = catalog_document().dump();
        return py::module_::import("json").attr("loads")(doc);
    });

    m.def("classify",
          [](const SuperpotentialSpec& s, int samples) {
              const auto [tag, constants] = classify(s, samples);
              return py::make_tuple(to_string(tag), constants);
          },
          py::arg("spec"), py::arg("samples") = 64);

    m.def("standard_grid",
          [](const SuperpotentialSpec& s, int nx, int na) { return standard_grid(s, nx, na); },
          py::arg("spec"), py::arg("nx") = 20, py::arg("na") = 10);

    const auto grid_or_default = [](const SuperpotentialSpec& s,
                                    const std::optional<std::vector<GridPoint>>& grid) {
        return grid ? *grid : standard_grid(s);
    };
    m.def("residual_sic",
          [grid_or_default](const SuperpotentialSpec& s,
                            std::optional<std::vector<GridPoint>> grid) {
              return residual_dict(residual_sic(s, grid_or_default(s, grid)));
          },
          py::arg("spec"), py::arg("grid") = py::none());
    m.def("residual_pde1",
          [grid_or_default](const SuperpotentialSpec& s,
                            std::optional<std::vector<GridPoint>> grid) {
              return residual_dict(residual_pde1(s, grid_or_default(s, grid)));
          },
          py::arg("spec"), py::arg("grid") = py::none());
    m.def("residual_pde2",
          [grid_or_default](const SuperpotentialSpec& s,
                            std::optional<std::vector<GridPoint>> grid) {
              return residual_dict(residual_pde2(s, grid_or_default(s, grid)));
          },
          py::arg("spec"), py::arg("grid") = py::none());

    m.def("n_max",
          [](const SuperpotentialSpec& s) { return make_spectrum_model(s).n_max; });
    m.def("energy",
          [](const SuperpotentialSpec& s, int n) { return energy(make_spectrum_model(s), n); },
          py::arg("spec"), py::arg("n"));
    m.def("dE_dhbar",
          [](const SuperpotentialSpec& s, int n) { return dE_dhbar(make_spectrum_model(s), n); },
          py::arg("spec"), py::arg("n"));
    m.def("g_of_a",
          [](const SuperpotentialSpec& s, double a_eff) {
              return g_of_a(make_spectrum_model(s), a_eff);
          },
          py::arg("spec"), py::arg("a_eff"));
    m.def("partner_check_pairs",
          [](const SuperpotentialSpec& s) { return partner_check_pairs(make_spectrum_model(s)); });

    m.def("find_turning_points",
          [](const SuperpotentialSpec& s, double E) {
              const TurningPoints tp = find_turning_points(s, E);
              return py::make_tuple(tp.x1, tp.x2);
          },
          py::arg("spec"), py::arg("E"));

    m.def("swkb_integral",
          [](const SuperpotentialSpec& s, int n, const std::string& method, int base_nodes,
             int max_refinements, double rel_tol, double root_tol) {
              return swkb_result_dict(swkb_integral(
                  s, n, quad_config(method, base_nodes, max_refinements, rel_tol, root_tol)));
          },
          py::arg("spec"), py::arg("n"), py::arg("method") = "sine_substitution_gauss",
          py::arg("base_nodes") = 64, py::arg("max_refinements") = 8, py::arg("rel_tol") = 1e-10,
          py::arg("root_tol") = 1e-12);

    m.def("dI_dhbar",
          [](const SuperpotentialSpec& s, int n, const std::string& mode,
             const std::string& method) {
              const DIMode di =
                  mode == "finite_difference" ? DIMode::finite_difference : DIMode::eq14;
              if (mode != "finite_difference" && mode != "eq14")
                  throw UnknownParameter("mode must be 'finite_difference' or 'eq14'");
              return dI_dhbar(s, n, quad_config(method, 64, 8, 1e-10, 1e-12), di);
          },
          py::arg("spec"), py::arg("n"), py::arg("mode") = "eq14",
          py::arg("method") = "sine_substitution_gauss");

    m.def("conventional_wkb_integral",
          [](const SuperpotentialSpec& s, int n) { return conventional_wkb_integral(s, n); },
          py::arg("spec"), py::arg("n"));

    m.def("solve_spectrum",
          [](const SuperpotentialSpec& s, const std::string& sign, int eigen_count,
             std::optional<std::pair<double, double>> box, int grid_points, double rel_tol,
             bool check_box) {
              OracleConfig c;
              c.eigen_count = eigen_count;
              c.convergence_rel_tol = rel_tol;
              c.check_box = check_box;
              if (grid_points > 0) c.grid_points = grid_points;
              if (box) {
                  c.box = DomainInterval::open(box->first, box->second);
                  c.use_default_box = false;
              }
              return oracle_dict(solve_spectrum(s, sign_from(sign), c));
          },
          py::arg("spec"), py::arg("sign") = "minus", py::arg("eigen_count") = 4,
          py::arg("box") = py::none(), py::arg("grid_points") = 0, py::arg("rel_tol") = 1e-6,
          py::arg("check_box") = true);

    m.def("isospectrality_check",
          [](const SuperpotentialSpec& s, int eigen_count) {
              OracleConfig c;
              c.eigen_count = eigen_count;
              return isospectrality_check(s, c);
          },
          py::arg("spec"), py::arg("eigen_count") = 4);

#ifdef SWKB_LAB_VERSION
    m.attr("__version__") = SWKB_LAB_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
