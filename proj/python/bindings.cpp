#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vaidya/errors.hpp"
#include "vaidya/report.hpp"

namespace py = pybind11;
using namespace vaidya;

namespace {

Point4 to_point(const std::array<double, 4>& p)
{
    const Point4 pt{p[0], p[1], p[2], p[3]};
    require_in_domain(pt);
    return pt;
}

std::string run_json(const std::string& command, const std::vector<std::string>& masses, std::optional<double> beta,
                     std::optional<double> p, std::optional<double> kappa, std::optional<std::string> grid,
                     std::optional<std::string> basis)
{
    RunConfig c;
    c.command = command;
    c.masses = masses;
    c.beta = beta;
    c.p = p;
    c.kappa = kappa;
    c.grid = std::move(grid);
    c.basis = std::move(basis);
    return to_json(run(c));
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Vaidya metric curvature and soliton residual checks";
    m.attr("__version__") = std::string(kVersion);

    static py::exception<Error> base(m, "VaidyaError");
    static py::exception<InvalidInput> invalid(m, "InvalidInput", base.ptr());
    py::register_exception_translator([](std::exception_ptr ep) {
        try {
            if (ep) std::rethrow_exception(ep);
        } catch (const InvalidInput& e) {
            invalid(e.what());
        } catch (const Error& e) {
            base(e.what());
        }
    });

    m.def("kappa", [](double beta, double p) { return SolitonParams::from_beta_p(beta, p).kappa; }, py::arg("beta"),
          py::arg("p"));
    m.def("classify", [](double beta) { return to_string(classify(beta)); }, py::arg("beta"));
    m.def(
        "ricci",
        [](const std::string& mass, const std::array<double, 4>& point) {
            const Eigen::Matrix4d r = curvature(vaidya_metric(MassFunction::parse(mass)), to_point(point)).ricci;
            std::array<std::array<double, 4>, 4> out{};
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) out[i][j] = r(i, j);
            return out;
        },
        py::arg("mass"), py::arg("point"));
    m.def(
        "scalar_curvature",
        [](const std::string& mass, const std::array<double, 4>& point) {
            return curvature(vaidya_metric(MassFunction::parse(mass)), to_point(point)).scalar;
        },
        py::arg("mass"), py::arg("point"));
    m.def(
        "solved_residual",
        [](double kappa, double Psi, double psi3, const std::string& mass, const std::array<double, 4>& point) {
            return soliton_residual(vaidya_metric(MassFunction::parse(mass)), solved_vector_field({kappa, Psi, psi3}),
                                    SolitonParams::from_kappa(kappa), to_point(point))
                .max_abs();
        },
        py::arg("kappa"), py::arg("Psi") = 0.0, py::arg("psi3") = 0.0, py::arg("mass") = "zero",
        py::arg("point") = std::array<double, 4>{1.0, 2.0, 1.0, 0.0});
    m.def("run", &run_json, py::arg("command"), py::arg("masses") = std::vector<std::string>{},
          py::arg("beta") = py::none(), py::arg("p") = py::none(), py::arg("kappa") = py::none(),
          py::arg("grid") = py::none(), py::arg("basis") = py::none(),
          "Runs a report command and returns the JSON document.");
}
