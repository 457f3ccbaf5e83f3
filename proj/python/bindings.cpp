#include "sspvip/serialize.hpp"
#include "sspvip/solver.hpp"
#include "sspvip/verify.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pybind11::literals;
using namespace sspvip;

PYBIND11_MODULE(_core, m) {
    m.doc() = "solver for systems of split variational inequality problems in l^p spaces";
    m.attr("__version__") = "0.1.0";

    py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);

    py::class_<LpSpace>(m, "LpSpace", "finite-dimensional real l^p space, p >= 2")
        .def(py::init<Index, double>(), "dim"_a, "p"_a)
        .def_property_readonly("dim", &LpSpace::dim)
        .def_property_readonly("p", &LpSpace::p)
        .def_property_readonly("q", &LpSpace::q)
        .def_property_readonly("smoothness_constant", &LpSpace::smoothness_constant)
        .def("norm", &LpSpace::norm, "x"_a)
        .def("sip", &LpSpace::sip, "x"_a, "y"_a, "Giles semi-inner product [x, y]")
        .def("duality_map", &LpSpace::duality_map, "y"_a)
        .def("inverse_duality_map", &LpSpace::inverse_duality_map, "u"_a);

    py::class_<ConvexSet>(m, "ConvexSet")
        .def_static("whole_space", &ConvexSet::whole_space)
        .def_static("nonnegative_orthant", &ConvexSet::nonnegative_orthant)
        .def_static("box", &ConvexSet::box, "lower"_a, "upper"_a)
        .def_static("coordinate_subspace", &ConvexSet::coordinate_subspace, "mask"_a)
        .def_static("euclidean_ball", &ConvexSet::euclidean_ball, "host"_a, "center"_a, "radius"_a)
        .def("retract", &ConvexSet::retract, "space"_a, "x"_a,
             "sunny nonexpansive retraction Q_C")
        .def("contains", &ConvexSet::contains, "space"_a, "x"_a, "tol"_a = 0.0)
        .def("describe", &ConvexSet::describe);

    py::class_<MonotoneMap>(m, "MonotoneMap")
        .def_static("affine_scalar", &MonotoneMap::affine_scalar, "gain"_a, "shift"_a)
        .def_static("diagonal_affine", &MonotoneMap::diagonal_affine, "diag"_a, "shift"_a)
        .def_static("componentwise", &MonotoneMap::componentwise, "alpha"_a, "beta"_a, "shift"_a)
        .def_property_readonly("alpha", &MonotoneMap::alpha)
        .def_property_readonly("beta", &MonotoneMap::beta)
        .def("evaluate", &MonotoneMap::evaluate, "x"_a)
        .def("vanishing_at", &MonotoneMap::vanishing_at, "root"_a)
        .def("describe", &MonotoneMap::describe);

    py::class_<BoundedLinearOp>(m, "BoundedLinearOp")
        .def(py::init<Mat, LpSpace, LpSpace>(), "matrix"_a, "domain"_a, "codomain"_a)
        .def_property_readonly("matrix", &BoundedLinearOp::matrix)
        .def_property_readonly("norm_upper", &BoundedLinearOp::norm_upper)
        .def_property_readonly("norm_lower", &BoundedLinearOp::norm_lower)
        .def("apply", &BoundedLinearOp::apply, "x"_a)
        .def("generalized_adjoint_apply", &BoundedLinearOp::generalized_adjoint_apply, "y"_a)
        .def(
            "p_norm_lower_estimate",
            [](const BoundedLinearOp& op, int samples, std::uint64_t seed) {
                Rng rng(seed);
                return op.p_norm_lower_estimate(samples, rng);
            },
            "samples"_a, "seed"_a = 1);

    py::class_<Moduli>(m, "Moduli")
        .def(py::init<>())
        .def_readwrite("alpha1", &Moduli::alpha1)
        .def_readwrite("beta1", &Moduli::beta1)
        .def_readwrite("alpha2", &Moduli::alpha2)
        .def_readwrite("beta2", &Moduli::beta2)
        .def_readwrite("sigma1", &Moduli::sigma1)
        .def_readwrite("eta1", &Moduli::eta1)
        .def_readwrite("sigma2", &Moduli::sigma2)
        .def_readwrite("eta2", &Moduli::eta2);

    py::class_<SspvipInstance>(m, "SspvipInstance")
        .def_readonly("space1", &SspvipInstance::space1)
        .def_readonly("space2", &SspvipInstance::space2)
        .def_readonly("set1", &SspvipInstance::set1)
        .def_readonly("set2", &SspvipInstance::set2)
        .def_readonly("F", &SspvipInstance::F)
        .def_readonly("G", &SspvipInstance::G)
        .def_readonly("f", &SspvipInstance::f)
        .def_readonly("g", &SspvipInstance::g)
        .def_readonly("A", &SspvipInstance::A)
        .def_readonly("known_solution", &SspvipInstance::known_solution)
        .def_readonly("seed", &SspvipInstance::seed);

    py::class_<GeneratorParams>(m, "GeneratorParams")
        .def(py::init<>())
        .def_readwrite("seed", &GeneratorParams::seed)
        .def_readwrite("dim1", &GeneratorParams::dim1)
        .def_readwrite("dim2", &GeneratorParams::dim2)
        .def_readwrite("p1", &GeneratorParams::p1)
        .def_readwrite("p2", &GeneratorParams::p2)
        .def_readwrite("moduli", &GeneratorParams::moduli)
        .def_readwrite("set1", &GeneratorParams::set1)
        .def_readwrite("set2", &GeneratorParams::set2);

    py::enum_<SetKind>(m, "SetKind")
        .value("WholeSpace", SetKind::WholeSpace)
        .value("Box", SetKind::Box)
        .value("NonnegativeOrthant", SetKind::NonnegativeOrthant)
        .value("CoordinateSubspace", SetKind::CoordinateSubspace)
        .value("EuclideanBall", SetKind::EuclideanBall);

    m.def("generate_instance", &generate_instance, "params"_a);
    m.def("residuals", &residuals, "instance"_a, "x1"_a, "y1"_a, "lambda_"_a, "gamma"_a);
    m.def("known_solution_residual", &known_solution_residual, "instance"_a, "lambda_"_a,
          "gamma"_a);
    m.def(
        "estimate_moduli",
        [](const MonotoneMap& map, const LpSpace& space, int trials, std::uint64_t seed) {
            Rng rng(seed);
            return estimate_moduli(map, space, trials, rng);
        },
        "map"_a, "space"_a, "trials"_a, "seed"_a = 1);

    py::class_<AlphaSequence>(m, "AlphaSequence")
        .def_static("constant", &AlphaSequence::constant, "value"_a)
        .def_static("harmonic", &AlphaSequence::harmonic, "scale"_a = 1.0)
        .def("__call__", &AlphaSequence::operator(), "n"_a)
        .def("describe", &AlphaSequence::describe);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("lambda_", &SolverConfig::lambda)
        .def_readwrite("gamma", &SolverConfig::gamma)
        .def_readwrite("rho", &SolverConfig::rho)
        .def_readwrite("alpha", &SolverConfig::alpha)
        .def_readwrite("max_iters", &SolverConfig::max_iters)
        .def_readwrite("tol_residual", &SolverConfig::tol_residual)
        .def_readwrite("tol_step", &SolverConfig::tol_step);

    py::class_<ContractionCertificate>(m, "ContractionCertificate")
        .def_readonly("lambda_", &ContractionCertificate::lambda)
        .def_readonly("gamma", &ContractionCertificate::gamma)
        .def_readonly("rho", &ContractionCertificate::rho)
        .def_readonly("c1", &ContractionCertificate::c1)
        .def_readonly("c2", &ContractionCertificate::c2)
        .def_readonly("op_norm_upper", &ContractionCertificate::op_norm_upper)
        .def_readonly("theta1", &ContractionCertificate::theta1)
        .def_readonly("theta2", &ContractionCertificate::theta2)
        .def_readonly("theta3", &ContractionCertificate::theta3)
        .def_readonly("theta4", &ContractionCertificate::theta4)
        .def_readonly("m", &ContractionCertificate::m)
        .def_readonly("p1", &ContractionCertificate::p1)
        .def_readonly("p2", &ContractionCertificate::p2)
        .def_readonly("k1", &ContractionCertificate::k1)
        .def_readonly("k2", &ContractionCertificate::k2)
        .def_readonly("theta", &ContractionCertificate::theta)
        .def_readonly("window_lower", &ContractionCertificate::window_lower)
        .def_readonly("window_upper", &ContractionCertificate::window_upper)
        .def_readonly("feasible", &ContractionCertificate::feasible)
        .def_readonly("diagnostics", &ContractionCertificate::diagnostics);

    m.def("certificate", &certificate, "instance"_a, "config"_a);
    m.def("suggest_config", &suggest_config, "instance"_a);

    py::enum_<SolveStatus>(m, "SolveStatus")
        .value("ConvergedResidual", SolveStatus::ConvergedResidual)
        .value("ConvergedStep", SolveStatus::ConvergedStep)
        .value("MaxIters", SolveStatus::MaxIters)
        .value("Diverged", SolveStatus::Diverged);

    py::class_<IterateRecord>(m, "IterateRecord")
        .def_readonly("n", &IterateRecord::n)
        .def_readonly("x1", &IterateRecord::x1)
        .def_readonly("y1", &IterateRecord::y1)
        .def_readonly("a1", &IterateRecord::a1)
        .def_readonly("a2", &IterateRecord::a2)
        .def_readonly("b1", &IterateRecord::b1)
        .def_readonly("b2", &IterateRecord::b2)
        .def_readonly("residuals", &IterateRecord::residuals)
        .def_readonly("err_star", &IterateRecord::err_star)
        .def_readonly("step", &IterateRecord::step)
        .def_readonly("theta_bound_rhs", &IterateRecord::theta_bound_rhs)
        .def("max_residual", &IterateRecord::max_residual);

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("trace", &SolveResult::trace)
        .def_readonly("status", &SolveResult::status)
        .def_readonly("iterations", &SolveResult::iterations)
        .def_readonly("cert", &SolveResult::cert)
        .def_readonly("warnings", &SolveResult::warnings);

    m.def("solve_sspvip", &solve_sspvip, "instance"_a, "config"_a, "x1_start"_a, "y1_start"_a);
    m.def("solve_spvip", &solve_spvip, "instance"_a, "config"_a, "x1_start"_a);

    py::class_<SuiteResult>(m, "SuiteResult")
        .def_readonly("name", &SuiteResult::name)
        .def_readonly("samples", &SuiteResult::samples)
        .def_readonly("max_violation", &SuiteResult::max_violation)
        .def_readonly("tolerance", &SuiteResult::tolerance)
        .def_readonly("pass_", &SuiteResult::pass);

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("suites", &VerifyReport::suites)
        .def("all_pass", &VerifyReport::all_pass);

    m.def("run_verification", &run_verification, "seed"_a, "trials"_a);

    m.def("load_instance", &load_instance, "path"_a);
    m.def("save_instance", &save_instance, "instance"_a, "path"_a);
    m.def(
        "instance_to_json", [](const SspvipInstance& inst) { return instance_to_json(inst).dump(2); },
        "instance"_a);
    m.def(
        "instance_from_json",
        [](const std::string& text) { return instance_from_json(Json::parse(text)); }, "text"_a);
}
