#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ecdetect/colon.hpp"
#include "ecdetect/commands.hpp"
#include "ecdetect/deflation.hpp"
#include "ecdetect/embedded.hpp"
#include "ecdetect/errors.hpp"
#include "ecdetect/interpolation.hpp"
#include "ecdetect/staircase.hpp"

namespace py = pybind11;
using namespace ecdetect;

namespace {

Point to_point(const std::vector<Complex>& coords) { return Point{coords, 0.0}; }

std::vector<std::string> monomial_names(const Ring& ring, const std::vector<Exponent>& es) {
  std::vector<std::string> out;
  for (const auto& e : es) out.push_back(format_monomial(e, *ring));
  return out;
}

// Generators must share one ring; an empty list has no ring to speak of.
void require_generators(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw PreconditionError("no generators");
}

}  // namespace

PYBIND11_MODULE(_ecdetect, m) {
  m.doc() = "Local dual spaces, staircases and embedded-component tests.";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<ProblemFileError>(m, "ProblemFileError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<NotOnVarietyError>(m, "NotOnVarietyError", error.ptr());
  auto inconclusive = py::register_exception<InconclusiveError>(m, "InconclusiveError", error.ptr());
  py::register_exception<IncompleteStaircaseError>(m, "IncompleteStaircaseError",
                                                   inconclusive.ptr());
  py::register_exception<SamplingError>(m, "SamplingError", error.ptr());

  py::class_<RingContext, std::shared_ptr<RingContext>>(m, "Ring")
      .def(py::init([](std::vector<std::string> names) {
             return std::const_pointer_cast<RingContext>(make_ring(std::move(names)));
           }),
           py::arg("variables"))
      .def_property_readonly("variables", &RingContext::names)
      .def_property_readonly("nvars", &RingContext::nvars)
      .def("homogenized", [](const std::shared_ptr<RingContext>& r) {
        return std::const_pointer_cast<RingContext>(homogenized_ring(r));
      })
      .def("__repr__", [](const RingContext& r) {
        std::string s = "Ring([";
        for (std::size_t i = 0; i < r.nvars(); ++i) s += (i ? ", '" : "'") + r.names()[i] + "'";
        return s + "])";
      });

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text, const std::shared_ptr<RingContext>& ring) {
             return parse_polynomial(text, ring);
           }),
           py::arg("text"), py::arg("ring"))
      .def_property_readonly("ring",
                             [](const Polynomial& p) {
                               return std::const_pointer_cast<RingContext>(p.ring());
                             })
      .def_property_readonly("degree", &Polynomial::degree)
      .def("is_zero", &Polynomial::is_zero)
      .def("coefficient", &Polynomial::coefficient)
      .def("terms",
           [](const Polynomial& p) {
             std::vector<std::pair<Exponent, Complex>> out(p.terms().begin(), p.terms().end());
             return out;
           })
      .def("initial_term", [](const Polynomial& p) { return initial_term(p); })
      .def("evaluate", [](const Polynomial& p, const std::vector<Complex>& x) { return p.evaluate(x); })
      .def("translate", [](const Polynomial& p, const std::vector<Complex>& s) { return p.translate(s); })
      .def("derivative", &Polynomial::derivative)
      .def("homogenize", [](const Polynomial& p) { return homogenize(p); })
      .def("dehomogenize", [](const Polynomial& p) { return dehomogenize(p); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__mul__", [](const Polynomial& p, Complex c) { return p * c; })
      .def("__rmul__", [](const Polynomial& p, Complex c) { return p * c; })
      .def("__neg__", [](const Polynomial& p) { return -p; })
      .def("__pow__", [](const Polynomial& p, unsigned k) { return p.pow(k); })
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; });

  m.def("compare_primal",
        [](const Exponent& a, const Exponent& b) {
          const auto c = compare_primal(a, b);
          return c > 0 ? 1 : (c < 0 ? -1 : 0);
        },
        "1 when a is the larger monomial in the local order, -1 when b is, 0 when equal.");

  py::class_<NumericalConfig>(m, "NumericalConfig")
      .def(py::init<>())
      .def_readwrite("delta", &NumericalConfig::delta)
      .def_readwrite("pivot_tol", &NumericalConfig::pivot_tol)
      .def_readwrite("residual_tol", &NumericalConfig::residual_tol)
      .def_readwrite("chop_tol", &NumericalConfig::chop_tol)
      .def_readwrite("seed", &NumericalConfig::seed)
      .def_readwrite("max_degree", &NumericalConfig::max_degree)
      .def_readwrite("max_d", &NumericalConfig::max_d)
      .def_readwrite("max_e", &NumericalConfig::max_e)
      .def_readwrite("max_samples", &NumericalConfig::max_samples)
      .def_readwrite("corner_confirm", &NumericalConfig::corner_confirm);

  py::class_<DualBasis>(m, "DualBasis")
      .def_property_readonly("dim", &DualBasis::dim)
      .def_readonly("order", &DualBasis::order)
      .def_readonly("ill_conditioned", &DualBasis::ill_conditioned)
      .def("initial_terms", &DualBasis::initial_terms)
      .def("functionals", [](const DualBasis& b) {
        std::vector<std::string> out;
        for (const auto& q : b.functionals) out.push_back(q.to_string());
        return out;
      });

  m.def("truncated_dual",
        [](const std::vector<Polynomial>& gens, const std::vector<Complex>& point, int k,
           const NumericalConfig& cfg, bool reduced) {
          auto b = truncated_dual(gens, to_point(point), k, cfg);
          return reduced ? reduce_basis(b, cfg) : b;
        },
        py::arg("generators"), py::arg("point"), py::arg("k"),
        py::arg("config") = NumericalConfig{}, py::arg("reduced") = true);

  m.def("hilbert_values",
        [](const std::vector<Polynomial>& gens, const std::vector<Complex>& point, int k,
           const NumericalConfig& cfg) { return hilbert_values(gens, to_point(point), k, cfg); },
        py::arg("generators"), py::arg("point"), py::arg("k"), py::arg("config") = NumericalConfig{});

  py::class_<Staircase>(m, "Staircase")
      .def_readonly("gcorners", &Staircase::gcorners)
      .def_readonly("degree_reached", &Staircase::degree_reached)
      .def("in_ideal", &Staircase::in_ideal)
      .def("dimension", &Staircase::dimension)
      .def("scorners", [](const Staircase& s, int bound) { return scorners(s, bound); },
           py::arg("bound") = 64);

  py::class_<HilbertData>(m, "HilbertData")
      .def_readonly("values", &HilbertData::values)
      .def_readonly("regularity", &HilbertData::regularity)
      .def_readonly("multiplicity", &HilbertData::multiplicity)
      .def_readonly("dimension", &HilbertData::dimension)
      .def("hilbert_polynomial", &HilbertData::hilbert_polynomial);

  m.def("gcorners",
        [](const std::vector<Polynomial>& gens, const std::vector<Complex>& point,
           const NumericalConfig& cfg) { return gcorners(gens, to_point(point), cfg); },
        py::arg("generators"), py::arg("point"), py::arg("config") = NumericalConfig{});
  m.def("monomial_staircase", &monomial_staircase, py::arg("nvars"), py::arg("monomials"));
  m.def("staircase_stats", py::overload_cast<const Staircase&>(&staircase_stats));
  m.def("monomial_names",
        [](const std::shared_ptr<RingContext>& r, const std::vector<Exponent>& es) {
          return monomial_names(r, es);
        });

  m.def("ideal_membership",
        [](const std::vector<Polynomial>& gens, const Polynomial& g,
           const std::optional<std::vector<Complex>>& point, const NumericalConfig& cfg) {
          if (point) return ideal_membership(gens, g, to_point(*point), cfg);
          return ideal_membership(gens, g, cfg);
        },
        py::arg("generators"), py::arg("g"), py::arg("point") = std::nullopt,
        py::arg("config") = NumericalConfig{});

  py::class_<DeflationSystem>(m, "DeflationSystem")
      .def_property_readonly("ring",
                             [](const DeflationSystem& s) {
                               return std::const_pointer_cast<RingContext>(s.ring);
                             })
      .def_readonly("order", &DeflationSystem::order)
      .def_readonly("a_exponents", &DeflationSystem::a_exponents)
      .def_readonly("generators", &DeflationSystem::generators);
  m.def("deflate", [](const std::vector<Polynomial>& gens, int d) { return deflate(gens, d); },
        py::arg("generators"), py::arg("d"));
  m.def("fiber_dual_dim",
        [](const std::vector<Polynomial>& gens, const std::vector<Complex>& point, int d,
           const NumericalConfig& cfg) { return fiber_dual_dim(gens, to_point(point), d, cfg); },
        py::arg("generators"), py::arg("point"), py::arg("d"), py::arg("config") = NumericalConfig{});

  py::class_<ComponentSpec>(m, "Component")
      .def_static("parametrized",
                  [](std::string id, int dim, std::vector<std::string> texts, std::size_t nvars) {
                    return ComponentSpec::from_parametrization(std::move(id), dim, std::move(texts),
                                                               nvars);
                  },
                  py::arg("id"), py::arg("dim"), py::arg("parametrization"), py::arg("nvars"))
      .def_static("points", &ComponentSpec::from_points, py::arg("id"), py::arg("points"))
      .def_readonly("id", &ComponentSpec::id)
      .def_readonly("dim", &ComponentSpec::dim);

  py::class_<OracleHandle>(m, "Oracle")
      .def(py::init([](std::vector<Polynomial> gens, std::vector<ComponentSpec> comps,
                       std::uint64_t seed) {
             require_generators(gens);
             return OracleHandle(std::move(gens), std::move(comps), seed);
           }),
           py::arg("generators"), py::arg("components"), py::arg("seed") = 42)
      .def("validate", &OracleHandle::validate, py::arg("config") = NumericalConfig{})
      .def("sample",
           [](OracleHandle& h, const std::string& id) {
             return h.sample_point(id, h.suspect()).coords;
           })
      .def("dual_at", [](const OracleHandle& h, const std::vector<Complex>& x, int e,
                         const NumericalConfig& cfg) { return h.dual_at(to_point(x), e, cfg); },
           py::arg("point"), py::arg("e"), py::arg("config") = NumericalConfig{});

  py::class_<TruncationSpace>(m, "TruncationSpace")
      .def_readonly("d", &TruncationSpace::d)
      .def_readonly("e", &TruncationSpace::e)
      .def_readonly("certified", &TruncationSpace::certified)
      .def_readonly("basis", &TruncationSpace::basis)
      .def_property_readonly("dim", &TruncationSpace::dim);

  m.def("double_truncation",
        [](OracleHandle& h, int d, int e, const NumericalConfig& cfg) {
          return double_truncation(h, d, e, cfg);
        },
        py::arg("oracle"), py::arg("d"), py::arg("e"), py::arg("config") = NumericalConfig{});
  m.def("ideal_truncation",
        [](const std::vector<Polynomial>& gens, OracleHandle& h, int d, const NumericalConfig& cfg) {
          return ideal_truncation(gens, h, d, cfg);
        },
        py::arg("generators"), py::arg("oracle"), py::arg("d"), py::arg("config") = NumericalConfig{});
  m.def("is_witness_polynomial",
        [](const std::vector<Polynomial>& gens, const Polynomial& g, int c,
           const NumericalConfig& cfg) { return is_witness_polynomial(gens, g, c, cfg); },
        py::arg("generators"), py::arg("g"), py::arg("cutoff"), py::arg("config") = NumericalConfig{});

  py::class_<EmbeddedVerdict>(m, "EmbeddedVerdict")
      .def_readonly("embedded", &EmbeddedVerdict::embedded)
      .def_property_readonly("certificate",
                             [](const EmbeddedVerdict& v) {
                               switch (v.certificate) {
                                 case EmbeddedVerdict::Certificate::Witness: return "witness";
                                 case EmbeddedVerdict::Certificate::Coverage: return "coverage";
                                 case EmbeddedVerdict::Certificate::Isolated: return "isolated";
                               }
                               return "unknown";
                             })
      .def_readonly("witness", &EmbeddedVerdict::witness)
      .def_readonly("witness_e", &EmbeddedVerdict::witness_e)
      .def_readonly("covered_scorners", &EmbeddedVerdict::covered_scorners)
      .def_readonly("scorners", &EmbeddedVerdict::scorners)
      .def_readonly("d", &EmbeddedVerdict::d)
      .def_readonly("staircase", &EmbeddedVerdict::staircase)
      .def_readonly("slice_point", &EmbeddedVerdict::slice_point);

  m.def("is_point_embedded",
        [](const std::vector<Polynomial>& gens, const std::vector<Complex>& y, OracleHandle& h,
           const NumericalConfig& cfg) { return is_point_embedded(gens, to_point(y), h, cfg); },
        py::arg("generators"), py::arg("point"), py::arg("oracle"),
        py::arg("config") = NumericalConfig{});
  m.def("is_component_embedded",
        [](const std::vector<Polynomial>& gens, const ComponentSpec& suspect, OracleHandle& h,
           const NumericalConfig& cfg) {
          SlicedProblem sp = slice_suspect(gens, suspect, h, cfg);
          EmbeddedVerdict v = is_point_embedded(sp.generators, sp.point, sp.oracle, cfg);
          v.slice_point = sp.point.coords;
          return v;
        },
        "Slices a positive-dimensional suspect generically and tests the slice point.",
        py::arg("generators"), py::arg("suspect"), py::arg("oracle"),
        py::arg("config") = NumericalConfig{});

  m.def("interpolate_isolated",
        [](OracleHandle& h, const std::string& id, int e, const NumericalConfig& cfg) {
          return interpolate_isolated(h, id, e, cfg);
        },
        py::arg("oracle"), py::arg("component"), py::arg("e"), py::arg("config") = NumericalConfig{});
  m.def("dual_dims_of_truncated_ideal",
        [](const TruncationSpace& t, const std::vector<Complex>& y, int k,
           const NumericalConfig& cfg) { return dual_dims_of_truncated_ideal(t, to_point(y), k, cfg); },
        py::arg("space"), py::arg("point"), py::arg("k"), py::arg("config") = NumericalConfig{});

  m.def("command_names", &command_names);
  m.def("run_command",
        [](const std::string& command, const std::string& path, std::optional<double> delta,
           std::optional<std::uint64_t> seed, std::optional<int> max_degree,
           std::optional<int> order, std::optional<int> degree, std::string component,
           std::vector<std::string> polynomials) {
          CommandOptions opts;
          opts.delta = delta;
          opts.seed = seed;
          opts.max_degree = max_degree;
          opts.order = order;
          opts.degree = degree;
          opts.component = std::move(component);
          opts.polynomials = std::move(polynomials);
          opts.quiet = true;
          py::gil_scoped_release release;
          const CommandResult r = run_command_file(command, path, opts);
          return std::make_pair(r.exit_code, r.output);
        },
        "Runs a CLI command on a problem file; returns (exit_code, json_text).",
        py::arg("command"), py::arg("problem"), py::arg("delta") = std::nullopt,
        py::arg("seed") = std::nullopt, py::arg("max_degree") = std::nullopt,
        py::arg("order") = std::nullopt, py::arg("degree") = std::nullopt,
        py::arg("component") = "", py::arg("polynomials") = std::vector<std::string>{});
}
