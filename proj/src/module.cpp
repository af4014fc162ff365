// Python bindings: ring analysis, experiments, and the kernel operations,
// exchanged as JSON strings (the python package wraps them into dicts).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "gorlab/lab.hpp"

namespace py = pybind11;

namespace {

using gorlab::GFp;
using gorlab::GradedAlgebra;
using gorlab::Rational;
using gorlab::RingSpecData;

using AnyAlgebra = std::variant<GradedAlgebra<Rational>, GradedAlgebra<GFp>>;

AnyAlgebra make_algebra(const RingSpecData& spec) {
  if (spec.rational) return gorlab::build_algebra<Rational>(spec);
  return gorlab::build_algebra<GFp>(spec);
}

gorlab::LabOptions options(std::uint64_t seed, int window, int max_steps) {
  gorlab::LabOptions opt;
  opt.seed = seed;
  opt.window = window;
  opt.max_steps = max_steps;
  return opt;
}

template <class K>
gorlab::ParameterSequence<K> parse_sequence(const GradedAlgebra<K>& R,
                                            const std::vector<std::string>& elems) {
  std::vector<gorlab::Polynomial<K>> polys;
  for (const auto& s : elems) polys.push_back(gorlab::parse_polynomial<K>(R.ring(), s));
  return gorlab::ParameterSequence<K>::of(std::move(polys));
}

template <class K>
gorlab::Ideal<K> parse_ideal(const GradedAlgebra<K>& R, const std::vector<std::string>& gens) {
  std::vector<gorlab::Polynomial<K>> polys;
  for (const auto& s : gens) polys.push_back(gorlab::parse_polynomial<K>(R.ring(), s));
  return gorlab::Ideal<K>(R.ring(), std::move(polys));
}

// A graded ring handle; all results cross the boundary as JSON or plain
// scalars so the python layer stays schema-compatible with the CLI.
class Ring {
 public:
  explicit Ring(const std::string& spec_json)
      : spec_(gorlab::parse_ring_spec(spec_json)), algebra_(make_algebra(spec_)) {}

  std::string analyze_json(std::uint64_t seed, int window, int max_steps) const {
    return std::visit(
        [&](const auto& R) {
          return gorlab::analyze_ring(R, spec_, options(seed, window, max_steps))
              .to_json()
              .dump();
        },
        algebra_);
  }

  std::string sweep_json(const std::vector<std::string>& sop, int max_n, std::uint64_t seed,
                         int window, int max_steps) const {
    return std::visit(
        [&](const auto& R) {
          using K = std::decay_t<decltype(R.ring()->scalar_zero())>;
          auto seq = parse_sequence<K>(R, sop);
          return gorlab::index_sweep(R, spec_, seq, max_n, options(seed, window, max_steps))
              .to_json()
              .dump();
        },
        algebra_);
  }

  std::string theorem_json(int samples, std::uint64_t seed, int window, int max_steps) const {
    return std::visit(
        [&](const auto& R) {
          return gorlab::theorem_main_check(R, spec_, samples, options(seed, window, max_steps))
              .to_json()
              .dump();
        },
        algebra_);
  }

  std::string corollary_json(int max_power, int samples, std::uint64_t seed, int window,
                             int max_steps) const {
    return std::visit(
        [&](const auto& R) {
          return gorlab::corollary_search(R, spec_, max_power, samples,
                                          options(seed, window, max_steps))
              .to_json()
              .dump();
        },
        algebra_);
  }

  int dim() const {
    return std::visit([](const auto& R) { return R.dim(); }, algebra_);
  }

  int depth() const {
    return std::visit([](const auto& R) { return gorlab::depth(R); }, algebra_);
  }

  std::vector<std::string> groebner_basis(const std::vector<std::string>& gens) const {
    return std::visit(
        [&](const auto& R) {
          using K = std::decay_t<decltype(R.ring()->scalar_zero())>;
          std::vector<std::string> out;
          gorlab::Ideal<K> ideal = parse_ideal<K>(R, gens);
          for (const auto& g : ideal.groebner()) out.push_back(g.str());
          return out;
        },
        algebra_);
  }

  std::string normal_form(const std::string& f, const std::vector<std::string>& gens) const {
    return std::visit(
        [&](const auto& R) {
          using K = std::decay_t<decltype(R.ring()->scalar_zero())>;
          return gorlab::normal_form(gorlab::parse_polynomial<K>(R.ring(), f),
                                     parse_ideal<K>(R, gens))
              .str();
        },
        algebra_);
  }

  std::vector<std::string> colon(const std::vector<std::string>& gens,
                                 const std::string& f) const {
    return std::visit(
        [&](const auto& R) {
          using K = std::decay_t<decltype(R.ring()->scalar_zero())>;
          std::vector<std::string> out;
          auto c = gorlab::colon(parse_ideal<K>(R, gens),
                                 gorlab::parse_polynomial<K>(R.ring(), f));
          for (const auto& g : c.groebner()) out.push_back(g.str());
          return out;
        },
        algebra_);
  }

  std::vector<std::string> saturation(const std::vector<std::string>& gens,
                                      const std::vector<std::string>& by) const {
    return std::visit(
        [&](const auto& R) {
          using K = std::decay_t<decltype(R.ring()->scalar_zero())>;
          std::vector<std::string> out;
          auto s = gorlab::saturation(parse_ideal<K>(R, gens), parse_ideal<K>(R, by));
          for (const auto& g : s.groebner()) out.push_back(g.str());
          return out;
        },
        algebra_);
  }

  int krull_dimension(const std::vector<std::string>& gens) const {
    return std::visit(
        [&](const auto& R) {
          using K = std::decay_t<decltype(R.ring()->scalar_zero())>;
          return gorlab::krull_dimension(parse_ideal<K>(R, gens));
        },
        algebra_);
  }

  std::optional<std::vector<std::string>> quotient_basis(
      const std::vector<std::string>& gens) const {
    return std::visit(
        [&](const auto& R) -> std::optional<std::vector<std::string>> {
          using K = std::decay_t<decltype(R.ring()->scalar_zero())>;
          auto qb = gorlab::quotient_basis(parse_ideal<K>(R, gens));
          if (!qb) return std::nullopt;
          std::vector<std::string> out;
          for (const auto& m : qb->monomials()) out.push_back(R.ring()->mono_str(m));
          return out;
        },
        algebra_);
  }

  long hilbert_function(const std::vector<std::string>& gens, long e) const {
    return std::visit(
        [&](const auto& R) {
          using K = std::decay_t<decltype(R.ring()->scalar_zero())>;
          return gorlab::hilbert_function(parse_ideal<K>(R, gens), e);
        },
        algebra_);
  }

  long index_of_reducibility(const std::vector<std::string>& q) const {
    return std::visit(
        [&](const auto& R) {
          using K = std::decay_t<decltype(R.ring()->scalar_zero())>;
          return gorlab::index_of_reducibility(R, parse_ideal<K>(R, q)).index;
        },
        algebra_);
  }

  std::vector<std::string> limit_closure(const std::vector<std::string>& seq) const {
    return std::visit(
        [&](const auto& R) {
          using K = std::decay_t<decltype(R.ring()->scalar_zero())>;
          std::vector<std::string> out;
          gorlab::Ideal<K> closure = gorlab::limit_closure(R, parse_sequence<K>(R, seq));
          for (const auto& g : closure.groebner()) out.push_back(g.str());
          return out;
        },
        algebra_);
  }

  bool is_regular_sequence(const std::vector<std::string>& seq) const {
    return std::visit(
        [&](const auto& R) {
          using K = std::decay_t<decltype(R.ring()->scalar_zero())>;
          return gorlab::is_regular_sequence(R, parse_sequence<K>(R, seq));
        },
        algebra_);
  }

  bool is_system_of_parameters(const std::vector<std::string>& seq) const {
    return std::visit(
        [&](const auto& R) {
          using K = std::decay_t<decltype(R.ring()->scalar_zero())>;
          return gorlab::is_system_of_parameters(R, parse_sequence<K>(R, seq));
        },
        algebra_);
  }

  long local_cohomology_socle_dim(int i) const {
    return std::visit(
        [&](const auto& R) {
          using K = std::decay_t<decltype(R.ring()->scalar_zero())>;
          auto sop = gorlab::random_homogeneous_sop(R, 1, 0x5eed);
          return gorlab::local_cohomology_socles(R, sop, static_cast<std::size_t>(i))
              .limit_socle_dim;
        },
        algebra_);
  }

  int ell(int i) const {
    return std::visit(
        [&](const auto& R) {
          return gorlab::compute_ell(R, static_cast<std::size_t>(i)).ell;
        },
        algebra_);
  }

  bool goto_sakurai(int i, const std::vector<std::string>& q) const {
    return std::visit(
        [&](const auto& R) {
          using K = std::decay_t<decltype(R.ring()->scalar_zero())>;
          return gorlab::goto_sakurai_check(R, static_cast<std::size_t>(i),
                                            parse_sequence<K>(R, q));
        },
        algebra_);
  }

  bool koszul_ext_agree(int i) const {
    return std::visit(
        [&](const auto& R) {
          return gorlab::koszul_ext_agreement(R, static_cast<std::size_t>(i)).agree;
        },
        algebra_);
  }

 private:
  RingSpecData spec_;
  AnyAlgebra algebra_;
};

}  // namespace

PYBIND11_MODULE(_gorlab, m) {
  m.doc() = "Exact Cohen-Macaulay/Gorenstein analysis of graded rings";

  py::register_exception<gorlab::ConsistencyError>(m, "ConsistencyError");
  py::register_exception<gorlab::StabilizationError>(m, "StabilizationError");
  py::register_exception<gorlab::InputError>(m, "GorlabInputError", PyExc_ValueError);

  py::class_<Ring>(m, "Ring")
      .def(py::init<const std::string&>(), py::arg("spec_json"))
      .def("analyze_json", &Ring::analyze_json, py::arg("seed") = 42, py::arg("window") = 2,
           py::arg("max_steps") = 10)
      .def("sweep_json", &Ring::sweep_json, py::arg("sop"), py::arg("max_n") = 6,
           py::arg("seed") = 42, py::arg("window") = 2, py::arg("max_steps") = 10)
      .def("theorem_json", &Ring::theorem_json, py::arg("samples") = 20, py::arg("seed") = 42,
           py::arg("window") = 2, py::arg("max_steps") = 10)
      .def("corollary_json", &Ring::corollary_json, py::arg("max_power") = 4,
           py::arg("samples") = 20, py::arg("seed") = 42, py::arg("window") = 2,
           py::arg("max_steps") = 10)
      .def("dim", &Ring::dim)
      .def("depth", &Ring::depth)
      .def("groebner_basis", &Ring::groebner_basis, py::arg("generators"))
      .def("normal_form", &Ring::normal_form, py::arg("f"), py::arg("generators"))
      .def("colon", &Ring::colon, py::arg("generators"), py::arg("f"))
      .def("saturation", &Ring::saturation, py::arg("generators"), py::arg("by"))
      .def("krull_dimension", &Ring::krull_dimension, py::arg("generators"))
      .def("quotient_basis", &Ring::quotient_basis, py::arg("generators"))
      .def("hilbert_function", &Ring::hilbert_function, py::arg("generators"), py::arg("e"))
      .def("index_of_reducibility", &Ring::index_of_reducibility, py::arg("q"))
      .def("limit_closure", &Ring::limit_closure, py::arg("sequence"))
      .def("is_regular_sequence", &Ring::is_regular_sequence, py::arg("sequence"))
      .def("is_system_of_parameters", &Ring::is_system_of_parameters, py::arg("sequence"))
      .def("local_cohomology_socle_dim", &Ring::local_cohomology_socle_dim, py::arg("i"))
      .def("ell", &Ring::ell, py::arg("i"))
      .def("goto_sakurai", &Ring::goto_sakurai, py::arg("i"), py::arg("q"))
      .def("koszul_ext_agree", &Ring::koszul_ext_agree, py::arg("i"));

  m.attr("__version__") = "0.1.0";
}
