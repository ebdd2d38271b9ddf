#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sumdiv/errors.hpp"
#include "sumdiv/families.hpp"
#include "sumdiv/search.hpp"
#include "sumdiv/serialize.hpp"
#include "sumdiv/spectrum.hpp"
#include "sumdiv/verifier.hpp"

namespace py = pybind11;
using namespace sumdiv;

namespace {

// Elements cross the boundary as rational text; the Python layer converts
// to and from fractions.Fraction.
using Texts = std::vector<std::string>;

PositiveSet to_set(const Texts& values) {
  std::vector<Rational> v;
  v.reserve(values.size());
  for (const auto& s : values) v.push_back(parse_rational(s));
  return PositiveSet::from_values(std::move(v));
}

Texts to_texts(const PositiveSet& a) {
  Texts out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(x.str());
  return out;
}

std::uint64_t cap_or_default(std::optional<std::uint64_t> cap) {
  return cap ? *cap : default_pair_cap();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact sum-set, ratio-set and sum-division checks (C++ core)";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);

  m.def("normalize", [](const std::string& s) { return parse_rational(s).str(); });
  m.def("make_set", [](const Texts& a) { return to_texts(to_set(a)); });

  m.def("sumset", [](const Texts& a, const Texts& b, std::optional<std::uint64_t> cap) {
    return to_texts(sumset(to_set(a), to_set(b), cap_or_default(cap)));
  }, py::arg("a"), py::arg("b"), py::arg("pair_cap") = py::none());
  m.def("productset", [](const Texts& a, const Texts& b, std::optional<std::uint64_t> cap) {
    return to_texts(productset(to_set(a), to_set(b), cap_or_default(cap)));
  }, py::arg("a"), py::arg("b"), py::arg("pair_cap") = py::none());
  m.def("ratioset", [](const Texts& a, const Texts& b, std::optional<std::uint64_t> cap) {
    return to_texts(ratioset(to_set(a), to_set(b), cap_or_default(cap)));
  }, py::arg("a"), py::arg("b"), py::arg("pair_cap") = py::none());
  m.def("square_set", [](const Texts& a) { return to_texts(square_set(to_set(a))); });
  m.def("grid_sumset_size", [](const Texts& a, std::optional<std::uint64_t> cap) {
    return grid_sumset_size(to_set(a), cap_or_default(cap));
  }, py::arg("a"), py::arg("pair_cap") = py::none());
  m.def("rad_ang_sizes", [](const Texts& a) {
    const auto r = rad_ang_sizes(to_set(a), default_pair_cap());
    return std::make_pair(r.radius_count, r.angle_count);
  });

  m.def("ratio_spectrum", [](const Texts& a) {
    std::vector<std::pair<std::string, std::uint64_t>> out;
    const auto spectrum = ratio_spectrum(to_set(a), default_pair_cap());
    for (const auto& e : spectrum.entries())
      out.emplace_back(e.ratio.str(), e.multiplicity);
    return out;
  });
  m.def("threshold_index", [](const Texts& a) {
    const auto t = threshold_index(ratio_spectrum(to_set(a), default_pair_cap()));
    return py::dict(py::arg("k") = t.k, py::arg("m_k") = t.m_k,
                    py::arg("head_mass") = t.head_mass, py::arg("tail_mass") = t.tail_mass);
  });

  m.def("verify_json", [](const Texts& a, int precision) {
    return to_json(verify_sum_division(to_set(a), default_pair_cap(), precision)).dump();
  }, py::arg("a"), py::arg("precision") = kDefaultPrecision);
  m.def("ray_certificate_json", [](const Texts& a, std::optional<std::size_t> from) {
    const auto set = to_set(a);
    const auto cap = default_pair_cap();
    const std::size_t k = from ? *from : threshold_index(ratio_spectrum(set, cap)).k;
    return to_json(ray_certificate(set, k, cap)).dump();
  }, py::arg("a"), py::arg("from_index") = py::none());

  m.def("interval_set", [](std::uint64_t n) { return to_texts(interval_set(n)); });
  m.def("geometric_set", [](const std::string& ratio, std::uint64_t n) {
    return to_texts(geometric_set(parse_rational(ratio), n));
  });
  m.def("farey_set", [](std::uint64_t n) { return to_texts(farey_set(n)); });
  m.def("random_set", [](std::uint64_t n, std::uint64_t bound, std::uint64_t seed) {
    return to_texts(random_set({n, bound, seed}));
  }, py::arg("n"), py::arg("bound"), py::arg("seed"));
  m.def("farey_size", &farey_size);
  m.def("mult_table_count", [](std::uint64_t n) { return mult_table_count(n); });
  m.def("beta_constant", [] { return static_cast<double>(beta_constant()); });
  m.def("farey_statistics_json", [](std::uint64_t n) {
    return to_json(farey_statistics(n, default_pair_cap())).dump();
  });

  m.def("search_json", [](const std::string& objective, const std::string& mode,
                          std::uint64_t size, std::uint64_t universe, std::uint64_t seed,
                          std::uint64_t iterations, std::uint64_t bound) {
    SearchConfig c;
    c.objective = parse_objective(objective);
    c.mode = parse_search_mode(mode);
    c.cardinality = size;
    c.universe = universe;
    c.seed = seed;
    c.iterations = iterations;
    c.element_bound = bound;
    c.pair_cap = default_pair_cap();
    return to_json(c, run_search(c)).dump();
  }, py::arg("objective"), py::arg("mode"), py::arg("size"), py::arg("universe") = 12,
     py::arg("seed") = 0, py::arg("iterations") = 1000, py::arg("bound") = 32);
}
