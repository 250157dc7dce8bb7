#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "affhecke/commands.hpp"
#include "affhecke/expression.hpp"

namespace py = pybind11;
using namespace affhecke;

namespace {

GroupPtr group_of(char type, int rank) { return AffineWeylGroup::create(type, rank); }

Config make_config(char type, int rank, std::uint32_t prime, std::int64_t max_length, std::uint64_t seed,
                   std::size_t samples) {
    Config c;
    c.lie_type = type;
    c.rank = rank;
    c.prime = prime;
    c.max_length = max_length;
    c.seed = seed;
    c.samples = samples;
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Affine Weyl groups, 0-Hecke algebras and Demazure operators over GF(p)";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ResourceBoundExceeded>(m, "ResourceBoundExceeded", PyExc_RuntimeError);

    py::class_<AffineWeylElement>(m, "Element")
        .def("__mul__", [](const AffineWeylElement& a, const AffineWeylElement& b) { return a * b; })
        .def("__eq__", [](const AffineWeylElement& a, const AffineWeylElement& b) { return a == b; })
        .def("__hash__", &AffineWeylElement::hash)
        .def("__repr__", [](const AffineWeylElement& x) { return "Element(" + to_json(x).dump() + ")"; })
        .def("length", [](const AffineWeylElement& x) { return length(x); })
        .def("reduced_word", [](const AffineWeylElement& x) { return reduced_word(x); })
        .def("reduced_words", [](const AffineWeylElement& x) { return all_reduced_words(x); })
        .def("inverse", &AffineWeylElement::inverse)
        .def("is_right_descent", [](const AffineWeylElement& x, int i) { return is_right_descent(x, i); })
        .def("bruhat_leq", [](const AffineWeylElement& u, const AffineWeylElement& w) { return bruhat_leq(u, w); })
        .def_property_readonly("translation", [](const AffineWeylElement& x) { return x.translation().coords; })
        .def_property_readonly("finite_word", [](const AffineWeylElement& x) { return finite_reduced_word(x); })
        .def("to_json", [](const AffineWeylElement& x) { return to_json(x).dump(); });

    m.def("from_word", [](char type, int rank, const Word& w) { return group_of(type, rank)->from_word(w); },
          py::arg("type"), py::arg("rank"), py::arg("word"));
    m.def("translation",
          [](char type, int rank, const std::vector<std::int64_t>& lambda) { return group_of(type, rank)->translation(Coweight{lambda}); },
          py::arg("type"), py::arg("rank"), py::arg("coweight"));
    m.def("enumerate_ball",
          [](char type, int rank, std::int64_t n) { return enumerate_ball(group_of(type, rank), n).shells; },
          py::arg("type"), py::arg("rank"), py::arg("max_length"));
    m.def("positive_root_count", [](char type, int rank) { return RootSystem::build(type, rank)->positive_roots().size(); });

    m.def("compute_json",
          [](char type, int rank, std::uint32_t prime, const std::string& expr) {
              return evaluate_expression(group_of(type, rank), prime, expr).dump();
          },
          py::arg("type"), py::arg("rank"), py::arg("prime"), py::arg("expression"));
    m.def("check_json",
          [](char type, int rank, const std::string& suite, std::uint32_t prime, std::int64_t max_length, std::uint64_t seed,
             std::size_t samples) {
              auto r = cmd_check(make_config(type, rank, prime, max_length, seed, samples), suite);
              if (r.exit_code == kExitUsage || r.exit_code == kExitResourceBound) throw std::invalid_argument(r.error);
              return r.output;
          },
          py::arg("type"), py::arg("rank"), py::arg("suite"), py::arg("prime") = 3, py::arg("max_length") = 3,
          py::arg("seed") = 1, py::arg("samples") = 50);
    m.def("graph_dot",
          [](char type, int rank, std::int64_t max_length, const std::string& cache) {
              Config c = make_config(type, rank, 3, max_length, 1, 0);
              c.format = OutputFormat::Dot;
              c.cache = cache;
              auto r = cmd_graph(c);
              if (r.exit_code != kExitOk) throw std::invalid_argument(r.error);
              return r.output;
          },
          py::arg("type"), py::arg("rank"), py::arg("max_length"), py::arg("cache"));
}
