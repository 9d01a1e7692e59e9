#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "netop/algebra.hpp"
#include "netop/error.hpp"
#include "netop/green.hpp"
#include "netop/io.hpp"
#include "netop/laws.hpp"
#include "netop/petri.hpp"

namespace py = pybind11;
using namespace netop;

namespace {

struct PyNet {
  PetriNet net;
};

GreenContextPtr context(std::size_t n, const std::string& monoid) {
  return kneser_context(n, parse_monoid(monoid));
}

}  // namespace

PYBIND11_MODULE(_netop, m) {
  m.doc() = "Network models, network operads, graph products and Petri nets";

  py::register_exception<netop::error>(m, "NetopError", PyExc_ValueError);

  m.def("block_swap", [](std::size_t a, std::size_t b) { return block_swap(a, b).one_based(); });
  m.def("compose_permutations", [](const std::vector<std::size_t>& s, const std::vector<std::size_t>& t) {
    return compose(Permutation::from_one_based(s), Permutation::from_one_based(t)).one_based();
  });

  m.def(
      "normalize",
      [](const std::string& word, std::size_t n, const std::string& monoid,
         const std::string& variety) {
        return format_word(normalize(parse_word(word, context(n, monoid)), parse_variety(variety)));
      },
      py::arg("word"), py::arg("n"), py::arg("monoid") = "bool", py::arg("variety") = "mon");
  m.def(
      "words_equal",
      [](const std::string& a, const std::string& b, std::size_t n, const std::string& monoid,
         const std::string& variety) {
        const auto ctx = context(n, monoid);
        return words_equal(parse_word(a, ctx), parse_word(b, ctx), parse_variety(variety));
      },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("monoid") = "bool",
      py::arg("variety") = "mon");

  // Networks and operations cross the boundary as JSON text.
  m.def("_act", [](const std::string& op, const std::string& model,
                   const std::vector<std::string>& args) {
    const auto f = operation_from_json(json::parse(op), model_from_json(json::parse(model)));
    std::vector<Network> gs;
    for (const auto& a : args) gs.push_back(network_from_json(json::parse(a)));
    return to_json(act_canonical(f, gs)).dump();
  });

  py::class_<PyNet>(m, "PetriNet")
      .def(py::init([](const std::string& text) { return PyNet{parse_petri(text).net}; }))
      .def_property_readonly("species", [](const PyNet& p) { return p.net.species(); })
      .def("catalysts",
           [](const PyNet& p) {
             std::vector<std::string> out;
             for (auto s : catalysts(p.net)) out.push_back(p.net.species()[s]);
             return out;
           })
      .def("fire",
           [](const PyNet& p, const std::string& marking, const std::string& t) {
             return format_marking(p.net,
                                   fire(p.net, parse_marking(p.net, marking), p.net.transition_index(t)));
           })
      .def("reachable",
           [](const PyNet& p, const std::string& marking, std::size_t depth) {
             std::vector<std::string> out;
             for (const auto& mk : reachable(p.net, parse_marking(p.net, marking), depth)) {
               out.push_back(format_marking(p.net, mk));
             }
             return out;
           })
      .def("__str__", [](const PyNet& p) { return format_petri(p.net); });

  m.def(
      "run_suite",
      [](const std::string& suite, std::size_t cases, std::uint64_t seed) {
        std::vector<py::tuple> out;
        for (const auto& r : run_suite(parse_suite(suite), cases, seed)) {
          out.push_back(py::make_tuple(r.name, r.cases, r.failures));
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("cases") = 100, py::arg("seed") = 0);

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
