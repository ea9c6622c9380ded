#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "hpd/decompose.hpp"
#include "hpd/dvop.hpp"
#include "hpd/ham.hpp"
#include "hpd/io.hpp"
#include "hpd/transforms.hpp"
#include "hpd/verify.hpp"

namespace py = pybind11;

namespace {

std::vector<std::vector<hpd::Vertex>> decomposition_paths(const hpd::Decomposition& d,
                                                          std::uint64_t limit) {
  if (d.path_count() > limit)
    throw hpd::ResourceLimit("too many paths to materialize; raise the limit");
  std::vector<std::vector<hpd::Vertex>> out;
  out.reserve(d.path_count());
  d.for_each([&](const hpd::PathEmbedding& p) { out.push_back(p.verts); });
  return out;
}

void decomposition_write(const hpd::Decomposition& d, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw hpd::InvalidParameter("cannot open " + path);
  hpd::write_decomposition(os, d);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "edge decompositions of hypercubes into fixed-length paths";

  py::register_exception<hpd::NotDivisible>(m, "NotDivisibleError");
  py::register_exception<hpd::ResourceLimit>(m, "ResourceLimitError");
  py::register_exception<hpd::Unsupported>(m, "UnsupportedError");

  py::class_<hpd::Report>(m, "Report")
      .def_readonly("ok", &hpd::Report::ok)
      .def_readonly("paths_seen", &hpd::Report::paths_seen)
      .def_readonly("edges_seen", &hpd::Report::edges_seen)
      .def_readonly("sampled", &hpd::Report::sampled)
      .def_readonly("seed", &hpd::Report::seed)
      .def_property_readonly(
          "failure", [](const hpd::Report& r) { return hpd::failure_name(r.first_failure); })
      .def_readonly("witness", &hpd::Report::witness)
      .def("summary", &hpd::Report::summary)
      .def("__repr__",
           [](const hpd::Report& r) { return "<Report " + r.summary() + ">"; });

  py::class_<hpd::Decomposition>(m, "Decomposition")
      .def_property_readonly("dim", &hpd::Decomposition::dim)
      .def_property_readonly("path_len", &hpd::Decomposition::path_len)
      .def_property_readonly("path_count", &hpd::Decomposition::path_count)
      .def("paths", &decomposition_paths, py::arg("limit") = std::uint64_t{1} << 22,
           "Materialize every path as a list of vertex labels.")
      .def("write", &decomposition_write, py::arg("path"),
           "Write the decomposition file.")
      .def("verify",
           [](const hpd::Decomposition& d) { return hpd::verify_decomposition(d); },
           "Re-check the stream with the independent verifier.")
      .def("__repr__", [](const hpd::Decomposition& d) {
        std::ostringstream os;
        os << "<Decomposition Q_" << d.dim() << " into " << d.path_count()
           << " paths of length " << d.path_len() << ">";
        return os.str();
      });

  m.def("parity", &hpd::parity, py::arg("v"), "Coordinate sum mod 2.");
  m.def("flip", &hpd::flip, py::arg("v"), py::arg("j"), "Flip coordinate j.");
  m.def("force_even", &hpd::force_even, py::arg("v"), py::arg("j"),
        "Even-parity endpoint of the edge through v along j.");
  m.def("force_odd", &hpd::force_odd, py::arg("v"), py::arg("j"),
        "Odd-parity endpoint of the edge through v along j.");
  m.def(
      "edge_index",
      [](hpd::Vertex v, int j, int q) {
        hpd::require_coord(q, j);
        hpd::require_vertex(q, v);
        return hpd::edge_index(hpd::edge_ref(v, j), q);
      },
      py::arg("v"), py::arg("j"), py::arg("q"),
      "Injective index of the edge {v, flip(v, j)} in Q_q.");
  m.def(
      "f_gamma", [](int q, hpd::Vertex gamma) { return hpd::f_gamma(q, gamma).verts; },
      py::arg("q"), py::arg("gamma"),
      "The gamma-translate of the monotone length-q path.");
  m.def("base_partition", &hpd::base_partition, py::arg("q"),
        "E(Q_q) as 2^(q-1) translates of the monotone path.");

  m.def("check_divisibility", &hpd::check_divisibility, py::arg("m"), py::arg("q"),
        "Whether P_m can tile E(Q_q) (q odd).");
  m.def("decompose", &hpd::decompose, py::arg("m"), py::arg("q"),
        py::arg("max_edges") = hpd::kDefaultMaxEdges,
        "Partition E(Q_q) into paths of length m.");
  m.def(
      "plan", [](std::int64_t m, std::int64_t q) { return plan_to_string(*hpd::plan_for(m, q)); },
      py::arg("m"), py::arg("q"),
      "Describe how decompose(m, q) would be built, without emitting anything.");
  m.def(
      "verify_file",
      [](const std::string& path, std::uint64_t max_edges) {
        std::ifstream is(path, std::ios::binary);
        if (!is) throw hpd::InvalidParameter("cannot open " + path);
        return hpd::verify_decomposition_file(is, max_edges);
      },
      py::arg("path"), py::arg("max_edges") = hpd::kDefaultMaxEdges,
      "Check a decomposition file.");

  m.def("g_eval", &hpd::g_eval, py::arg("r"), py::arg("delta"), py::arg("w"),
        "Vertex at position w of Hamiltonian cycle delta on Q_{2^r}.");
  m.def("g_inverse", &hpd::g_inverse, py::arg("r"), py::arg("delta"), py::arg("vertex"),
        "Position of a vertex on cycle delta.");
  m.def("advance", &hpd::advance, py::arg("r"), py::arg("delta"), py::arg("v"),
        py::arg("dir"), "One step along cycle delta (dir = +1 or -1).");
  m.def(
      "ham_cycle",
      [](int r, std::uint32_t delta) { return hpd::ham_cycle(r, delta).verts; },
      py::arg("r"), py::arg("delta"), "Materialize one Hamiltonian cycle (r <= 4).");
  m.def("rho1", &hpd::rho1, py::arg("v"), py::arg("q"), "Position residue mod 4.");
  m.def("rho2", &hpd::rho2, py::arg("v"), py::arg("q"), "Position residue mod 16.");

  m.def(
      "dvop_path",
      [](int r, int k, hpd::Vertex v) { return hpd::dvop_for(r, k).path_of(v).verts; },
      py::arg("r"), py::arg("k"), py::arg("v"),
      "The length-k path rooted at v of the DVOP[k] system on Q_{2^r}.");
  m.def(
      "verify_dvop",
      [](int r, int k, std::uint64_t samples) {
        hpd::DvopCheckOptions opts;
        opts.samples = samples;
        return hpd::verify_dvop(hpd::dvop_for(r, k), opts);
      },
      py::arg("r"), py::arg("k"), py::arg("samples") = std::uint64_t{10000},
      "Check the DVOP[k] system on Q_{2^r}.");

  m.def(
      "brute_force_decompose",
      [](int q, int m) -> py::object {
        const auto witness = hpd::brute_force_decompose(q, m);
        if (!witness) return py::none();
        std::vector<std::vector<hpd::Vertex>> out;
        out.reserve(witness->size());
        for (const auto& p : *witness) out.push_back(p.verts);
        return py::cast(out);
      },
      py::arg("q"), py::arg("m"),
      "Exhaustive search on a tiny cube; None when no partition exists.");

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
