// Python bindings. Rationals cross the boundary as fractions.Fraction (ints
// and "p/q" strings are accepted on input); reports come back as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "beltlab/belt.hpp"
#include "beltlab/errors.hpp"
#include "beltlab/evidence.hpp"
#include "beltlab/io.hpp"
#include "beltlab/tiling.hpp"
#include "beltlab/wheel.hpp"

namespace py = pybind11;
using namespace beltlab;

namespace {

Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) {
    throw Error(ErrorKind::InvalidArgument, "floats are not exact; pass an int, Fraction or \"p/q\"");
  }
  return parse_rational(py::str(h).cast<std::string>());
}

py::object to_fraction(const Rational& q) {
  // Leaked on purpose: these must outlive interpreter shutdown.
  static auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
  py::object num = py::int_(py::str(q.get_num().get_str()));
  py::object den = py::int_(py::str(q.get_den().get_str()));
  return (*fraction)(num, den);
}

Vec3Q to_vec(const py::handle& h) {
  auto seq = py::reinterpret_borrow<py::sequence>(h);
  if (seq.size() != 3) throw Error(ErrorKind::InvalidArgument, "expected a 3-vector");
  return Vec3Q(to_rational(seq[0]), to_rational(seq[1]), to_rational(seq[2]));
}

std::vector<Vec3Q> to_vecs(const py::sequence& s) {
  std::vector<Vec3Q> out;
  for (auto h : s) out.push_back(to_vec(h));
  return out;
}

py::tuple from_vec(const Vec3Q& v) { return py::make_tuple(to_fraction(v.x), to_fraction(v.y), to_fraction(v.z)); }

py::object from_json(const Json& j) {
  static auto* loads = new py::object(py::module_::import("json").attr("loads"));
  return (*loads)(j.dump());
}

LatticeBasis to_lattice(const py::sequence& s) {
  auto b = to_vecs(s);
  if (b.size() != 3) throw Error(ErrorKind::InvalidArgument, "lattice needs three basis vectors");
  return LatticeBasis(b[0], b[1], b[2]);
}

PeriodicMultiset to_multiset(const py::sequence& lattice, const std::optional<py::sequence>& motif) {
  std::vector<Vec3Q> m = motif ? to_vecs(*motif) : std::vector<Vec3Q>{Vec3Q()};
  return PeriodicMultiset(std::move(m), to_lattice(lattice));
}

Zonotope to_zonotope(const py::sequence& gens) { return Zonotope(GeneratorSet(to_vecs(gens))); }

}  // namespace

PYBIND11_MODULE(_beltlab, m) {
  m.doc() = "Exact zonotope belts, k-fold tiling checks and wheel analysis";

  static auto* error_type = new py::exception<Error>(m, "BeltlabError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::handle(error_type->ptr())(py::str(e.what()));
      inst.attr("kind") = py::str(std::string(to_string(e.kind())));
      PyErr_SetObject(error_type->ptr(), inst.ptr());
    }
  });

  m.def("canonicalize", [](const py::sequence& raw) {
    auto r = canonicalize(to_vecs(raw));
    py::list gens;
    for (const auto& g : r.generators) gens.append(from_vec(g));
    return py::make_tuple(gens, from_vec(r.offset));
  }, py::arg("vectors"), "Merge parallel vectors; returns (generators, offset).");

  m.def("volume", [](const py::sequence& gens) { return to_fraction(zonotope_volume(GeneratorSet(to_vecs(gens)))); },
        py::arg("generators"));

  m.def("vertices", [](const py::sequence& gens) {
    py::list out;
    for (const auto& v : to_zonotope(gens).vertices()) out.append(from_vec(v));
    return out;
  }, py::arg("generators"));

  m.def("contains", [](const py::sequence& gens, const py::sequence& point, bool open) {
    return to_zonotope(gens).contains(to_vec(point), open ? Membership::Open : Membership::Closed);
  }, py::arg("generators"), py::arg("point"), py::arg("open") = false);

  m.def("analyze", [](const py::sequence& gens) { return from_json(analyze_report(to_zonotope(gens))); },
        py::arg("generators"), "Facets, belts, volume and classification as a dict.");

  m.def("classify", [](const py::sequence& gens) { return from_json(classify_report(to_zonotope(gens))); },
        py::arg("generators"));

  m.def("belts", [](const py::sequence& gens) {
    py::list out;
    for (const auto& b : belts(to_zonotope(gens))) {
      py::dict d;
      d["generator"] = b.edge_gen_index;
      d["facet_count"] = b.facet_count();
      d["m"] = b.m;
      out.append(d);
    }
    return out;
  }, py::arg("generators"));

  m.def("count_cover", [](const py::sequence& gens, const py::sequence& lattice, const py::sequence& point,
                          std::optional<py::sequence> motif) {
    auto c = count_cover(to_zonotope(gens), to_multiset(lattice, motif), to_vec(point));
    return py::make_tuple(c.open_count, c.closed_count);
  }, py::arg("generators"), py::arg("lattice"), py::arg("point"), py::arg("motif") = py::none(),
     "(open, closed) number of translates covering the point.");

  m.def("verify_tiling", [](const py::sequence& gens, const py::sequence& lattice, std::size_t k,
                            std::optional<py::sequence> motif, std::size_t samples, std::uint64_t seed) {
    SamplePlan plan;
    plan.seed = seed;
    plan.n_samples = samples;
    auto cert = verify_k_fold(to_zonotope(gens), to_multiset(lattice, motif), k, plan);
    return from_json(certificate_to_json(cert));
  }, py::arg("generators"), py::arg("lattice"), py::arg("k") = 1, py::arg("motif") = py::none(),
     py::arg("samples") = 1000, py::arg("seed") = 0);

  m.def("wheel", [](const py::sequence& gens, const py::sequence& lattice, std::size_t belt, std::size_t k,
                    std::optional<py::sequence> motif, std::size_t points, std::uint64_t seed) {
    WheelAnalyzer w(to_zonotope(gens), to_multiset(lattice, motif), belt);
    py::list out;
    for (const auto& wp : w.sample_proper_points(points, seed)) {
      Json j = wheel_report_to_json(w.check_balance(k, wp));
      auto pb = w.check_phi_bound(wp);
      j["phi_bound"] = pb.bound;
      j["phi_bound_holds"] = pb.holds;
      out.append(from_json(j));
    }
    return out;
  }, py::arg("generators"), py::arg("lattice"), py::arg("belt"), py::arg("k") = 1,
     py::arg("motif") = py::none(), py::arg("points") = 10, py::arg("seed") = 0,
     "Balance reports at sampled proper points on one belt.");

  m.def("evidence", [](std::size_t trials, std::uint64_t seed, std::size_t samples, std::size_t lattices_per_k,
                       std::size_t max_k, bool fixed_families) {
    EvidenceConfig c;
    c.trials = trials;
    c.seed = seed;
    c.samples = samples;
    c.lattices_per_k = lattices_per_k;
    c.max_k = max_k;
    c.fixed_families = fixed_families;
    return from_json(evidence_to_json(run_evidence(c)));
  }, py::arg("trials") = 100, py::arg("seed") = 1, py::arg("samples") = 200, py::arg("lattices_per_k") = 2,
     py::arg("max_k") = 6, py::arg("fixed_families") = true);

  m.def("load_fixture", [](const std::string& path) { return from_json(fixture_to_json(load_fixture(path))); },
        py::arg("path"));

  m.def("to_obj", [](const py::sequence& gens, const std::string& name) { return to_obj(to_zonotope(gens), name); },
        py::arg("generators"), py::arg("name") = "zonotope");

  m.def("belt_bound", &belt_bound, py::arg("k"));
  m.attr("SCHEMA_VERSION") = kSchemaVersion;
}
