#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wfatlas/birational.hpp"
#include "wfatlas/classify.hpp"
#include "wfatlas/cohomology.hpp"
#include "wfatlas/constructors.hpp"
#include "wfatlas/divisors.hpp"
#include "wfatlas/error.hpp"
#include "wfatlas/intersection.hpp"
#include "wfatlas/isomorphism.hpp"
#include "wfatlas/parallel.hpp"

namespace py = pybind11;
using namespace wfatlas;

namespace {

py::int_ to_py(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

Integer from_py(const py::handle& h) { return Integer(py::str(h.cast<py::int_>()).cast<std::string>()); }

py::list to_py(const IntVector& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::list to_py(const std::vector<IntVector>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(to_py(v));
  return out;
}

Fan fan_from_lists(std::size_t dim, const py::sequence& rays, const std::vector<IndexSet>& cones) {
  std::vector<IntVector> rs;
  for (const auto& r : rays) {
    IntVector v;
    for (const auto& x : r) v.push_back(from_py(x));
    rs.push_back(std::move(v));
  }
  return make_fan(dim, std::move(rs), cones, true);
}

py::dict relation_dict(const PrimitiveRelation& r) {
  py::dict d;
  d["collection"] = r.collection;
  d["sigma"] = r.sigma;
  py::list coeffs;
  for (const auto& c : r.coefficients) coeffs.append(to_py(c));
  d["coefficients"] = coeffs;
  d["degree"] = to_py(r.degree);
  return d;
}

py::dict move_dict(const MoveRecord& m) {
  py::dict d;
  d["kind"] = m.kind == MoveKind::Flop ? "flop" : "blowdown";
  d["collection"] = m.collection;
  d["label"] = m.label;
  if (m.kind == MoveKind::Blowdown) {
    d["regular"] = m.regular;
    d["multiplicity"] = to_py(m.multiplicity);
    d["center_dim"] = m.center_dim;
  } else {
    d["self_flop"] = m.self_flop;
  }
  d["result_rank"] = m.result_rank;
  d["result"] = m.result;
  return d;
}

py::dict record_dict(const VarietyRecord& r) {
  py::dict d;
  d["id"] = r.id;
  d["family"] = to_string(r.family);
  d["params"] = r.params;
  d["c1_top"] = to_py(r.c1_top);
  d["c1sq_c2"] = to_py(r.c1sq_c2);
  d["h0_tangent"] = to_py(r.h0_tangent);
  d["fano"] = r.fano;
  d["h1_omega1"] = to_py(r.h1_omega1);
  d["moves"] = r.moves;
  d["fan"] = r.fan;
  return d;
}

Fan construct(const std::string& family, const std::string& params) {
  if (family == "kleinschmidt" || family == "kl") return kleinschmidt(parse_kleinschmidt(params));
  if (family == "pb") return projective_bundle(parse_projective_bundle(params));
  if (family == "batyrev" || family == "bc") return batyrev(parse_batyrev(params));
  throw Error("unknown family '" + family + "'");
}

}  // namespace

PYBIND11_MODULE(_wfatlas, m) {
  m.doc() = "Exact toric geometry of smooth weak Fano varieties of Picard rank 2 and 3.";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", error);

  py::class_<Fan>(m, "Fan")
      .def(py::init(&fan_from_lists), py::arg("dim"), py::arg("rays"), py::arg("max_cones"))
      .def_static("from_json", &fan_from_json)
      .def("to_json", [](const Fan& f) { return to_json(f); })
      .def_property_readonly("dim", &Fan::dim)
      .def_property_readonly("num_rays", &Fan::num_rays)
      .def_property_readonly("rays", [](const Fan& f) { return to_py(f.rays()); })
      .def_property_readonly("max_cones", &Fan::max_cones)
      .def_property_readonly("picard_rank", [](const Fan& f) { return picard_rank(f); })
      .def("is_smooth", &Fan::is_smooth)
      .def("is_complete", &Fan::is_complete)
      .def("is_cone", py::overload_cast<const IndexSet&>(&Fan::is_cone, py::const_))
      .def("primitive_collections", &Fan::primitive_collections)
      .def("primitive_relations",
           [](const Fan& f) {
             py::list out;
             for (const auto& r : f.primitive_relations()) out.append(relation_dict(r));
             return out;
           })
      .def("__eq__", [](const Fan& a, const Fan& b) { return equal_up_to_reindexing(a, b); })
      .def("__repr__", [](const Fan& f) { return "Fan(" + to_json(f) + ")"; });

  m.def("construct", &construct, py::arg("family"), py::arg("params"));
  m.def("kleinschmidt", [](const std::string& p) { return kleinschmidt(parse_kleinschmidt(p)); });
  m.def("projective_bundle", [](const std::string& p) { return projective_bundle(parse_projective_bundle(p)); });
  m.def("batyrev", [](const std::string& p) { return batyrev(parse_batyrev(p)); });

  m.def("is_fano", &is_fano);
  m.def("is_weak_fano", &is_weak_fano);
  m.def("is_extremal", &is_extremal, py::arg("fan"), py::arg("collection"));
  m.def("c1_top", [](const Fan& f) { return to_py(c1_top(f)); });
  m.def("c1sq_c2", [](const Fan& f) { return to_py(c1sq_c2(f)); });
  m.def("top_chern_number", [](const Fan& f) { return to_py(top_chern_number(f)); });
  m.def("h0_tangent", [](const Fan& f) { return to_py(h0_tangent(f)); });
  m.def("h1_omega1_anticanonical", [](const Fan& f) { return to_py(h1_omega1_anticanonical(f)); });
  m.def("bott_converse_check", [](const Fan& f) {
    const auto r = bott_converse_check(f);
    py::dict d;
    d["fano"] = r.fano;
    d["wall_collision"] = r.wall_collision;
    d["h1_omega1"] = to_py(r.h1_omega1);
    return d;
  });

  m.def("are_isomorphic", [](const Fan& a, const Fan& b) { return are_isomorphic(a, b).has_value(); });
  m.def("find_isomorphism", [](const Fan& a, const Fan& b) -> py::object {
    const auto iso = find_isomorphism(a, b);
    if (!iso) return py::none();
    py::list rows;
    for (std::size_t r = 0; r < iso->matrix.rows(); ++r) {
      py::list row;
      for (std::size_t c = 0; c < iso->matrix.cols(); ++c) row.append(to_py(iso->matrix(r, c)));
      rows.append(row);
    }
    return rows;
  });

  m.def("blowdown", [](const Fan& f, const IndexSet& p) {
    const auto b = blowdown(f, p);
    py::dict d;
    d["ray"] = b.ray;
    d["multiplicity"] = to_py(b.multiplicity);
    d["regular"] = b.regular;
    d["result"] = b.result;
    if (b.result.num_rays() == b.result.dim() + 1) {
      py::list w;
      for (const auto& q : weighted_projective_weights(b.result)) w.append(to_py(q));
      d["weights"] = w;
    }
    return d;
  }, py::arg("fan"), py::arg("collection"));
  m.def("flop", [](const Fan& f, const IndexSet& p, bool formal) {
    const auto fl = flop(f, p, formal);
    py::dict d;
    d["targets"] = fl.targets;
    d["intermediate"] = fl.intermediate;
    d["result"] = fl.result;
    return d;
  }, py::arg("fan"), py::arg("collection"), py::arg("formal") = false);
  m.def("enumerate_moves", [](const Fan& f) {
    py::list out;
    for (const auto& mv : enumerate_moves(f).moves) out.append(move_dict(mv));
    return out;
  });

  m.def("classify", [](int d, int rank, bool verify) {
    py::list out;
    const auto run = [&] {
      py::gil_scoped_release release;
      return classify(d, rank, verify);
    }();
    for (const auto& r : run.records) out.append(record_dict(r));
    return out;
  }, py::arg("dim"), py::arg("rank"), py::arg("verify") = false);
  m.def("export_table", [](int d, int rank, const std::string& format) {
    const auto fmt = parse_table_format(format);
    py::gil_scoped_release release;
    return export_table(classify(d, rank), fmt);
  }, py::arg("dim"), py::arg("rank"), py::arg("format") = "csv");

  m.def("set_thread_limit", &set_thread_limit);
  m.attr("__version__") = wfatlas_version();
}
