#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ftfa/errors.hpp"
#include "ftfa/json_io.hpp"

namespace py = pybind11;
using namespace ftfa;

namespace {

py::int_ int_to_py(const Int& x) {
  std::string s = x.get_str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

Int py_to_int(const py::handle& h) {
  return Int(py::str(h).cast<std::string>());
}

IntMatrix py_to_matrix(const py::sequence& rows) {
  std::vector<IntVec> data;
  size_t cols = 0;
  for (const auto& row : rows) {
    IntVec r;
    for (const auto& x : py::cast<py::sequence>(row)) r.push_back(py_to_int(x));
    cols = r.size();
    data.push_back(std::move(r));
  }
  return IntMatrix::from_rows(std::move(data), cols);
}

py::list matrix_to_py(const IntMatrix& m) {
  py::list out;
  for (size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (size_t j = 0; j < m.cols(); ++j) row.append(int_to_py(m.at(i, j)));
    out.append(std::move(row));
  }
  return out;
}

IntVec py_to_ivec(const py::sequence& xs) {
  IntVec v;
  for (const auto& x : xs) v.push_back(py_to_int(x));
  return v;
}

py::list vec_to_py(const IntVec& v) {
  py::list out;
  for (const Int& x : v) out.append(int_to_py(x));
  return out;
}

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned:
      return py::int_(j.get<int64_t>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const Json& e : j) out.append(json_to_py(e));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      throw Error(errc::bad_input, "unsupported json value");
  }
}

Json py_to_json(const py::handle& h) {
  if (h.is_none()) return Json(nullptr);
  if (py::isinstance<py::bool_>(h)) return Json(h.cast<bool>());
  if (py::isinstance<py::int_>(h)) {
    Int v = py_to_int(h);
    return int_to_json(v);
  }
  if (py::isinstance<py::float_>(h)) return Json(h.cast<double>());
  if (py::isinstance<py::str>(h)) return Json(h.cast<std::string>());
  if (py::isinstance<py::dict>(h)) {
    Json out = Json::object();
    for (const auto& kv : h.cast<py::dict>())
      out[py::str(kv.first).cast<std::string>()] = py_to_json(kv.second);
    return out;
  }
  if (py::isinstance<py::sequence>(h)) {
    Json out = Json::array();
    for (const auto& e : h.cast<py::sequence>()) out.push_back(py_to_json(e));
    return out;
  }
  throw Error(errc::bad_input, "unsupported python value in document");
}

SubgroupBasis basis_from_doc(const py::dict& doc) {
  Json j = py_to_json(doc);
  if (j.contains("generators")) {
    int n = 0, m = 0;
    auto gens = json_to_generators(j, n, m);
    return subgroup_basis(n, m, gens);
  }
  return json_to_basis(j);
}

}  // namespace

PYBIND11_MODULE(_ftfakit, mod) {
  mod.doc() = "subgroup intersection calculus for free times free-abelian groups";

  py::register_exception<Error>(mod, "FtfaError");

  // words
  mod.def("reduce_word", [](const std::string& w) { return Word::from_text(w).text(); });
  mod.def("word_inverse", [](const std::string& w) { return Word::from_text(w).inverse().text(); });
  mod.def("word_mul", [](const std::string& a, const std::string& b) {
    return (Word::from_text(a) * Word::from_text(b)).text();
  });
  mod.def("exponent_vector", [](const std::string& w, int symbols) {
    return vec_to_py(exponent_vector(Word::from_text(w), symbols));
  });

  // exact integer linear algebra
  mod.def("hnf", [](const py::sequence& m) {
    HnfResult h = hnf(py_to_matrix(m));
    py::dict out;
    out["h"] = matrix_to_py(h.h);
    out["u"] = matrix_to_py(h.u);
    out["rank"] = py::int_(h.rank);
    return out;
  });
  mod.def("kernel", [](const py::sequence& m) { return matrix_to_py(kernel_basis(py_to_matrix(m))); });
  mod.def("solve_left", [](const py::sequence& m, const py::sequence& b) -> py::object {
    auto x = solve_left(py_to_matrix(m), py_to_ivec(b));
    if (!x) return py::none();
    return vec_to_py(*x);
  });
  mod.def("lattice_meet", [](const py::sequence& bases, size_t ambient) {
    std::vector<Lattice> ls;
    for (const auto& b : bases)
      ls.push_back(Lattice::from_rows(ambient, py_to_matrix(py::cast<py::sequence>(b))));
    return matrix_to_py(lattice_meet(ls).basis());
  });
  mod.def("preimage", [](const py::sequence& r, const py::sequence& l, size_t ambient) {
    return matrix_to_py(preimage(py_to_matrix(r), Lattice::from_rows(ambient, py_to_matrix(l))).basis());
  });

  // stallings
  mod.def("fold_info", [](const std::vector<std::string>& gens, int rank) {
    std::vector<Word> ws;
    for (const std::string& g : gens) ws.push_back(Word::from_text(g));
    FoldResult f = fold(ws, rank, true);
    py::dict out;
    out["rank"] = py::int_(f.autom.cycle_rank());
    py::list basis, exprs;
    for (const Word& b : f.basis.basis_words) basis.append(b.text());
    for (const Word& e : f.generator_expressions) exprs.append(e.text());
    out["basis"] = std::move(basis);
    out["expressions"] = std::move(exprs);
    return out;
  });

  // subgroups
  mod.def("subgroup_basis", [](const py::dict& doc) { return json_to_py(basis_to_json(basis_from_doc(doc))); });
  mod.def("member", [](const py::dict& doc, const std::string& w, const py::sequence& vec) {
    SubgroupBasis b = basis_from_doc(doc);
    return member(b, {Word::from_text(w), py_to_ivec(vec)});
  });
  mod.def("completion", [](const py::dict& doc, const std::string& w) -> py::object {
    SubgroupBasis b = basis_from_doc(doc);
    auto c = completion(b, Word::from_text(w));
    if (!c) return py::none();
    py::dict out;
    out["point"] = vec_to_py(c->point);
    out["lattice"] = matrix_to_py(c->lattice.basis());
    return out;
  });
  mod.def("strong_join", [](const py::dict& a, const py::dict& b) {
    return json_to_py(basis_to_json(strong_join(basis_from_doc(a), basis_from_doc(b))));
  });
  mod.def("intersect", [](const py::sequence& docs) {
    std::vector<SubgroupBasis> subs;
    for (const auto& d : docs) subs.push_back(basis_from_doc(py::cast<py::dict>(d)));
    IntersectResult res = intersect(subs);
    return json_to_py(intersect_result_to_json(res));
  });

  // configurations
  mod.def("is_howson", [](const py::dict& conf) {
    return is_howson(json_to_configuration(py_to_json(conf)));
  });
  mod.def("obstruction_bound", [](const py::dict& conf) {
    return json_to_py(obstruction_to_json(obstruction_bound(json_to_configuration(py_to_json(conf)))));
  });
  mod.def("realize_ftfa", [](const py::dict& conf) {
    return json_to_py(realization_to_json(realize_ftfa(json_to_configuration(py_to_json(conf)))));
  });
  mod.def("realize_free", [](const py::dict& conf) -> py::object {
    auto r = realize_free(json_to_configuration(py_to_json(conf)));
    if (!r) return py::none();
    return json_to_py(realization_to_json(*r));
  });
  mod.def(
      "verify",
      [](const py::dict& conf, const py::dict& realization, int witness_rank, bool parallel) {
        Configuration c = json_to_configuration(py_to_json(conf));
        Realization r = json_to_realization(py_to_json(realization));
        return json_to_py(report_to_json(verify(c, r, witness_rank, parallel), c));
      },
      py::arg("configuration"), py::arg("realization"), py::arg("witness_rank") = 3,
      py::arg("parallel") = false);

  // oracle
  mod.def("ball", [](const py::dict& spec, int max_len, long max_norm) {
    return json_to_py(ball_to_json(ball(json_to_spec(py_to_json(spec)), max_len, max_norm)));
  });
}
