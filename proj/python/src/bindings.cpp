/*
 * Copyright 2026 The commfibre Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Python bindings. Field elements cross the boundary as integer codes
// (the coordinate vector read as a base-p number, constant term most
// significant); exact rationals become fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commfibre/algebra.hpp"
#include "commfibre/enumeration.hpp"
#include "commfibre/error.hpp"
#include "commfibre/io.hpp"
#include "commfibre/oracle.hpp"
#include "commfibre/zeta.hpp"

namespace py = pybind11;
using namespace commfibre;

namespace {

py::object to_py(const Integer& z) {
  const std::string s = z.get_str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_py(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(Integer(r.get_num())), to_py(Integer(r.get_den())));
}

Vec to_vec(const Field& f, const std::vector<std::uint32_t>& codes) {
  Vec v;
  v.reserve(codes.size());
  for (auto c : codes) v.push_back(f.from_code(c));
  return v;
}

std::vector<std::uint32_t> to_codes(std::span<const FieldElement> v) {
  std::vector<std::uint32_t> out;
  out.reserve(v.size());
  for (auto e : v) out.push_back(e.code);
  return out;
}

Vec checked_g(const LiePresentation& pres, const std::vector<std::uint32_t>& g) {
  if (g.size() != pres.b)
    throw Error(ErrorCode::DimensionMismatch, "g needs " + std::to_string(pres.b) + " coordinates");
  return to_vec(pres.field, g);
}

EnumerationOptions enum_opts(unsigned threads, std::uint64_t budget) {
  EnumerationOptions o;
  o.threads = threads;
  o.budget = budget;
  return o;
}

py::list classes_py(const Classification& cls) {
  py::list out;
  for (const auto& c : cls.classes) {
    py::dict d;
    d["representative"] = to_codes(c.representative);
    d["K"] = c.K;
    d["V"] = c.V;
    d["multiplicity"] = c.multiplicity;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fibres of commutator word maps over finite p-groups";
  m.attr("__version__") = std::string(kVersion.substr(kVersion.find(' ') + 1));

  // Owned by the module for the life of the interpreter.
  static py::handle error_type = py::exception<Error>(m, "CommfibreError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(py::str(e.what()));
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<Field>(m, "Field")
      .def(py::init([](int p, int k, std::optional<std::vector<int>> modulus) { return Field::make(p, k, modulus); }),
           py::arg("p"), py::arg("k") = 1, py::arg("modulus") = std::nullopt)
      .def_property_readonly("p", &Field::p)
      .def_property_readonly("k", &Field::k)
      .def_property_readonly("q", &Field::q)
      .def_property_readonly("modulus", &Field::modulus)
      .def("element", [](const Field& f, const std::vector<int>& coords) { return f.from_coords(coords).code; })
      .def("coords", [](const Field& f, std::uint32_t c) { return f.coords(f.from_code(c)); })
      .def("add", [](const Field& f, std::uint32_t a, std::uint32_t b) { return f.add(f.from_code(a), f.from_code(b)).code; })
      .def("mul", [](const Field& f, std::uint32_t a, std::uint32_t b) { return f.mul(f.from_code(a), f.from_code(b)).code; })
      .def("inv", [](const Field& f, std::uint32_t a) { return f.inv(f.from_code(a)).code; })
      .def("__eq__", [](const Field& a, const Field& b) { return a == b; })
      .def("__repr__", [](const Field& f) {
        return "Field(p=" + std::to_string(f.p()) + ", k=" + std::to_string(f.k()) + ")";
      });

  py::class_<FullLieAlgebra>(m, "LieAlgebra")
      .def(py::init<Field, std::vector<std::string>>(), py::arg("field"), py::arg("names"))
      .def_property_readonly("field", &FullLieAlgebra::field)
      .def_property_readonly("dim", &FullLieAlgebra::dim)
      .def_property_readonly("names", &FullLieAlgebra::names)
      .def("set_bracket", [](FullLieAlgebra& a, std::size_t i, std::size_t j, const std::vector<std::uint32_t>& img) {
        a.set_bracket(i, j, to_vec(a.field(), img));
      })
      .def("bracket", [](const FullLieAlgebra& a, std::size_t i, std::size_t j) {
        if (i >= a.dim() || j >= a.dim()) throw Error(ErrorCode::BadParam, "index out of range");
        return to_codes(a.basis_bracket(i, j));
      })
      .def("to_text", &format_algebra_file)
      .def("__eq__", [](const FullLieAlgebra& a, const FullLieAlgebra& b) { return a == b; });

  py::class_<LiePresentation>(m, "Presentation")
      .def_property_readonly("field", [](const LiePresentation& p) { return p.field; })
      .def_readonly("n", &LiePresentation::n)
      .def_readonly("a", &LiePresentation::a)
      .def_readonly("b", &LiePresentation::b)
      .def_readonly("nilpotency_class", &LiePresentation::nilpotency_class)
      .def("structure_constant", [](const LiePresentation& p, std::size_t i, std::size_t j, std::size_t k) {
        if (i >= p.a || j >= p.a || k >= p.b) throw Error(ErrorCode::BadParam, "index out of range");
        return p.structure_constant(i, j, k).code;
      });

  m.def("builtin", [](const std::string& name, int p, int k, std::optional<long long> alpha) {
    return builtin(name, Field::make(p, k), alpha);
  }, py::arg("name"), py::arg("p") = 3, py::arg("k") = 1, py::arg("alpha") = std::nullopt);
  m.def("builtin_names", [] {
    std::vector<std::string> out;
    for (const auto& b : builtin_catalog()) out.push_back(b.name);
    return out;
  });
  m.def("parse", &parse_algebra_file, py::arg("text"));
  m.def("direct_sum", &direct_sum);
  m.def("reduce", &reduce);
  m.def("validate", [](const FullLieAlgebra& a) {
    const auto r = validate(a);
    py::dict d;
    d["ok"] = r.ok();
    d["jacobi_ok"] = r.jacobi_ok;
    d["nilpotent"] = r.nilpotent;
    d["nilpotency_class"] = r.nilpotency_class;
    d["center_dim"] = r.center_basis.size();
    d["derived_dim"] = r.derived_basis.size();
    return d;
  });

  m.def("rank_profile", [](const LiePresentation& p, unsigned threads, std::uint64_t budget) {
    return rank_profile(p, enum_opts(threads, budget)).R;
  }, py::arg("pres"), py::arg("threads") = 0, py::arg("budget") = EnumerationOptions{}.budget);
  m.def("kv_vectors", [](const LiePresentation& p, const std::vector<std::uint32_t>& g) {
    const auto kv = kv_vectors(p, checked_g(p, g));
    return py::make_tuple(kv.K, kv.V);
  });
  m.def("classify", [](const LiePresentation& p) { return classes_py(classify_elements(p)); });

  m.def("zeta", [](const LiePresentation& p, const std::vector<std::uint32_t>& g, unsigned s) {
    return to_py(zeta_total(p, checked_g(p, g), s).total);
  }, py::arg("pres"), py::arg("g"), py::arg("s"));
  m.def("zeta_strata", [](const LiePresentation& p, const std::vector<std::uint32_t>& g, unsigned s) {
    py::list out;
    for (const auto& z : zeta_total(p, checked_g(p, g), s).strata) out.append(to_py(z));
    return out;
  }, py::arg("pres"), py::arg("g"), py::arg("s"));
  m.def("class_number", [](const LiePresentation& p) { return to_py(class_number(p)); });
  m.def("fibre_count", [](const LiePresentation& p, const std::vector<std::uint32_t>& g, unsigned t) {
    return to_py(fibre_count(p, checked_g(p, g), t));
  }, py::arg("pres"), py::arg("g"), py::arg("t"));
  m.def("fibre_prob", [](const LiePresentation& p, const std::vector<std::uint32_t>& g, unsigned t) {
    return to_py(fibre_prob(p, checked_g(p, g), t));
  }, py::arg("pres"), py::arg("g"), py::arg("t"));
  m.def("degree_counts", [](const LiePresentation& p) {
    py::list out;
    for (const auto& d : degree_counts(p, rank_profile(p))) out.append(to_py(d));
    return out;
  });
  m.def("uniformity_bound_squared", [](const LiePresentation& p, unsigned t) {
    return to_py(uniformity_bound_squared(p, degree_counts(p, rank_profile(p)), t));
  }, py::arg("pres"), py::arg("t"));
  m.def("sharp_bound_squared", [](const LiePresentation& p, unsigned t) {
    return to_py(sharp_bound_squared(p, degree_counts(p, rank_profile(p)), t));
  }, py::arg("pres"), py::arg("t"));
  m.def("l1_distance", [](const LiePresentation& p, unsigned t) {
    return to_py(l1_distance(p, classify_elements(p), t));
  }, py::arg("pres"), py::arg("t"));

  m.def("conjugacy_count", [](const FullLieAlgebra& a) {
    py::gil_scoped_release release;
    return conjugacy_count(a);
  });
  m.def("brute_fibres", [](const FullLieAlgebra& a, unsigned t) {
    FibreTable table;
    {
      py::gil_scoped_release release;
      table = brute_fibres(a, t);
    }
    py::dict out;
    const std::size_t n = a.dim();
    for (const auto& [idx, count] : table.counts)
      out[py::tuple(py::cast(to_codes(vector_at(a.field(), n, idx))))] = to_py(Integer(count));
    return out;
  }, py::arg("algebra"), py::arg("t"));
  m.def("verify", [](const FullLieAlgebra& a, unsigned t_max) {
    ComparisonReport cmp;
    {
      py::gil_scoped_release release;
      cmp = compare(a, t_max);
    }
    py::dict d;
    d["ok"] = cmp.ok();
    d["mismatches"] = cmp.mismatches.size();
    d["class_number_theorem"] = to_py(cmp.theorem_class_number);
    d["class_number_oracle"] = cmp.oracle_class_number;
    return d;
  }, py::arg("algebra"), py::arg("t_max") = 2);
  m.def("analyze_json", [](const FullLieAlgebra& a, const std::vector<unsigned>& ts, bool with_oracle) {
    const auto pres = reduce(a);
    const auto report = analyze(pres, ts);
    std::optional<ComparisonReport> cmp;
    if (with_oracle) cmp = compare(a, *std::max_element(ts.begin(), ts.end()));
    return build_report("python", pres, report, cmp).dump();
  }, py::arg("algebra"), py::arg("ts") = std::vector<unsigned>{1}, py::arg("verify") = false);
}
