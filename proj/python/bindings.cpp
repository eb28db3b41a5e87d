// Copyright 2026 The capax Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "capax/capacity.hpp"
#include "capax/classify.hpp"
#include "capax/credal.hpp"
#include "capax/monad.hpp"
#include "capax/search.hpp"
#include "capax/text_format.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Rat <-> fractions.Fraction. Python ints are accepted; floats are not.
template <>
struct type_caster<capax::Rat> {
 public:
  PYBIND11_TYPE_CASTER(capax::Rat, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (PyFloat_Check(src.ptr())) return false;
    if (PyLong_Check(src.ptr())) {
      value = capax::Rat::parse(py::str(src).cast<std::string>());
      return true;
    }
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
    const py::object num = src.attr("numerator");
    const py::object den = src.attr("denominator");
    if (!PyLong_Check(num.ptr()) || !PyLong_Check(den.ptr())) return false;
    value = capax::Rat::parse(py::str(num).cast<std::string>() + "/" +
                              py::str(den).cast<std::string>());
    return true;
  }

  static handle cast(const capax::Rat& r, return_value_policy, handle) {
    return py::module_::import("fractions").attr("Fraction")(r.str()).release();
  }
};

// Subset <-> frozenset of point indices.
template <>
struct type_caster<capax::Subset> {
 public:
  PYBIND11_TYPE_CASTER(capax::Subset, const_name("frozenset[int]"));

  bool load(handle src, bool) {
    if (!py::isinstance<py::iterable>(src) || py::isinstance<py::str>(src)) return false;
    capax::Subset s;
    for (const py::handle item : py::reinterpret_borrow<py::iterable>(src)) {
      if (!PyLong_Check(item.ptr())) return false;
      const long i = item.cast<long>();
      if (i < 0 || i >= capax::kMaxGroundSize) {
        throw py::index_error("point " + std::to_string(i) + " out of range");
      }
      s = s.with(static_cast<int>(i));
    }
    value = s;
    return true;
  }

  static handle cast(const capax::Subset& s, return_value_policy, handle) {
    py::list members;
    for (int i : s.members()) members.append(i);
    return py::frozenset(members).release();
  }
};

}  // namespace pybind11::detail

namespace capax {
namespace {

Subset checked(Subset a, GroundSet g) {
  if (!a.valid_for(g)) {
    throw py::index_error("subset " + a.str() + " is not within a ground set of size " +
                          std::to_string(g.size()));
  }
  return a;
}

CredalSet vertex_set(int n, const std::vector<std::vector<Rat>>& vertices) {
  const GroundSet g(n);
  std::vector<Measure> ms;
  for (const auto& w : vertices) ms.push_back(Measure::from_weights(g, w));
  return CredalSet::from_vertices(g, std::move(ms));
}

py::object optional_subset(const std::optional<Subset>& s) {
  return s ? py::cast(*s) : py::none();
}

}  // namespace
}  // namespace capax

PYBIND11_MODULE(_capax, m) {
  using namespace capax;
  m.doc() = "Exact capacities, cores, lower envelopes and the capacity monad.";

  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CredalError>(m, "CredalError", PyExc_ValueError);
  py::register_exception<MonadError>(m, "MonadError", PyExc_ValueError);
  py::register_exception<SearchConfigError>(m, "SearchConfigError", PyExc_ValueError);
  py::register_exception<ClassifyError>(m, "ClassifyError", PyExc_RuntimeError);

  py::class_<Capacity>(m, "Capacity")
      .def_static(
          "from_table",
          [](int n, std::vector<Rat> table) {
            return Capacity::from_table(GroundSet(n), std::move(table));
          },
          py::arg("n"), py::arg("table"),
          "Build from a dense table indexed by subset bitmask.")
      .def_static(
          "from_values",
          [](int n, const std::map<Subset, Rat>& values, bool lenient) {
            const GroundSet g(n);
            for (const auto& entry : values) checked(entry.first, g);
            return new_capacity(g, values,
                                lenient ? InputMode::kLenient : InputMode::kStrict);
          },
          py::arg("n"), py::arg("values"), py::arg("lenient") = false,
          "Build from {subset: value}; lenient mode fills gaps by monotone closure.")
      .def_static("parse", [](const std::string& text) { return parse_game(text); })
      .def_property_readonly("n", [](const Capacity& v) { return v.ground().size(); })
      .def("__call__",
           [](const Capacity& v, Subset a) { return v(checked(a, v.ground())); })
      .def("table", &Capacity::table)
      .def("to_text", [](const Capacity& v) { return format_game(v); })
      .def(py::self == py::self)
      .def("__repr__",
           [](const Capacity& v) { return "<Capacity n=" + std::to_string(v.ground().size()) +
                                          " table=" + table_string(v) + ">"; });

  m.def("dirac", [](int x, int n) { return dirac(x, GroundSet(n)); }, py::arg("x"),
        py::arg("n"));
  m.def(
      "unanimity",
      [](Subset t, int n) { return unanimity(checked(t, GroundSet(n)), GroundSet(n)); },
      py::arg("t"), py::arg("n"));
  m.def("mix", &mix, py::arg("a"), py::arg("b"), py::arg("t"),
        "t * a + (1 - t) * b");
  m.def(
      "pushforward",
      [](const std::vector<int>& image, int codomain, const Capacity& v) {
        return pushforward(PointMap(v.ground(), GroundSet(codomain), image), v);
      },
      py::arg("image"), py::arg("codomain"), py::arg("v"));
  m.def(
      "random_monotone",
      [](int n, std::uint64_t seed, int grid) {
        return random_monotone(GroundSet(n), seed, grid);
      },
      py::arg("n"), py::arg("seed"), py::arg("grid") = 4);

  py::class_<ClassReport>(m, "ClassReport")
      .def_readonly("convex", &ClassReport::convex)
      .def_readonly("exact", &ClassReport::exact)
      .def_readonly("totally_balanced", &ClassReport::totally_balanced)
      .def_readonly("balanced", &ClassReport::balanced)
      .def_property_readonly("core_point",
                             [](const ClassReport& r) -> py::object {
                               if (!r.balanced_detail.core_point) return py::none();
                               return py::cast(r.balanced_detail.core_point->weights());
                             })
      .def_property_readonly(
          "exact_failing",
          [](const ClassReport& r) { return optional_subset(r.exact_detail.failing); })
      .def_property_readonly("totally_balanced_failing",
                             [](const ClassReport& r) {
                               return optional_subset(r.totally_balanced_detail.failing);
                             })
      .def("__repr__", [](const ClassReport& r) {
        auto b = [](bool x) { return x ? std::string("True") : std::string("False"); };
        return "<ClassReport convex=" + b(r.convex) + " exact=" + b(r.exact) +
               " totally_balanced=" + b(r.totally_balanced) + " balanced=" + b(r.balanced) +
               ">";
      });

  m.def(
      "classify",
      [](const Capacity& v, int max_n) { return classify_full(v, ClassifyOptions{max_n}); },
      py::arg("v"), py::arg("max_n") = kDefaultClassifyLimit);
  m.def("is_convex", [](const Capacity& v) { return is_convex(v).holds; });
  m.def("is_balanced", [](const Capacity& v) { return is_balanced(v).holds; });
  m.def("is_totally_balanced",
        [](const Capacity& v) { return is_totally_balanced(v).holds; });
  m.def("is_exact", [](const Capacity& v) { return is_exact(v).holds; });
  m.def(
      "bondareva_value",
      [](const Capacity& v, Subset b) { return bondareva_value(v, checked(b, v.ground())); },
      py::arg("v"), py::arg("b"));
  m.def(
      "min_core_value",
      [](const Capacity& v, Subset b) { return min_core_value(v, checked(b, v.ground())); },
      py::arg("v"), py::arg("b"));

  m.def(
      "lower_envelope",
      [](int n, const std::vector<std::vector<Rat>>& vertices) {
        return lower_envelope(vertex_set(n, vertices));
      },
      py::arg("n"), py::arg("vertices"), "Lower envelope of the hull of the given measures.");
  m.def(
      "upper_envelope",
      [](int n, const std::vector<std::vector<Rat>>& vertices) {
        return upper_envelope(vertex_set(n, vertices));
      },
      py::arg("n"), py::arg("vertices"));
  m.def(
      "core_envelope", [](const Capacity& v) { return lower_envelope(core_polytope(v)); },
      py::arg("v"), "Lower envelope of the core.");
  m.def("check_retraction", &check_retraction, py::arg("v"));
  m.def(
      "check_naturality",
      [](const std::vector<int>& image, int codomain, int n,
         const std::vector<std::vector<Rat>>& vertices) {
        const CredalSet a = vertex_set(n, vertices);
        return check_naturality(PointMap(GroundSet(n), GroundSet(codomain), image), a);
      },
      py::arg("image"), py::arg("codomain"), py::arg("n"), py::arg("vertices"));

  m.def(
      "monad_mul",
      [](const std::vector<Capacity>& support, const Capacity& game) {
        if (support.empty()) throw MonadError("support must be nonempty");
        return monad_mul(SecondOrderCapacity(support.front().ground(), support, game));
      },
      py::arg("support"), py::arg("game"));
  m.def(
      "lift_unit",
      [](const Capacity& v) {
        const SecondOrderCapacity c = lift_unit(v);
        return py::make_tuple(c.support(), c.game());
      },
      py::arg("v"), "Returns (support, game) with Dirac supports weighted by v.");

  m.def(
      "search",
      [](const std::string& target, int n, int k, std::uint64_t first, std::uint64_t last,
         int grid, int jobs) {
        if (last < first) throw SearchConfigError("empty seed range");
        SearchConfig cfg;
        cfg.target = parse_target_class(target);
        cfg.n = n;
        cfg.k = k;
        cfg.seed_first = first;
        cfg.seed_count = last - first + 1;
        cfg.grid = grid;
        cfg.jobs = jobs;
        const SearchReport r = [&] {
          py::gil_scoped_release release;
          return closure_search(cfg);
        }();
        py::dict out;
        out["report"] = machine_report(r);
        out["entries"] = r.entries.size();
        out["counterexamples"] = r.counterexamples.size();
        return out;
      },
      py::arg("target"), py::arg("n"), py::arg("k"), py::arg("first"), py::arg("last"),
      py::arg("grid") = 4, py::arg("jobs") = 1,
      "Seeded search over seeds first..last inclusive; returns the machine report.");
}
