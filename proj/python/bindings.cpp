#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropdet/tropdet.hpp"

namespace py = pybind11;
using namespace tropical;

namespace {

using Array = py::array_t<Entry, py::array::c_style | py::array::forcecast>;

IntMatrix to_matrix(const Array& a) {
  if (a.ndim() != 2) throw Error(Errc::InvalidArgument, "expected a 2-D array");
  const auto rows = static_cast<std::size_t>(a.shape(0));
  const auto cols = static_cast<std::size_t>(a.shape(1));
  return IntMatrix(rows, cols, std::vector<Entry>(a.data(), a.data() + a.size()));
}

Array to_array(const IntMatrix& m) {
  Array out({m.rows(), m.cols()});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

py::list cells_list(const Transversal& t) {
  py::list cells;
  for (const Cell& c : t.cells) cells.append(py::make_tuple(c.row, c.col));
  return cells;
}

py::tuple transversal_tuple(const Transversal& t) {
  return py::make_tuple(t.value, cells_list(t));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tropical determinant bounds on integer transportation polytopes";

  py::register_exception<Error>(m, "TropdetError", PyExc_ValueError);

  py::class_<ProblemParams>(m, "ProblemParams")
      .def_readonly("k", &ProblemParams::k)
      .def_readonly("l", &ProblemParams::l)
      .def_readonly("m", &ProblemParams::m)
      .def_readonly("n", &ProblemParams::n)
      .def_readonly("q", &ProblemParams::q)
      .def_readonly("r", &ProblemParams::r)
      .def_readonly("rows", &ProblemParams::rows)
      .def_readonly("cols", &ProblemParams::cols)
      .def_readonly("row_sum", &ProblemParams::row_sum)
      .def_readonly("col_sum", &ProblemParams::col_sum)
      .def("__repr__", [](const ProblemParams& p) {
        return "ProblemParams(k=" + std::to_string(p.k) + ", l=" + std::to_string(p.l) +
               ", m=" + std::to_string(p.m) + ", n=" + std::to_string(p.n) + ")";
      });

  m.def("derive_params", &derive_params, py::arg("k"), py::arg("l"), py::arg("m"),
        py::arg("n"));

  py::class_<MembershipReport>(m, "MembershipReport")
      .def_readonly("is_member", &MembershipReport::is_member)
      .def_property_readonly("status",
                             [](const MembershipReport& r) { return to_string(r.status); })
      .def_readonly("first_bad_row", &MembershipReport::first_bad_row)
      .def_readonly("first_bad_col", &MembershipReport::first_bad_col)
      .def_readonly("expected_row_sum", &MembershipReport::expected_row_sum)
      .def_readonly("expected_col_sum", &MembershipReport::expected_col_sum);

  m.def("validate_membership",
        [](const Array& a, const ProblemParams& p) { return validate_membership(to_matrix(a), p); });
  m.def("row_sums", [](const Array& a) { return row_sums(to_matrix(a)); });
  m.def("col_sums", [](const Array& a) { return col_sums(to_matrix(a)); });
  m.def("parse_matrix", [](const std::string& text) { return to_array(parse_matrix(text)); });
  m.def("format_matrix", [](const Array& a) { return format_matrix(to_matrix(a)); });

  m.def("tdet", [](const Array& a) { return transversal_tuple(tdet(to_matrix(a))); },
        "Largest transversal sum; returns (value, [(row, col), ...]).");
  m.def("tropdet", [](const Array& a) { return transversal_tuple(tropdet(to_matrix(a))); },
        "Smallest transversal sum; returns (value, [(row, col), ...]).");
  m.def("tdet_bruteforce",
        [](const Array& a, bool minimize, std::uint64_t cap) {
          return tdet_bruteforce(to_matrix(a), minimize, cap);
        },
        py::arg("a"), py::arg("minimize") = false, py::arg("cap") = kDefaultBruteForceCap);
  m.def("threshold_transversal_exists", [](const Array& a, Entry threshold) {
    return threshold_transversal_exists(to_matrix(a), threshold);
  });
  m.def("max_low_block_dims", [](const Array& a, Entry threshold) {
    return max_low_block_dims(to_matrix(a), threshold);
  });
  m.def("sorting_cost", [](const Array& a) { return sorting_cost(to_matrix(a)); });

  py::class_<XYSolution>(m, "XYSolution")
      .def_readonly("x", &XYSolution::x)
      .def_readonly("y", &XYSolution::y)
      .def_readonly("sum", &XYSolution::sum)
      .def_readonly("feasible_witness_used", &XYSolution::feasible_witness_used);

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("params", &BoundReport::params)
      .def_readonly("xy", &BoundReport::xy)
      .def_readonly("L", &BoundReport::lower)
      .def_readonly("U", &BoundReport::upper)
      .def_property_readonly("lower_regime",
                             [](const BoundReport& b) { return to_string(b.lower_regime); })
      .def_property_readonly("upper_regime",
                             [](const BoundReport& b) { return to_string(b.upper_regime); });

  m.def("solve_xy", &solve_xy);
  m.def("lower_bound", &lower_bound);
  m.def("upper_bound", &upper_bound);
  m.def("analyze_bounds", &analyze_bounds);
  m.def("lower_bound_corollaries", &lower_bound_corollaries);
  m.def("dhs_x", [](const ProblemParams& p) {
    const DhsSolution s = dhs_x(p);
    return py::make_tuple(s.x, s.parity == DhsParity::Equal ? "equal" : "off_by_one",
                          s.lower);
  });

  m.def("construct_lower_uniform",
        [](const ProblemParams& p) { return to_array(construct_lower_uniform(p)); });
  m.def("construct_lower_blocks", [](const ProblemParams& p, Int x, Int y) {
    return to_array(construct_lower_blocks(p, x, y));
  });
  m.def("construct_lower", [](const ProblemParams& p) { return to_array(construct_lower(p)); });
  m.def("construct_upper", [](const ProblemParams& p) { return to_array(construct_upper(p)); });

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("params", &VerificationReport::params)
      .def_readonly("points_enumerated", &VerificationReport::points_enumerated)
      .def_readonly("oracle_min_tdet", &VerificationReport::oracle_min_tdet)
      .def_readonly("oracle_max_tropdet", &VerificationReport::oracle_max_tropdet)
      .def_readonly("L", &VerificationReport::formula_lower)
      .def_readonly("U", &VerificationReport::formula_upper)
      .def_readonly("lower_match", &VerificationReport::lower_match)
      .def_readonly("upper_match", &VerificationReport::upper_match)
      .def_property_readonly("argmin_example",
                             [](const VerificationReport& v) { return to_array(*v.argmin_example); })
      .def_property_readonly("argmax_example",
                             [](const VerificationReport& v) { return to_array(*v.argmax_example); });

  m.def("count_points", &count_points, py::arg("p"), py::arg("cap") = kDefaultPointCap);
  m.def("verify_bounds", &verify_bounds, py::arg("p"), py::arg("cap") = kDefaultPointCap,
        py::call_guard<py::gil_scoped_release>());
}
