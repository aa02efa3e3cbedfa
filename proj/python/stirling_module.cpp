#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stirling/cli.hpp"
#include "stirling/congruences.hpp"
#include "stirling/numeric.hpp"
#include "stirling/parity.hpp"
#include "stirling/stirling_numbers.hpp"
#include "stirling/stirling_poly.hpp"

namespace py = pybind11;
using namespace stirling;

namespace {

py::object to_py(const Integer& v) {
  if (v.fits_int64()) return py::int_(v.to_int64());
  return py::module_::import("builtins").attr("int")(v.to_string());
}

py::object to_py(const Rational& v) {
  return py::module_::import("fractions").attr("Fraction")(to_py(v.numerator()), to_py(v.denominator()));
}

// Accepts int, fractions.Fraction or an "a/b" string.
Rational from_py(const py::handle& obj) { return Rational::parse(py::str(obj).cast<std::string>()); }

template <typename T>
py::list to_py_list(const std::vector<T>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

py::list poly_list(const IntPolynomial& p) { return to_py_list(p.coefficients()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Stirling numbers, Stirling functions, parity tapestry and Wilson-type congruences";

  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_ArithmeticError);

  // numeric foundation
  m.def("binomial", [](std::int64_t n, std::int64_t k) { return to_py(binomial(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("falling_factorial", [](py::object z, std::int64_t k) { return to_py(falling_factorial(from_py(z), k)); },
        py::arg("z"), py::arg("k"));
  m.def("nu_p", [](py::object p, py::object n) {
    return nu_p(Integer::parse(py::str(p).cast<std::string>()), Integer::parse(py::str(n).cast<std::string>()));
  }, py::arg("p"), py::arg("n"));
  m.def("e_map", &e_map, py::arg("n"));
  m.def("ell", &ell, py::arg("n"));
  m.def("msb_position", [](py::object n) { return msb_position(Integer::parse(py::str(n).cast<std::string>())); },
        py::arg("n"));

  // Stirling numbers
  m.def("stirling2", [](std::int64_t a, std::int64_t b) { return to_py(stirling2(a, b)); }, py::arg("m"), py::arg("n"));
  m.def("stirling2_by_sum", [](std::int64_t a, std::int64_t b) { return to_py(stirling2_by_sum(a, b)); },
        py::arg("m"), py::arg("n"));
  m.def("stirling1_signed", [](std::int64_t n, std::int64_t k) { return to_py(stirling1_signed(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("b_number", [](std::int64_t a, std::int64_t b) { return to_py(b_number(a, b)); }, py::arg("m"), py::arg("n"));
  m.def("stirling2_unrolled", [](std::int64_t n, std::int64_t d, std::int64_t k) {
    return to_py(stirling2_unrolled(n, d, k));
  }, py::arg("n"), py::arg("d"), py::arg("k"));

  // Stirling functions
  m.def("p_polynomial", [](std::int64_t a, std::int64_t b) { return poly_list(p_polynomial(a, b)); },
        py::arg("m"), py::arg("n"));
  m.def("stirling_function_poly", [](std::int64_t a, std::int64_t b) { return poly_list(stirling_function_poly(a, b)); },
        py::arg("m"), py::arg("n"));
  m.def("eval_poly", [](std::int64_t a, std::int64_t b, py::object z) {
    return to_py(stirling_function_poly(a, b).evaluate(from_py(z)));
  }, py::arg("m"), py::arg("n"), py::arg("z"));
  m.def("eval_definition", [](std::int64_t a, std::int64_t b, py::object z) {
    return to_py(eval_definition(a, b, from_py(z)));
  }, py::arg("m"), py::arg("n"), py::arg("z"));
  m.def("kth_derivative", [](std::int64_t a, std::int64_t b, std::int64_t k) {
    const Derivative d = kth_derivative(a, b, k);
    return py::make_tuple(poly_list(d.poly), d.degenerate);
  }, py::arg("m"), py::arg("n"), py::arg("k"));
  m.def("gould_expansion", [](std::int64_t a, std::int64_t b) { return to_py_list(gould_expansion(a, b)); },
        py::arg("m"), py::arg("n"));
  m.def("convolution_check", [](std::int64_t a, std::int64_t b, std::int64_t j) {
    const auto [lhs, rhs] = convolution_check(a, b, j);
    return py::make_tuple(to_py(lhs), to_py(rhs));
  }, py::arg("m"), py::arg("n"), py::arg("j"));
  m.def("recenter_at_half_n", [](std::int64_t a, std::int64_t b) { return to_py_list(recenter_at_half_n(a, b)); },
        py::arg("m"), py::arg("n"));
  m.def("v_number", [](std::int64_t a, std::int64_t b) { return to_py(v_number(a, b)); }, py::arg("m"), py::arg("n"));
  m.def("reconstruct_from_v", [](std::int64_t a, std::int64_t b) { return to_py(reconstruct_from_v(a, b)); },
        py::arg("m"), py::arg("n"));
  m.def("real_roots", [](std::int64_t a, std::int64_t b) {
    const RootClassification r = real_roots(a, b);
    py::dict out;
    out["kind"] = std::string(to_string(r.kind));
    out["simple_certified"] = r.simple_certified;
    out["roots"] = to_py_list(r.roots);
    return out;
  }, py::arg("m"), py::arg("n"));

  // parity
  m.def("parity_even_d", &parity_even_d, py::arg("m"), py::arg("n"));
  m.def("ell_reduce_parity", &ell_reduce_parity, py::arg("m"), py::arg("n"));
  m.def("parity_recurrence_check", &parity_recurrence_check, py::arg("n"), py::arg("d"));
  m.def("build_tapestry", [](std::size_t N) {
    const ParityMatrix p = build_tapestry(N);
    std::vector<std::vector<int>> rows(p.size(), std::vector<int>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) rows[i][j] = p.at(i, j);
    return rows;
  }, py::arg("N"));
  m.def("tapestry_det_mod2", [](std::size_t N) { return det_mod2(build_tapestry(N)); }, py::arg("N"));
  m.def("gasket_pbm", [](std::size_t N) {
    std::ostringstream os;
    write_pbm(os, build_tapestry_kummer(N));
    return os.str();
  }, py::arg("N"));
  m.def("row_period", &row_period, py::arg("i"));
  m.def("column_period", &column_period, py::arg("j"));
  m.def("reduced_indices", [](std::uint64_t i, std::uint64_t j, const std::string& order) {
    if (order != "row" && order != "column") throw std::invalid_argument("order must be 'row' or 'column'");
    const IndexPair r = reduced_indices(i, j, order == "row" ? ReductionOrder::RowFirst : ReductionOrder::ColumnFirst);
    return py::make_tuple(r.i, r.j);
  }, py::arg("i"), py::arg("j"), py::arg("order") = "row");
  m.def("parity_frequency", [](std::uint64_t i) { return parity_frequency(i).bits; }, py::arg("i"));

  // congruences
  m.def("valuation_bound", [](std::int64_t p, std::int64_t a, std::int64_t b) {
    const ValuationBound v = valuation_bound(p, a, b);
    py::dict out;
    out["p"] = v.p;
    out["bound"] = v.bound;
    out["actual"] = v.actual;
    return out;
  }, py::arg("p"), py::arg("m"), py::arg("n"));
  m.def("classify_primality_odd_d", [](std::int64_t a, std::int64_t b) {
    const OddDPrimality r = classify_primality_odd_d(a, b);
    return py::make_tuple(std::string(to_string(r.kind)), r.witness ? to_py(*r.witness) : py::none());
  }, py::arg("m"), py::arg("n"));
  m.def("wilson_check", &wilson_check, py::arg("p"), py::arg("n"));
  m.def("is_prime_wilson", [](std::int64_t p, std::int64_t n_max) {
    const WilsonReport r = is_prime_wilson(p, n_max);
    py::dict out;
    out["p"] = r.p;
    out["checked_n"] = r.checked_n;
    out["all_passed"] = r.all_passed;
    out["first_failure"] = r.first_failure ? py::object(py::int_(*r.first_failure)) : py::none();
    return out;
  }, py::arg("p"), py::arg("n_max") = 1);
  m.def("wilson_factorial_residue", [](std::int64_t p, std::int64_t n, std::int64_t k) {
    const FactorialResidue r = wilson_factorial_residue(p, n, k);
    return py::make_tuple(r.residue, r.expected);
  }, py::arg("p"), py::arg("n"), py::arg("k"));
  m.def("shifted_row_vanishes", &shifted_row_vanishes, py::arg("p"), py::arg("n"), py::arg("k"));

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command-line front end in-process; returns (exit_code, stdout, stderr).");
}
