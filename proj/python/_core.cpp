#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "boundedcf/asymptotics.hpp"
#include "boundedcf/complex_cf.hpp"
#include "boundedcf/count_table.hpp"
#include "boundedcf/enumeration.hpp"
#include "boundedcf/real_cf.hpp"
#include "boundedcf/report.hpp"
#include "boundedcf/spectral.hpp"

namespace py = pybind11;
using namespace boundedcf;

namespace {

// Rationals and big integers cross the boundary as text; the Python side
// wraps them in int / Fraction.
std::vector<std::string> digit_text(const DigitSequence& digits) {
  std::vector<std::string> out;
  out.reserve(digits.size());
  for (const auto& a : digits) out.push_back(a.str());
  return out;
}

DigitSequence parse_digits(const std::vector<std::string>& text) {
  DigitSequence out;
  out.reserve(text.size());
  for (const auto& s : text) out.emplace_back(s);
  return out;
}

std::vector<QuadElement> parse_alphabet(const QuadraticField& field, const std::vector<std::string>& text) {
  std::vector<QuadElement> out;
  for (const auto& s : text) out.push_back(parse_quad(field, s));
  return out;
}

std::vector<std::string> quad_text(const std::vector<QuadElement>& zs) {
  std::vector<std::string> out;
  for (const auto& z : zs) out.push_back(to_string(z));
  return out;
}

std::string dump(const Json& j) { return j.dump(); }

std::string csv_text(const CountTable& table, const std::vector<double>& w_grid) {
  std::ostringstream out;
  write_csv(out, table, w_grid);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bounded-digit continued fractions: exact expansions, enumeration, spectral solver.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("cf_expand", [](const std::string& x) { return digit_text(cf_expand(parse_rational(x))); },
        py::arg("x"));
  m.def("reconstruct", [](const std::vector<std::string>& digits) {
    const auto d = parse_digits(digits);
    return to_string(reconstruct(d));
  }, py::arg("digits"));
  m.def("is_zaremba_denominator", &is_zaremba_denominator, py::arg("n"), py::arg("A"));

  m.def("cf_expand_complex", [](int d, const std::string& z) {
    const QuadraticField field(d);
    return quad_text(cf_expand_complex(field, parse_quad(field, z)));
  }, py::arg("d"), py::arg("z"));
  m.def("reconstruct_complex", [](int d, const std::vector<std::string>& digits) {
    const QuadraticField field(d);
    const auto a = parse_alphabet(field, digits);
    return to_string(reconstruct_complex(field, a));
  }, py::arg("d"), py::arg("digits"));
  m.def("height_squared", [](int d, const std::string& z) {
    const QuadraticField field(d);
    return height_squared(field, parse_quad(field, z)).str();
  }, py::arg("d"), py::arg("z"));
  m.def("default_alphabet", [](int d, long long norm) {
    return quad_text(default_alphabet(QuadraticField(d), norm));
  }, py::arg("d"), py::arg("norm_bound") = 8);

  py::class_<CountTable>(m, "CountTable")
      .def_property_readonly("max_key", &CountTable::max_key)
      .def_property_readonly("has_lengths", &CountTable::has_lengths)
      .def("count", &CountTable::count, py::arg("key"))
      .def("length_count", &CountTable::length_count, py::arg("key"), py::arg("length"))
      .def("weighted", &CountTable::weighted, py::arg("key"), py::arg("w"))
      .def("cumulative", &CountTable::cumulative, py::arg("upto"))
      .def("total", &CountTable::total)
      .def("longest", &CountTable::longest)
      .def("counts", [](const CountTable& t) {
        std::vector<std::uint64_t> out(t.max_key() + 1);
        for (std::uint64_t k = 0; k <= t.max_key(); ++k) out[k] = t.count(k);
        return out;
      })
      .def("to_csv", &csv_text, py::arg("w_grid") = kDefaultWGrid)
      .def("__eq__", [](const CountTable& a, const CountTable& b) { return a == b; });

  m.def("enumerate_real", &enumerate_real, py::arg("A"), py::arg("N"),
        py::arg("collect_lengths") = false, py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("brute_force_real", &brute_force_real, py::arg("A"), py::arg("N"));
  m.def("enumerate_complex", [](int d, const std::vector<std::string>& alphabet, std::uint64_t N,
                                bool collect_lengths, unsigned threads) {
    const QuadraticField field(d);
    const auto a = parse_alphabet(field, alphabet);
    ComplexEnumerationOptions opts;
    opts.collect_lengths = collect_lengths;
    opts.threads = threads;
    py::gil_scoped_release release;
    return enumerate_complex(field, a, N, opts);
  }, py::arg("d"), py::arg("alphabet"), py::arg("N"), py::arg("collect_lengths") = true,
     py::arg("threads") = 1);
  m.def("sigma_count", &sigma_count, py::arg("table"), py::arg("N"));
  m.def("omega_count", &omega_count, py::arg("table"), py::arg("N"));
  m.def("thickened_count", [](const CountTable& t, std::uint64_t N, double gamma) {
    return thickened_count(t, ThickenedWindow::for_gamma(N, gamma));
  }, py::arg("table"), py::arg("N"), py::arg("gamma"));

  m.def("leading_eigenvalue", &leading_eigenvalue, py::arg("A"), py::arg("sigma"),
        py::arg("u") = 0.0, py::arg("m") = 32);
  m.def("solve_dimension", [](std::uint64_t A, double tol, std::size_t mm) {
    return dump(to_json(solve_dimension(A, tol, mm)));
  }, py::arg("A"), py::arg("tol") = kDefaultBisectionTol, py::arg("m") = 32);
  m.def("solve_pole", [](std::uint64_t A, double w, double tol, std::size_t mm) {
    return dump(to_json(solve_pole(A, w, tol, mm)));
  }, py::arg("A"), py::arg("w"), py::arg("tol") = kDefaultBisectionTol, py::arg("m") = 32);

  m.def("fit_exponent", [](const std::vector<std::pair<std::uint64_t, double>>& pts) {
    std::vector<Sample> s;
    for (const auto& [N, c] : pts) s.push_back({N, c});
    return dump(to_json(fit_exponent(s)));
  }, py::arg("samples"));
  m.def("omega_fit", [](const CountTable& t, const std::vector<std::uint64_t>& grid) {
    return dump(to_json(omega_fit(t, grid)));
  }, py::arg("table"), py::arg("grid"));
  m.def("smoothing_experiment", [](const CountTable& t, double delta, double gamma,
                                   const std::vector<std::uint64_t>& grid) {
    return dump(to_json(smoothing_experiment(t, delta, gamma, grid)));
  }, py::arg("table"), py::arg("delta"), py::arg("gamma"), py::arg("grid"));
  m.def("estimate_B", [](const CountTable& t, double w, double s0, const std::vector<std::uint64_t>& grid) {
    std::vector<std::tuple<std::uint64_t, double, double>> out;
    for (const auto& r : estimate_B(t, w, s0, grid)) out.emplace_back(r.N, r.psi, r.ratio);
    return out;
  }, py::arg("table"), py::arg("w"), py::arg("s0"), py::arg("grid"));
}
